#include "ilpq/verify.hpp"

#include <algorithm>
#include <sstream>

#include "ilpq/oracle.hpp"

namespace ilpq {

std::string Mismatch::describe() const {
    std::ostringstream os;
    if (kind == "mp") {
        os << "mp mismatch: text=\"" << escape_bytes(text) << "\" m=" << i
           << " expected=" << expected << " got=" << got;
    } else {
        os << kind << " mismatch: text=\"" << escape_bytes(text) << "\" i=" << i << " j=" << j
           << " expected=" << expected << " got=" << got;
    }
    return os.str();
}

void OracleReport::merge(const OracleReport& other, std::size_t keep) {
    total_cases += other.total_cases;
    texts += other.texts;
    mismatch_count += other.mismatch_count;
    for (const Mismatch& m : other.mismatches) {
        if (mismatches.size() >= keep) break;
        mismatches.push_back(m);
    }
}

Answer default_query(const Index& idx, QueryRange q) {
    return idx.query(q);
}

std::size_t uniform_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Text random_text(std::mt19937_64& rng, std::size_t length, std::size_t alphabet) {
    std::string s(length, '\0');
    for (char& c : s) {
        std::size_t x = uniform_size(rng, 0, alphabet - 1);
        c = static_cast<char>(alphabet <= 26 ? 'a' + x : x);
    }
    return Text(std::move(s));
}

std::vector<Text> periodic_corpus(std::size_t count, std::size_t max_len) {
    std::string fib_a = "a", fib_b = "ab";
    while (fib_b.size() < max_len) {
        std::string next = fib_b + fib_a;
        fib_a = std::move(fib_b);
        fib_b = std::move(next);
    }
    std::string thue(max_len, 'a');
    for (std::size_t k = 0; k < max_len; ++k) {
        thue[k] = (__builtin_popcountll(k) % 2) ? 'b' : 'a';
    }
    const std::vector<std::string> periods = {"a", "ab", "abc", "aab", "abba", "aabaa", "abaab"};

    std::vector<Text> out;
    for (std::size_t k = 0; out.size() < count; ++k) {
        // Each round cycles through every family at a shorter length.
        const std::size_t families = periods.size() + 2;
        const std::size_t family = k % families;
        const std::size_t len = max_len - (k / families) * 61 % max_len;
        std::string s;
        if (family < periods.size()) {
            const std::string& p = periods[family];
            while (s.size() < len) s += p;
        } else if (family == periods.size()) {
            s = fib_b;
        } else {
            s = thue;
        }
        s.resize(len);
        out.emplace_back(std::move(s));
    }
    return out;
}

namespace {

void record(OracleReport& report, const VerifyConfig& config, Mismatch m) {
    ++report.mismatch_count;
    if (report.mismatches.size() < config.keep_mismatches) {
        report.mismatches.push_back(std::move(m));
    }
}

bool reversed_equal(std::string_view s) {
    return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

void check_query(OracleReport& report, const VerifyConfig& config, const Index& idx,
                 const QueryFn& query, QueryRange q, std::size_t expected) {
    ++report.total_cases;
    Answer a = query(idx, q);
    const std::size_t got = a.end >= a.start ? a.length() : 0;
    if (got != expected) {
        record(report, config, {"query", idx.text().bytes(), q.i, q.j, expected, got});
        return;
    }
    if (a.start < q.i || a.end > q.j || a.start > a.end ||
        !reversed_equal(idx.text().substr(a.start, a.end))) {
        record(report, config, {"span", idx.text().bytes(), q.i, q.j, a.start, a.end});
    }
}

}  // namespace

OracleReport verify_text(const Text& text, const VerifyConfig& config, std::mt19937_64& rng,
                         const QueryFn& query) {
    OracleReport report;
    report.texts = 1;
    Index idx = Index::build(text, config.build);
    const std::size_t n = text.size();

    const MPArray expected_mp = oracle::mp(text);
    for (std::size_t m = 1; m <= expected_mp.size(); ++m) {
        ++report.total_cases;
        if (expected_mp[m] != idx.mp()[m]) {
            record(report, config, {"mp", text.bytes(), m, 0, expected_mp[m], idx.mp()[m]});
        }
    }

    if (n <= config.sweep_cap) {
        oracle::RangeTable table(text);
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = i; j <= n; ++j) {
                check_query(report, config, idx, query, {i, j}, table.longest(i, j));
            }
        }
    } else {
        for (std::size_t k = 0; k < config.queries_per_text; ++k) {
            std::size_t i = uniform_size(rng, 1, n);
            std::size_t j = uniform_size(rng, 1, n);
            if (i > j) std::swap(i, j);
            check_query(report, config, idx, query, {i, j}, oracle::longest_pal(text, {i, j}));
        }
    }
    return report;
}

OracleReport run_verification(const VerifyConfig& config, const QueryFn& query) {
    OracleReport report;
    std::mt19937_64 rng(config.seed);
    for (std::size_t t = 0; t < config.random_texts; ++t) {
        Text text = random_text(rng, uniform_size(rng, 1, config.max_len), config.alphabet);
        report.merge(verify_text(text, config, rng, query), config.keep_mismatches);
    }
    if (config.exhaustive_max_len > 0) {
        for (std::size_t len = 1; len <= config.exhaustive_max_len; ++len) {
            // Odometer over all alphabet^len strings.
            std::vector<std::size_t> digits(len, 0);
            for (;;) {
                std::string s(len, '\0');
                for (std::size_t k = 0; k < len; ++k) {
                    s[k] = static_cast<char>(config.alphabet <= 26 ? 'a' + digits[k] : digits[k]);
                }
                report.merge(verify_text(Text(std::move(s)), config, rng, query), config.keep_mismatches);
                std::size_t k = 0;
                while (k < len && ++digits[k] == config.alphabet) digits[k++] = 0;
                if (k == len) break;
            }
        }
    }
    return report;
}

}  // namespace ilpq
