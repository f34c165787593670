#include "ilpq/index.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "ilpq/error.hpp"

namespace ilpq {

std::size_t longest_suffix_palindrome(const Eertree& tree, const SeriesTree& series,
                                      std::size_t i, std::size_t j) {
    const std::size_t width = j - i + 1;

    // Longest palindromic suffix of the whole prefix T[1..j].
    const NodeId v = tree.lsufpal(j);
    if (static_cast<std::size_t>(tree.length(v)) <= width) {
        return static_cast<std::size_t>(tree.length(v));
    }

    // Shortest series-tree ancestor still longer than the range. Its parent
    // is at most `width` long, so the answer lies in u's progression or is
    // the parent itself.
    const NodeId u = series.waq(v, static_cast<std::int64_t>(j - i));
    const ArithProg* prog = &tree.node(u).prog;
    if (prog->first > width) {
        const NodeId below = tree.node(u).series_link;
        if (below <= kEmptyNode) {
            throw InternalError("suffix query: no progression below node " + std::to_string(u));
        }
        prog = &tree.node(below).prog;
        if (prog->first > width) {
            throw InternalError("suffix query: progression of node " + std::to_string(below) +
                                " starts beyond the range");
        }
    }
    return prog->largest_at_most(width);
}

Index Index::build(Text text, BuildOptions options) {
    if (text.empty()) {
        throw BuildError("cannot index an empty text");
    }
    Index idx;
    idx.text_ = std::move(text);
    idx.forward_ = Eertree::build(idx.text_);
    idx.backward_ = Eertree::build(idx.text_.reversed());
    idx.forward_series_ = SeriesTree::build(idx.forward_, options.waq);
    idx.backward_series_ = SeriesTree::build(idx.backward_, options.waq);
    idx.mp_ = compute_mp(idx.text_);
    idx.rmq_ = RmqIndex::build(std::vector<std::uint32_t>(idx.mp_.values().begin(), idx.mp_.values().end()),
                               options.rmq);
    return idx;
}

std::size_t Index::longest_pal_suffix(QueryRange q) const {
    check_range(q, size());
    return longest_suffix_palindrome(forward_, forward_series_, q.i, q.j);
}

std::size_t Index::longest_pal_prefix(QueryRange q) const {
    check_range(q, size());
    const std::size_t n = size();
    return longest_suffix_palindrome(backward_, backward_series_, n + 1 - q.j, n + 1 - q.i);
}

std::optional<InfixCandidate> Index::infix_candidate(QueryRange q, std::size_t t,
                                                     std::size_t s) const {
    // Centers c with (i+t)/2 < c < (s+j)/2 are MP indices i+t .. s+j-2.
    const std::size_t lo = q.i + t;
    const std::size_t hi = s + q.j;
    if (hi < 2 || lo > hi - 2) {
        return std::nullopt;
    }
    const std::size_t k = rmq_.argmax(lo - 1, hi - 3) + 1;
    InfixCandidate out;
    out.center_index = k;
    out.length = mp_[k];
    if (out.length > 0) {
        out.span = *mp_.maximal_palindrome_at(k);
    }
    return out;
}

Answer Index::answer(QueryRange q) const {
    const std::size_t n = size();
    const std::size_t prefix =
        longest_suffix_palindrome(backward_, backward_series_, n + 1 - q.j, n + 1 - q.i);
    const std::size_t suffix = longest_suffix_palindrome(forward_, forward_series_, q.i, q.j);
    const std::size_t t = q.i + prefix - 1;
    const std::size_t s = q.j - suffix + 1;

    // Candidates in order prefix, infix, suffix; only a strictly longer one
    // replaces the current best, so ties keep the leftmost start.
    Answer best{q.i, t};
    if (auto infix = infix_candidate(q, t, s); infix && infix->length > best.length()) {
        best = {infix->span.start, infix->span.end};
    }
    if (suffix > best.length()) {
        best = {s, q.j};
    }
    return best;
}

Answer Index::query(QueryRange q) const {
    check_range(q, size());
    return answer(q);
}

std::vector<Answer> Index::query_batch(std::span<const QueryRange> queries, unsigned threads) const {
    for (const QueryRange& q : queries) {
        check_range(q, size());
    }
    std::vector<Answer> out(queries.size());
    const std::size_t workers =
        std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, queries.size() / 1024));
    if (workers <= 1) {
        for (std::size_t k = 0; k < queries.size(); ++k) out[k] = answer(queries[k]);
        return out;
    }
    const std::size_t chunk = (queries.size() + workers - 1) / workers;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(queries.size(), begin + chunk);
            pool.emplace_back([this, &queries, &out, begin, end] {
                for (std::size_t k = begin; k < end; ++k) out[k] = answer(queries[k]);
            });
        }
    }  // joins
    return out;
}

}  // namespace ilpq
