#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>

#include "ilpq/verify.hpp"

namespace ilpq::tools {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ns(Clock::time_point from, Clock::time_point to) {
    return std::chrono::duration<double, std::nano>(to - from).count();
}

}  // namespace

double BenchReport::bucket_spread() const {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0;
    for (const WidthBucket& b : buckets) {
        if (b.count == 0) continue;
        lo = std::min(lo, b.mean_ns);
        hi = std::max(hi, b.mean_ns);
    }
    return hi > 0 ? hi / lo : 1.0;
}

std::vector<WidthBucket> default_buckets(std::size_t n) {
    std::vector<WidthBucket> out;
    const std::size_t bounds[][2] = {{1, 99}, {100, 9'999}, {10'000, 1'000'000}};
    for (const auto& b : bounds) {
        if (b[0] > n) break;
        out.push_back({b[0], std::min(b[1], n)});
    }
    return out;
}

double time_build(std::size_t length, std::size_t alphabet, std::uint64_t seed,
                  const BuildOptions& options, std::size_t repeats) {
    std::mt19937_64 rng(seed);
    Text text = random_text(rng, length, alphabet);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < std::max<std::size_t>(1, repeats); ++r) {
        auto start = Clock::now();
        Index idx = Index::build(text, options);
        auto stop = Clock::now();
        best = std::min(best, elapsed_ns(start, stop) * 1e-9);
    }
    return best;
}

BenchReport run_bench(const BenchConfig& config) {
    BenchReport report;
    report.length = config.length;
    std::mt19937_64 rng(config.seed);
    Text text = random_text(rng, config.length, config.alphabet);

    auto start = Clock::now();
    const Index idx = Index::build(std::move(text), config.build);
    report.build_seconds = elapsed_ns(start, Clock::now()) * 1e-9;

    report.buckets = default_buckets(config.length);
    const std::size_t nb = report.buckets.size();
    std::vector<std::vector<QueryRange>> batches(nb);
    for (std::size_t b = 0; b < nb; ++b) {
        WidthBucket& bucket = report.buckets[b];
        bucket.count = config.queries / nb + (b < config.queries % nb ? 1 : 0);
        std::uniform_real_distribution<double> log_width(std::log(double(bucket.lo)),
                                                         std::log(double(bucket.hi) + 1));
        for (std::size_t k = 0; k < bucket.count; ++k) {
            auto width = static_cast<std::size_t>(std::exp(log_width(rng)));
            width = std::clamp<std::size_t>(width, bucket.lo, bucket.hi);
            std::size_t i = uniform_size(rng, 1, config.length - width + 1);
            batches[b].push_back({i, i + width - 1});
        }
    }

    // Batch timings give the means.
    std::size_t checksum = 0;
    double total_ns = 0;
    for (std::size_t b = 0; b < nb; ++b) {
        if (batches[b].empty()) continue;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < std::max<std::size_t>(1, config.repeats); ++r) {
            auto t0 = Clock::now();
            for (const QueryRange& q : batches[b]) checksum += idx.query(q).start;
            best = std::min(best, elapsed_ns(t0, Clock::now()));
        }
        report.buckets[b].mean_ns = best / double(batches[b].size());
        total_ns += best;
    }
    report.queries = config.queries;
    report.mean_ns = config.queries > 0 ? total_ns / double(config.queries) : 0;

    // Per-query samples for the tail; includes clock overhead.
    std::vector<double> samples;
    samples.reserve(config.queries);
    for (const auto& batch : batches) {
        for (const QueryRange& q : batch) {
            auto t0 = Clock::now();
            checksum += idx.query(q).end;
            samples.push_back(elapsed_ns(t0, Clock::now()));
        }
    }
    if (!samples.empty()) {
        std::size_t rank = std::min(samples.size() - 1, samples.size() * 99 / 100);
        std::nth_element(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(rank),
                         samples.end());
        report.p99_ns = samples[rank];
    }
    report.checksum = checksum;
    return report;
}

void print_report(std::ostream& out, const BenchReport& report) {
    out << std::fixed << std::setprecision(1);
    out << "n: " << report.length << "\n";
    out << "build time: " << std::setprecision(4) << report.build_seconds << " s\n";
    out << std::setprecision(1);
    out << "queries: " << report.queries << "\n";
    out << "mean query latency: " << report.mean_ns << " ns\n";
    out << "p99 query latency: " << report.p99_ns << " ns\n";
    for (const WidthBucket& b : report.buckets) {
        out << "width [" << b.lo << ", " << b.hi << "]: ";
        if (b.count == 0) {
            out << "no samples\n";
        } else {
            out << b.count << " queries, mean " << b.mean_ns << " ns\n";
        }
    }
    out << std::setprecision(2) << "bucket spread (max/min mean): " << report.bucket_spread() << "\n";
}

}  // namespace ilpq::tools
