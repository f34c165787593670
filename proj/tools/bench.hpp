#ifndef ILPQ_TOOLS_BENCH_HPP
#define ILPQ_TOOLS_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ilpq/index.hpp"

namespace ilpq::tools {

struct BenchConfig {
    std::size_t length = 1'000'000;
    std::size_t queries = 1'000'000;
    std::uint64_t seed = 1;
    std::size_t alphabet = 4;
    BuildOptions build;
    std::size_t repeats = 3;  // best-of for the batch timings
};

// Query widths are drawn log-uniformly from [lo, hi], clamped to n.
struct WidthBucket {
    std::size_t lo = 0;
    std::size_t hi = 0;
    std::size_t count = 0;
    double mean_ns = 0;
};

struct BenchReport {
    std::size_t length = 0;
    double build_seconds = 0;
    std::size_t queries = 0;
    double mean_ns = 0;
    double p99_ns = 0;
    std::vector<WidthBucket> buckets;
    std::size_t checksum = 0;  // folds every answer so queries are not optimized away

    // max / min over the non-empty buckets' means.
    double bucket_spread() const;
};

// Width buckets [1, 100), [100, 10^4), [10^4, 10^6] (the last one clamped to n).
std::vector<WidthBucket> default_buckets(std::size_t n);

BenchReport run_bench(const BenchConfig& config);

// Wall-clock seconds for Index::build on a random text, best of `repeats`.
double time_build(std::size_t length, std::size_t alphabet, std::uint64_t seed,
                  const BuildOptions& options, std::size_t repeats);

void print_report(std::ostream& out, const BenchReport& report);

}  // namespace ilpq::tools

#endif  // ILPQ_TOOLS_BENCH_HPP
