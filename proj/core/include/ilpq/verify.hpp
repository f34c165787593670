#ifndef ILPQ_VERIFY_HPP
#define ILPQ_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ilpq/index.hpp"
#include "ilpq/text.hpp"

namespace ilpq {

struct Mismatch {
    std::string kind;  // "query", "span" or "mp"
    std::string text;
    std::size_t i = 0;  // for "mp": the center index
    std::size_t j = 0;
    std::size_t expected = 0;
    std::size_t got = 0;

    // Self-contained reproduction line.
    std::string describe() const;
};

struct OracleReport {
    std::size_t total_cases = 0;
    std::size_t texts = 0;
    std::size_t mismatch_count = 0;
    std::vector<Mismatch> mismatches;  // the first few, in discovery order

    bool passed() const noexcept { return mismatch_count == 0; }
    void merge(const OracleReport& other, std::size_t keep = 16);
};

struct VerifyConfig {
    std::size_t random_texts = 0;       // texts of length uniform in [1, max_len]
    std::size_t max_len = 2000;
    std::size_t alphabet = 2;           // <= 26: letters from 'a'; otherwise bytes
    std::uint64_t seed = 1;
    std::size_t queries_per_text = 200;
    std::size_t exhaustive_max_len = 0; // all strings of length 1..this over the alphabet
    std::size_t sweep_cap = 400;        // texts up to this length get every (i, j)
    BuildOptions build;
    std::size_t keep_mismatches = 16;
};

// Answers one query; swap in a different function to test the harness.
using QueryFn = std::function<Answer(const Index&, QueryRange)>;

Answer default_query(const Index& idx, QueryRange q);

// Differential check of one text: MP array against the naive one, then
// queries (all ranges if n <= sweep_cap, else `queries_per_text` random ones).
OracleReport verify_text(const Text& text, const VerifyConfig& config, std::mt19937_64& rng,
                         const QueryFn& query = default_query);

// Runs the random and exhaustive parts of `config`.
OracleReport run_verification(const VerifyConfig& config, const QueryFn& query = default_query);

// Corpus helpers, deterministic for a given generator state.
Text random_text(std::mt19937_64& rng, std::size_t length, std::size_t alphabet);
std::size_t uniform_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi);
// Highly periodic texts of length <= max_len: a^k, (ab)^k, Fibonacci words,
// Thue-Morse prefixes and the like.
std::vector<Text> periodic_corpus(std::size_t count, std::size_t max_len);

}  // namespace ilpq

#endif  // ILPQ_VERIFY_HPP
