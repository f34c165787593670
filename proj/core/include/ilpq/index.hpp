#ifndef ILPQ_INDEX_HPP
#define ILPQ_INDEX_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "ilpq/eertree.hpp"
#include "ilpq/manacher.hpp"
#include "ilpq/rmq.hpp"
#include "ilpq/series_tree.hpp"
#include "ilpq/text.hpp"

namespace ilpq {

struct BuildOptions {
    RmqBackend rmq = RmqBackend::block;
    WaqMode waq = WaqMode::chains;
};

// A longest palindromic substring of the query range, as a span of T.
struct Answer {
    std::size_t start = 0;
    std::size_t end = 0;

    std::size_t length() const noexcept { return end - start + 1; }
    Span span() const noexcept { return {start, end}; }
    friend bool operator==(const Answer&, const Answer&) = default;
};

// Longest maximal palindrome centered strictly between the longest
// palindromic prefix and suffix of the range.
struct InfixCandidate {
    std::size_t length = 0;
    std::size_t center_index = 0;  // 1-based index into the MP array
    Span span;                      // meaningful only when length > 0
    friend bool operator==(const InfixCandidate&, const InfixCandidate&) = default;
};

/*
 * Index answering internal longest palindrome queries: for any 1 <= i <= j <= n,
 * a longest palindromic substring of T[i..j] in constant time.
 *
 * The longest palindromic suffix of T[i..j] comes from LSufPal[j], a weighted
 * ancestor query on the series tree of T and one arithmetic step on the
 * progression of the resulting node. The prefix case runs the same procedure
 * on the reversed text. Any longer palindrome must be a maximal palindrome
 * whose center lies strictly between the centers of that prefix and suffix;
 * a range maximum query over the MP array finds the best one.
 *
 * An Index is immutable once built; queries are reentrant.
 */
class Index {
public:
    Index() = default;

    // Throws BuildError for an empty text.
    static Index build(Text text, BuildOptions options = {});

    std::size_t size() const noexcept { return text_.size(); }
    const Text& text() const noexcept { return text_; }
    BuildOptions options() const noexcept { return {rmq_.backend(), forward_series_.mode()}; }

    const Eertree& forward_tree() const noexcept { return forward_; }
    const Eertree& backward_tree() const noexcept { return backward_; }
    const SeriesTree& forward_series() const noexcept { return forward_series_; }
    const SeriesTree& backward_series() const noexcept { return backward_series_; }
    const MPArray& mp() const noexcept { return mp_; }
    const RmqIndex& rmq() const noexcept { return rmq_; }

    // Throws RangeError for an invalid range.
    Answer query(QueryRange q) const;
    // Answers in input order; validates every range before answering any.
    std::vector<Answer> query_batch(std::span<const QueryRange> queries, unsigned threads = 1) const;

    // Length of the longest palindromic suffix / prefix of T[i..j].
    std::size_t longest_pal_suffix(QueryRange q) const;
    std::size_t longest_pal_prefix(QueryRange q) const;

    // t: end of the longest palindromic prefix, s: start of the longest
    // palindromic suffix. nullopt when no center lies strictly between them.
    std::optional<InfixCandidate> infix_candidate(QueryRange q, std::size_t t, std::size_t s) const;

    void save(std::ostream& out) const;
    static Index load(std::istream& in);
    void save_file(const std::filesystem::path& path) const;
    static Index load_file(const std::filesystem::path& path);

private:
    Answer answer(QueryRange q) const;

    Text text_;
    Eertree forward_;
    Eertree backward_;
    SeriesTree forward_series_;
    SeriesTree backward_series_;
    MPArray mp_;
    RmqIndex rmq_;
};

// Longest palindromic suffix of T[i..j] from the eertree and series tree of T
// (1-based i, j, unchecked). Exposed for tests.
std::size_t longest_suffix_palindrome(const Eertree& tree, const SeriesTree& series,
                                      std::size_t i, std::size_t j);

}  // namespace ilpq

#endif  // ILPQ_INDEX_HPP
