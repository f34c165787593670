#ifndef ILPQ_ORACLE_HPP
#define ILPQ_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ilpq/manacher.hpp"
#include "ilpq/text.hpp"

// Naive reference implementations for differential testing. Nothing here
// calls into the index structures; the palindrome test is local.
namespace ilpq::oracle {

// Longest palindromic substring length of T[i..j] by center extension
// confined to the range. O((j-i+1)^2) worst case.
std::size_t longest_pal(const Text& text, QueryRange q);

// MP array by extending every one of the 2n-1 centers. Throws BuildError
// for an empty text.
MPArray mp(const Text& text);

// All l >= 1 such that T[j-l+1..j] is a palindrome, ascending.
std::vector<std::size_t> pal_suffixes(const Text& text, std::size_t j);

/*
 * Answers for every range of a text, from the O(n^2) table
 * best(i, j) = max(best(i+1, j), best(i, j-1), j-i+1 if T[i..j] is a palindrome).
 */
class RangeTable {
public:
    explicit RangeTable(const Text& text);

    std::size_t size() const noexcept { return n_; }
    // 1-based, unchecked.
    std::size_t longest(std::size_t i, std::size_t j) const noexcept {
        return best_[(i - 1) * n_ + (j - 1)];
    }
    bool is_palindrome(std::size_t i, std::size_t j) const noexcept {
        return pal_[(i - 1) * n_ + (j - 1)] != 0;
    }

private:
    std::size_t n_;
    std::vector<std::uint32_t> best_;
    std::vector<std::uint8_t> pal_;
};

}  // namespace ilpq::oracle

#endif  // ILPQ_ORACLE_HPP
