#ifndef ILPQ_MANACHER_HPP
#define ILPQ_MANACHER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ilpq/binary_io.hpp"
#include "ilpq/text.hpp"

namespace ilpq {

/*
 * Lengths of all maximal palindromes of a text of length n, indexed by
 * doubled center. Entry m (1-based, 1 <= m <= 2n-1) holds the length of the
 * maximal palindrome centered at c = (m+1)/2, so integer centers sit at odd
 * m and half-integer centers at even m. Even entries may be 0.
 */
class MPArray {
public:
    MPArray() = default;
    // Throws BuildError unless lengths.size() is odd.
    explicit MPArray(std::vector<std::uint32_t> lengths);

    std::size_t size() const noexcept { return lengths_.size(); }
    std::size_t text_size() const noexcept { return (lengths_.size() + 1) / 2; }

    // 1-based, unchecked.
    std::uint32_t operator[](std::size_t m) const noexcept { return lengths_[m - 1]; }
    // 1-based, throws RangeError.
    std::uint32_t at(std::size_t m) const;

    // Entry m as a 0-based span (element m-1 is entry m).
    std::span<const std::uint32_t> values() const noexcept { return lengths_; }

    // Twice the center of entry m, i.e. m + 1.
    static std::size_t doubled_center(std::size_t m) noexcept { return m + 1; }

    // Text span of the maximal palindrome at center index m, or nullopt for
    // a length-0 entry. Throws RangeError for m outside 1..2n-1.
    std::optional<Span> maximal_palindrome_at(std::size_t m) const;

    void save(io::ByteWriter& out) const;
    static MPArray load(io::ByteReader& in);

    friend bool operator==(const MPArray&, const MPArray&) = default;

private:
    std::vector<std::uint32_t> lengths_;
};

// Manacher's algorithm. Linear time; throws BuildError for an empty text.
MPArray compute_mp(const Text& text);

}  // namespace ilpq

#endif  // ILPQ_MANACHER_HPP
