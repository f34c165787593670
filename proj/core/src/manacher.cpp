#include "ilpq/manacher.hpp"

#include <algorithm>
#include <string>

#include "ilpq/error.hpp"

namespace ilpq {

MPArray::MPArray(std::vector<std::uint32_t> lengths) : lengths_(std::move(lengths)) {
    if (lengths_.size() % 2 == 0) {
        throw BuildError("MP array must have odd length 2n-1, got " +
                         std::to_string(lengths_.size()));
    }
}

std::uint32_t MPArray::at(std::size_t m) const {
    if (m < 1 || m > size()) {
        throw RangeError("center index " + std::to_string(m) + " outside 1.." +
                         std::to_string(size()));
    }
    return (*this)[m];
}

std::optional<Span> MPArray::maximal_palindrome_at(std::size_t m) const {
    std::uint32_t len = at(m);
    if (len == 0) {
        return std::nullopt;
    }
    // 2c = m + 1; start = c - (len-1)/2 and end = c + (len-1)/2, doubled to
    // stay in integers.
    std::size_t twice_center = doubled_center(m);
    return Span{(twice_center - (len - 1)) / 2, (twice_center + (len - 1)) / 2};
}

void MPArray::save(io::ByteWriter& out) const {
    out.array(lengths_);
}

MPArray MPArray::load(io::ByteReader& in) {
    auto lengths = in.array<std::uint32_t>();
    if (lengths.empty()) {
        throw FormatError("empty MP array");
    }
    if (lengths.size() % 2 == 0) {
        throw FormatError("MP array length must be odd");
    }
    std::size_t n = (lengths.size() + 1) / 2;
    for (std::size_t m = 1; m <= lengths.size(); ++m) {
        std::uint32_t len = lengths[m - 1];
        // Parity must match the center kind, and the palindrome must fit.
        if ((len % 2 == 1) != (m % 2 == 1) || len > n) {
            throw FormatError("MP entry " + std::to_string(m) + " is inconsistent");
        }
        std::size_t twice_center = m + 1;
        if (len > 0 && ((twice_center - (len - 1)) / 2 < 1 || (twice_center + (len - 1)) / 2 > n)) {
            throw FormatError("MP entry " + std::to_string(m) + " exceeds the text");
        }
    }
    return MPArray(std::move(lengths));
}

MPArray compute_mp(const Text& text) {
    const std::size_t n = text.size();
    if (n == 0) {
        throw BuildError("cannot compute maximal palindromes of an empty text");
    }
    if (n > kMaxTextLength) {
        throw BuildError("text too long");
    }
    const std::string_view s = text.view();

    // odd[p]: radius r such that s[p-r+1 .. p+r-1] is the maximal odd palindrome at p.
    // even[p]: radius r such that s[p-r .. p+r-1] is the maximal even palindrome
    // centered between p-1 and p (0-based).
    std::vector<std::size_t> odd(n), even(n);
    for (std::size_t p = 0, lo = 0, hi = 0; p < n; ++p) {
        // [lo, hi) is the rightmost odd palindrome found so far.
        std::size_t r = p < hi ? std::min(hi - p, odd[lo + hi - 1 - p]) : 1;
        while (p + r < n && p >= r && s[p - r] == s[p + r]) {
            ++r;
        }
        odd[p] = r;
        if (p + r > hi) {
            lo = p + 1 - r;
            hi = p + r;
        }
    }
    for (std::size_t p = 0, lo = 0, hi = 0; p < n; ++p) {
        // [lo, hi) is the rightmost even palindrome found so far.
        std::size_t r = p < hi ? std::min(hi - p, even[lo + hi - p]) : 0;
        while (p + r < n && p >= r + 1 && s[p - r - 1] == s[p + r]) {
            ++r;
        }
        even[p] = r;
        if (p + r > hi) {
            lo = p - r;
            hi = p + r;
        }
    }

    std::vector<std::uint32_t> lengths(2 * n - 1);
    for (std::size_t p = 0; p < n; ++p) {
        lengths[2 * p] = static_cast<std::uint32_t>(2 * odd[p] - 1);
        if (p + 1 < n) {
            lengths[2 * p + 1] = static_cast<std::uint32_t>(2 * even[p + 1]);
        }
    }
    return MPArray(std::move(lengths));
}

}  // namespace ilpq
