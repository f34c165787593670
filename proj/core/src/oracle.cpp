#include "ilpq/oracle.hpp"

#include <algorithm>

#include "ilpq/error.hpp"

namespace ilpq::oracle {

namespace {

bool palindrome(std::string_view s, std::size_t lo, std::size_t hi) {
    // s[lo..hi], 0-based inclusive
    while (lo < hi) {
        if (s[lo] != s[hi]) return false;
        ++lo;
        --hi;
    }
    return true;
}

}  // namespace

std::size_t longest_pal(const Text& text, QueryRange q) {
    check_range(q, text.size());
    const std::string_view s = text.view();
    const std::size_t lo = q.i - 1;
    const std::size_t hi = q.j - 1;
    std::size_t best = 1;
    // Doubled centers 2*lo .. 2*hi; odd lengths at even doubled centers.
    for (std::size_t c2 = 2 * lo; c2 <= 2 * hi; ++c2) {
        std::size_t left = c2 / 2;
        std::size_t right = (c2 + 1) / 2;
        if (left != right && s[left] != s[right]) continue;
        while (left > lo && right < hi && s[left - 1] == s[right + 1]) {
            --left;
            ++right;
        }
        best = std::max(best, right - left + 1);
    }
    return best;
}

MPArray mp(const Text& text) {
    const std::size_t n = text.size();
    if (n == 0) {
        throw BuildError("empty text");
    }
    const std::string_view s = text.view();
    std::vector<std::uint32_t> out(2 * n - 1);
    for (std::size_t m = 1; m <= 2 * n - 1; ++m) {
        // Entry m has center (m+1)/2 in 1-based positions.
        std::size_t len = 0;
        if (m % 2 == 1) {
            std::size_t c = (m + 1) / 2 - 1;  // 0-based
            std::size_t r = 0;
            while (c >= r + 1 && c + r + 1 < n && s[c - r - 1] == s[c + r + 1]) ++r;
            len = 2 * r + 1;
        } else {
            std::size_t left = m / 2 - 1;  // 0-based left of the gap
            std::size_t r = 0;
            while (left >= r && left + 1 + r < n && s[left - r] == s[left + 1 + r]) ++r;
            len = 2 * r;
        }
        out[m - 1] = static_cast<std::uint32_t>(len);
    }
    return MPArray(std::move(out));
}

std::vector<std::size_t> pal_suffixes(const Text& text, std::size_t j) {
    if (j < 1 || j > text.size()) {
        throw RangeError("pal_suffixes: position out of range");
    }
    std::vector<std::size_t> out;
    for (std::size_t len = 1; len <= j; ++len) {
        if (palindrome(text.view(), j - len, j - 1)) out.push_back(len);
    }
    return out;
}

RangeTable::RangeTable(const Text& text)
    : n_(text.size()), best_(n_ * n_, 0), pal_(n_ * n_, 0) {
    const std::string_view s = text.view();
    auto at = [this](std::size_t i, std::size_t j) { return (i - 1) * n_ + (j - 1); };
    for (std::size_t len = 1; len <= n_; ++len) {
        for (std::size_t i = 1; i + len - 1 <= n_; ++i) {
            const std::size_t j = i + len - 1;
            bool pal = s[i - 1] == s[j - 1] && (len <= 2 || pal_[at(i + 1, j - 1)]);
            pal_[at(i, j)] = pal;
            std::uint32_t best = pal ? static_cast<std::uint32_t>(len) : 0;
            if (len > 1) {
                best = std::max({best, best_[at(i + 1, j)], best_[at(i, j - 1)]});
            }
            best_[at(i, j)] = best;
        }
    }
}

}  // namespace ilpq::oracle
