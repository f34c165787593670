#include <gtest/gtest.h>

#include <random>

#include "ilpq/error.hpp"
#include "ilpq/oracle.hpp"
#include "test_support.hpp"

namespace ilpq {
namespace {

using testing::kRunSample;
using testing::kSample;

TEST(Oracle, LongestPalindrome) {
    EXPECT_EQ(oracle::longest_pal(Text("aabbaa"), {1, 6}), 6u);
    EXPECT_EQ(oracle::longest_pal(Text(kSample), {1, 14}), 9u);
    EXPECT_EQ(oracle::longest_pal(Text(kSample), {2, 14}), 7u);
    Text t("abcabc");
    for (std::size_t i = 1; i <= t.size(); ++i) EXPECT_EQ(oracle::longest_pal(t, {i, i}), 1u);
    EXPECT_THROW(oracle::longest_pal(t, {3, 2}), RangeError);
}

TEST(Oracle, MaximalPalindromes) {
    auto aba = oracle::mp(Text("aba"));
    EXPECT_EQ(std::vector<std::uint32_t>(aba.values().begin(), aba.values().end()),
              (std::vector<std::uint32_t>{1, 0, 3, 0, 1}));
    EXPECT_EQ(oracle::mp(Text("x")).size(), 1u);
    EXPECT_THROW(oracle::mp(Text("")), BuildError);
}

TEST(Oracle, PalindromicSuffixes) {
    const Text runs(kRunSample);
    auto suffixes = oracle::pal_suffixes(runs, runs.size());
    EXPECT_EQ(suffixes, (std::vector<std::size_t>{1, 3, 5, 7, 14, 21, 43}));
    EXPECT_EQ(oracle::pal_suffixes(Text("abc"), 1), (std::vector<std::size_t>{1}));
    EXPECT_EQ(oracle::pal_suffixes(Text("aaaa"), 4), (std::vector<std::size_t>{1, 2, 3, 4}));
}

TEST(Oracle, DifSequenceIsNonDecreasing) {
    std::mt19937_64 rng(5);
    auto check = [](const Text& t, std::size_t j) {
        auto s = oracle::pal_suffixes(t, j);
        std::size_t prev = 0;
        for (std::size_t k = 1; k < s.size(); ++k) {
            std::size_t dif = s[k] - s[k - 1];
            ASSERT_GE(dif, prev) << escape_bytes(t.view()) << " j=" << j;
            prev = dif;
        }
    };
    for (int k = 0; k < 200; ++k) {
        Text t = random_text(rng, uniform_size(rng, 1, 300), 2);
        check(t, uniform_size(rng, 1, t.size()));
    }
    for (const Text& t : periodic_corpus(20, 200)) {
        for (std::size_t j = 1; j <= t.size(); j += 7) check(t, j);
    }
}

TEST(Oracle, RangeTableAgreesWithCenterExtension) {
    std::mt19937_64 rng(9);
    for (int k = 0; k < 50; ++k) {
        Text t = random_text(rng, uniform_size(rng, 1, 60), 1 + k % 3);
        oracle::RangeTable table(t);
        for (std::size_t i = 1; i <= t.size(); ++i) {
            for (std::size_t j = i; j <= t.size(); ++j) {
                ASSERT_EQ(table.longest(i, j), oracle::longest_pal(t, {i, j}));
                ASSERT_EQ(table.is_palindrome(i, j), testing::is_pal(t.substr(i, j)));
            }
        }
    }
}

}  // namespace
}  // namespace ilpq
