#include <gtest/gtest.h>

#include <random>

#include "ilpq/error.hpp"
#include "ilpq/rmq.hpp"

namespace ilpq {
namespace {

std::size_t scan(const std::vector<std::uint32_t>& a, std::size_t i, std::size_t j) {
    std::size_t best = i;
    for (std::size_t k = i; k <= j; ++k) {
        if (a[k - 1] > a[best - 1]) best = k;
    }
    return best;
}

TEST(Rmq, Examples) {
    for (RmqBackend backend : {RmqBackend::sparse, RmqBackend::block}) {
        auto r = RmqIndex::build({3, 1, 4, 1, 5}, backend);
        EXPECT_EQ(r.query(1, 5), 5u);
        EXPECT_EQ(r.query(1, 3), 3u);
        for (std::size_t i = 1; i <= 5; ++i) EXPECT_EQ(r.query(i, i), i);
        EXPECT_EQ(RmqIndex::build({2, 7, 7, 1}, backend).query(1, 4), 2u);
        EXPECT_EQ(RmqIndex::build({5}, backend).query(1, 1), 1u);
    }
}

TEST(Rmq, Errors) {
    EXPECT_THROW(RmqIndex::build({}), BuildError);
    EXPECT_THROW(RmqIndex::build({1, 2}, RmqBackend::block, 9), BuildError);
    auto r = RmqIndex::build({1, 2, 3});
    EXPECT_THROW(r.query(0, 1), RangeError);
    EXPECT_THROW(r.query(2, 1), RangeError);
    EXPECT_THROW(r.query(1, 4), RangeError);
}

TEST(Rmq, BackendNames) {
    EXPECT_EQ(parse_rmq_backend("sparse"), RmqBackend::sparse);
    EXPECT_EQ(parse_rmq_backend("block"), RmqBackend::block);
    EXPECT_EQ(to_string(RmqBackend::block), "block");
    EXPECT_THROW(parse_rmq_backend("segment"), std::invalid_argument);
}

// Every array of length <= 8 over 0..3, every range, several block sizes.
TEST(Rmq, ExhaustiveSmallArrays) {
    for (std::size_t m = 1; m <= 8; ++m) {
        std::vector<std::uint32_t> a(m, 0);
        for (;;) {
            auto sparse = RmqIndex::build(a, RmqBackend::sparse);
            auto b2 = RmqIndex::build(a, RmqBackend::block, 2);
            auto b3 = RmqIndex::build(a, RmqBackend::block, 3);
            for (std::size_t i = 1; i <= m; ++i) {
                for (std::size_t j = i; j <= m; ++j) {
                    const std::size_t want = scan(a, i, j);
                    ASSERT_EQ(sparse.query(i, j), want);
                    ASSERT_EQ(b2.query(i, j), want);
                    ASSERT_EQ(b3.query(i, j), want);
                }
            }
            std::size_t k = 0;
            while (k < m && ++a[k] == 4) a[k++] = 0;
            if (k == m) break;
        }
    }
}

TEST(Rmq, RandomAgainstScan) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10'000; ++trial) {
        const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 500)(rng);
        const std::uint32_t hi = trial % 2 ? 3 : 1'000'000;
        std::vector<std::uint32_t> a(m);
        for (auto& x : a) x = std::uniform_int_distribution<std::uint32_t>(0, hi)(rng);
        const std::size_t block = trial % 9;  // 0 = default
        auto r = RmqIndex::build(a, trial % 3 == 0 ? RmqBackend::sparse : RmqBackend::block, block);
        std::size_t i = std::uniform_int_distribution<std::size_t>(1, m)(rng);
        std::size_t j = std::uniform_int_distribution<std::size_t>(1, m)(rng);
        if (i > j) std::swap(i, j);
        ASSERT_EQ(r.query(i, j), scan(a, i, j)) << "m=" << m << " block=" << r.block_size();
    }
}

TEST(Rmq, BlockTypesAreShared) {
    std::vector<std::uint32_t> a(4096);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = static_cast<std::uint32_t>(k % 4);
    auto r = RmqIndex::build(a, RmqBackend::block, 4);
    // Every full block is 0 1 2 3: a single Cartesian tree shape.
    EXPECT_EQ(r.block_type_count(), 1u);
    EXPECT_EQ(r.query(1, 4096), 4u);
}

TEST(Rmq, DefaultBlockSizeGrowsSlowly) {
    EXPECT_EQ(RmqIndex::build(std::vector<std::uint32_t>(10, 0)).block_size(), 1u);
    EXPECT_EQ(RmqIndex::build(std::vector<std::uint32_t>(2'000'000, 0)).block_size(), 6u);
}

TEST(Rmq, SaveLoadRoundTrip) {
    std::mt19937_64 rng(5);
    std::vector<std::uint32_t> a(1000);
    for (auto& x : a) x = static_cast<std::uint32_t>(rng() % 50);
    for (RmqBackend backend : {RmqBackend::sparse, RmqBackend::block}) {
        auto r = RmqIndex::build(a, backend);
        io::ByteWriter w;
        r.save(w);
        io::ByteReader in(w.buffer());
        EXPECT_EQ(RmqIndex::load(in), r);
    }
}

}  // namespace
}  // namespace ilpq
