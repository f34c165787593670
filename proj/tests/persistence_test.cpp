#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "ilpq/error.hpp"
#include "ilpq/index.hpp"
#include "test_support.hpp"

namespace ilpq {
namespace {

std::string serialize(const Index& idx) {
    std::ostringstream out;
    idx.save(out);
    return out.str();
}

Index deserialize(const std::string& bytes) {
    std::istringstream in(bytes);
    return Index::load(in);
}

std::uint64_t read_le(const std::string& s, std::size_t at, int width) {
    std::uint64_t v = 0;
    for (int k = 0; k < width; ++k) v |= std::uint64_t(static_cast<unsigned char>(s[at + k])) << (8 * k);
    return v;
}

TEST(Persistence, HeaderLayout) {
    const std::string file = serialize(Index::build(Text(testing::kSample)));
    ASSERT_GE(file.size(), 20u);
    EXPECT_EQ(file.substr(0, 4), "ILPQ");
    EXPECT_EQ(read_le(file, 4, 4), 1u);    // version
    EXPECT_EQ(read_le(file, 8, 8), 14u);   // n
    EXPECT_EQ(read_le(file, 16, 4), 7u);   // sections
    std::vector<std::string> tags;
    std::size_t expected_offset = 20 + 7 * 20;
    for (std::size_t k = 0; k < 7; ++k) {
        const std::size_t entry = 20 + k * 20;
        tags.push_back(file.substr(entry, 4));
        EXPECT_EQ(read_le(file, entry + 4, 8), expected_offset);
        expected_offset += read_le(file, entry + 12, 8);
    }
    EXPECT_EQ(expected_offset, file.size());
    EXPECT_EQ(tags, (std::vector<std::string>{"TEXT", "MPAR", "FEER", "BEER", "FSER", "BSER", "RMQT"}));
    // TEXT section is the raw text
    EXPECT_EQ(file.substr(read_le(file, 24, 8), 14), testing::kSample);
}

TEST(Persistence, RoundTripPreservesAnswers) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 12; ++trial) {
        BuildOptions options{trial % 2 ? RmqBackend::sparse : RmqBackend::block,
                             trial % 3 ? WaqMode::chains : WaqMode::parent_walk};
        Text text = random_text(rng, uniform_size(rng, 1, 3000), 2 + trial % 3);
        Index original = Index::build(text, options);
        Index loaded = deserialize(serialize(original));
        EXPECT_EQ(loaded.options().rmq, options.rmq);
        EXPECT_EQ(loaded.options().waq, options.waq);
        EXPECT_EQ(loaded.text(), text);
        for (int k = 0; k < 10'000; ++k) {
            std::size_t i = uniform_size(rng, 1, text.size());
            std::size_t j = uniform_size(rng, i, text.size());
            ASSERT_EQ(loaded.query({i, j}), original.query({i, j}));
        }
    }
}

TEST(Persistence, FileRoundTrip) {
    const auto path = std::filesystem::temp_directory_path() / "ilpq_persistence_test.idx";
    Index idx = Index::build(Text("racecar_level_noon"));
    idx.save_file(path);
    Index loaded = Index::load_file(path);
    EXPECT_EQ(loaded.query({1, 18}), idx.query({1, 18}));
    std::filesystem::remove(path);
    EXPECT_ANY_THROW(Index::load_file(path));
}

TEST(Persistence, RejectsBadMagicAndVersion) {
    std::string file = serialize(Index::build(Text("abba")));
    std::string bad_magic = file;
    bad_magic[0] = 'X';
    EXPECT_THROW(deserialize(bad_magic), FormatError);
    std::string bad_version = file;
    bad_version[4] = 2;
    EXPECT_THROW(deserialize(bad_version), FormatError);
    EXPECT_THROW(deserialize(""), FormatError);
}

TEST(Persistence, EveryTruncationIsRejected) {
    const std::string file = serialize(Index::build(Text("abaabaab")));
    for (std::size_t len = 0; len < file.size(); ++len) {
        EXPECT_THROW(deserialize(file.substr(0, len)), FormatError) << "prefix " << len;
    }
}

TEST(Persistence, CorruptedBytesNeverCrash) {
    const std::string file = serialize(Index::build(Text("abaabaababab")));
    std::mt19937_64 rng(1);
    std::size_t rejected = 0;
    for (std::size_t at = 0; at < file.size(); ++at) {
        std::string bad = file;
        bad[at] = static_cast<char>(bad[at] ^ (1 + rng() % 255));
        try {
            Index idx = deserialize(bad);
            // Accepted corruptions must still answer consistently.
            for (std::size_t i = 1; i <= idx.size(); ++i) {
                for (std::size_t j = i; j <= idx.size(); ++j) {
                    Answer a = idx.query({i, j});
                    ASSERT_TRUE(i <= a.start && a.start <= a.end && a.end <= j) << "byte " << at;
                }
            }
        } catch (const Error&) {
            ++rejected;
        }
    }
    EXPECT_GT(rejected, file.size() / 2);
}

}  // namespace
}  // namespace ilpq
