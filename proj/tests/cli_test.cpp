#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "ilpq/verify.hpp"
#include "test_support.hpp"

namespace ilpq {
namespace {

namespace fs = std::filesystem;
using tools::run;

struct Result {
    int code;
    std::string out;
    std::string err;
};

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("ilpq_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& content) {
        auto path = dir_ / name;
        std::ofstream(path, std::ios::binary) << content;
        return path.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    Result call(std::vector<std::string> args) {
        args.insert(args.begin(), "ilpq");
        std::ostringstream out, err;
        int code = run(args, out, err);
        return {code, out.str(), err.str()};
    }

    fs::path dir_;
};

TEST_F(Cli, BuildSingleByte) {
    auto r = call({"build", "--text", file("t", "z"), "--out", path("t.idx")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("n: 1\n"), std::string::npos);
    EXPECT_NE(r.out.find("build time:"), std::string::npos);
    EXPECT_TRUE(fs::exists(path("t.idx")));
}

TEST_F(Cli, BuildThenQueryIndex) {
    auto text = file("sample", testing::kSample);
    ASSERT_EQ(call({"build", "--text", text, "--out", path("f.idx"), "--rmq", "sparse"}).code, 0);
    auto q = file("q", "1 14\n2 14\n\n3 3\n");
    auto r = call({"query", "--index", path("f.idx"), "--queries", q, "--format", "substr"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "abaabaaba\nbaabaab\na\n");
}

TEST_F(Cli, QueryFormats) {
    auto text = file("t", "aabbaa");
    auto r = call({"query", "--text", text, "--queries", file("q", "1 6\n"), "--format", "span"});
    EXPECT_EQ(r.out, "1 6\n");
    r = call({"query", "--text", text, "--queries", file("q2", "3 3\n"), "--format", "len"});
    EXPECT_EQ(r.out, "1\n");
    r = call({"query", "--text", text, "--queries", file("q3", "1 6\n2 5\n"), "--threads", "3"});
    EXPECT_EQ(r.out, "6\n4\n");
}

TEST_F(Cli, QueryErrorsNameTheLine) {
    auto text = file("t", "aabbaa");
    auto r = call({"query", "--text", text, "--queries", file("q", "1 2\n1 x\n")});
    EXPECT_EQ(r.code, tools::kExitUsage);
    EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
    r = call({"query", "--text", text, "--queries", file("q2", "1 2\n2 2\n4 7\n")});
    EXPECT_EQ(r.code, tools::kExitUsage);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
    r = call({"query", "--text", text, "--queries", file("q3", "1 2 3\n")});
    EXPECT_EQ(r.code, tools::kExitUsage);
    r = call({"query", "--queries", file("q4", "1 1\n")});
    EXPECT_EQ(r.code, tools::kExitUsage);
}

TEST_F(Cli, IoErrors) {
    EXPECT_EQ(call({"build", "--text", path("missing"), "--out", path("o")}).code, tools::kExitIo);
    EXPECT_EQ(call({"build", "--text", file("empty", ""), "--out", path("o")}).code, tools::kExitIo);
    auto r = call({"query", "--index", file("junk", "not an index"), "--queries", file("q", "1 1\n")});
    EXPECT_EQ(r.code, tools::kExitIo);
    EXPECT_FALSE(r.err.empty());
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(call({}).code, tools::kExitUsage);
    EXPECT_EQ(call({"dump", "--text", file("t", "x"), "--what", "suffixtree"}).code, tools::kExitUsage);
    EXPECT_EQ(call({"bench", "--rmq", "fenwick"}).code, tools::kExitUsage);
    EXPECT_EQ(call({"verify"}).code, tools::kExitUsage);
    EXPECT_EQ(call({"--help"}).code, 0);
}

TEST_F(Cli, VerifyPasses) {
    auto r = call({"verify", "--exhaustive", "8"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    r = call({"verify", "--random", "20", "--len", "2000", "--alphabet", "4", "--seed", "7"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("mismatches: 0"), std::string::npos);
}

TEST_F(Cli, VerifyIsDeterministic) {
    auto a = call({"verify", "--random", "5", "--len", "900", "--seed", "3"});
    auto b = call({"verify", "--random", "5", "--len", "900", "--seed", "3"});
    EXPECT_EQ(a.out, b.out);
}

// Step 3 with its bound off by one must be caught with a reproducible case.
TEST(VerifyHarness, CatchesOffByOneInStepThree) {
    auto mutated_suffix = [](const Eertree& t, const SeriesTree& st, std::size_t i, std::size_t j) {
        const std::size_t width = j - i + 1;
        const NodeId v = t.lsufpal(j);
        if (static_cast<std::size_t>(t.length(v)) <= width) return static_cast<std::size_t>(t.length(v));
        const NodeId u = st.waq(v, static_cast<std::int64_t>(j - i));
        const ArithProg* p = &t.node(u).prog;
        if (p->first > width) p = &t.node(t.node(u).series_link).prog;
        const std::size_t bound = width - 1;  // mutation
        return bound < p->first ? std::size_t{p->first} : std::size_t{p->largest_at_most(bound)};
    };
    QueryFn mutated = [&](const Index& idx, QueryRange q) {
        const std::size_t n = idx.size();
        std::size_t prefix = mutated_suffix(idx.backward_tree(), idx.backward_series(), n + 1 - q.j, n + 1 - q.i);
        std::size_t suffix = mutated_suffix(idx.forward_tree(), idx.forward_series(), q.i, q.j);
        Answer best{q.i, q.i + prefix - 1};
        auto infix = idx.infix_candidate(q, q.i + prefix - 1, q.j - suffix + 1);
        if (infix && infix->length > best.length()) best = {infix->span.start, infix->span.end};
        if (suffix > best.length()) best = {q.j - suffix + 1, q.j};
        return best;
    };
    VerifyConfig config;
    config.exhaustive_max_len = 7;
    OracleReport report = run_verification(config, mutated);
    ASSERT_FALSE(report.passed());
    const Mismatch& m = report.mismatches.front();
    EXPECT_NE(m.describe().find("text=\"" + m.text + "\""), std::string::npos);

    // The unmutated procedure passes the same sweep.
    EXPECT_TRUE(run_verification(config).passed());
}

TEST_F(Cli, DumpMp) {
    auto r = call({"dump", "--text", file("t", "aba"), "--what", "mp"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 1 1\n2 1.5 0\n3 2 3\n4 2.5 0\n5 3 1\n");
}

TEST_F(Cli, DumpEertreeSingleCharacter) {
    auto r = call({"dump", "--text", file("t", "x"), "--what", "eertree"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "# id length link series delta prog palindrome\n"
              "0 -1 0 - - - ⊥\n"
              "1 0 0 - - - ε\n"
              "2 1 1 1 1 1,1,1 \"x\"\n");
}

TEST_F(Cli, DumpSample) {
    auto text = file("sample", testing::kSample);
    Eertree t = Eertree::build(Text(testing::kSample));
    const auto v9 = std::to_string(*t.find("abaabaaba"));
    const auto v3 = std::to_string(*t.find("aba"));

    auto series = call({"dump", "--text", text, "--what", "seriestree", "--dot"});
    EXPECT_EQ(series.code, 0);
    EXPECT_NE(series.out.find("  " + v3 + " -> " + v9 + ";"), std::string::npos) << series.out;
    EXPECT_NE(series.out.find("[label=\"" + v9 + ":9\"]"), std::string::npos);

    auto dot = call({"dump", "--text", text, "--what", "eertree", "--dot"});
    EXPECT_NE(dot.out.find("  " + v9 + " -> " + v3 + " [style=bold];"), std::string::npos);
    EXPECT_NE(dot.out.find("[style=dashed]"), std::string::npos);
    EXPECT_NE(dot.out.find("[label=\"a\"]"), std::string::npos);

    auto plain = call({"dump", "--text", text, "--what", "seriestree"});
    EXPECT_NE(plain.out.find(v9 + " 9 " + v3 + " "), std::string::npos) << plain.out;
}

TEST_F(Cli, BenchSingleQuery) {
    auto r = call({"bench", "--len", "1000", "--queries", "1", "--seed", "2"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("queries: 1\n"), std::string::npos);
    EXPECT_NE(r.out.find("mean query latency"), std::string::npos);
    EXPECT_NE(r.out.find("p99 query latency"), std::string::npos);
}

}  // namespace
}  // namespace ilpq
