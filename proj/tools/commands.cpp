#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "bench.hpp"
#include "ilpq/error.hpp"
#include "ilpq/index.hpp"
#include "ilpq/verify.hpp"

namespace ilpq::tools {

namespace {

// A failure carrying the exit code it maps to.
struct CommandError {
    int code;
    std::string message;
};

Text read_text(const std::string& path) {
    Text text;
    try {
        text = Text::read_file(path);
    } catch (const std::exception& e) {
        throw CommandError{kExitIo, e.what()};
    }
    if (text.empty()) {
        throw CommandError{kExitIo, "input text " + path + " is empty"};
    }
    return text;
}

WaqMode parse_waq(const std::string& name) {
    return name == "walk" ? WaqMode::parent_walk : WaqMode::chains;
}

std::string dot_escape(std::string_view bytes) {
    std::string out;
    for (char ch : escape_bytes(bytes)) {
        if (ch == '\\') out += "\\\\";
        else out += ch;
    }
    return out;
}

std::string node_label(const Eertree& tree, const Text& text, NodeId v) {
    if (v == kImaginaryNode) return "⊥";
    if (v == kEmptyNode) return "ε";
    return "\"" + escape_bytes(tree.palindrome(text, v)) + "\"";
}

// ---------------------------------------------------------------- build

struct BuildArgs {
    std::string text;
    std::string out;
    std::string rmq = "block";
    std::string waq = "chains";
};

int cmd_build(const BuildArgs& a, std::ostream& out) {
    Text text = read_text(a.text);
    auto start = std::chrono::steady_clock::now();
    Index idx = Index::build(std::move(text), {parse_rmq_backend(a.rmq), parse_waq(a.waq)});
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    try {
        idx.save_file(a.out);
    } catch (const std::exception& e) {
        throw CommandError{kExitIo, e.what()};
    }
    out << "n: " << idx.size() << "\n"
        << "forward nodes: " << idx.forward_tree().node_count() << "\n"
        << "backward nodes: " << idx.backward_tree().node_count() << "\n"
        << "distinct palindromes: " << idx.forward_tree().palindrome_count() << "\n"
        << "series tree height: " << idx.forward_series().height() << "\n"
        << "build time: " << std::fixed << std::setprecision(6) << seconds << " s\n";
    return kExitOk;
}

// ---------------------------------------------------------------- query

struct QueryArgs {
    std::string text;
    std::string index;
    std::string queries;
    std::string format = "len";
    std::string rmq = "block";
    unsigned threads = 1;
};

std::vector<QueryRange> read_queries(const std::string& path, std::size_t n) {
    std::ifstream in(path);
    if (!in) {
        throw CommandError{kExitIo, "cannot open " + path};
    }
    std::vector<QueryRange> out;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        long long i = 0, j = 0;
        std::string extra;
        if (!(fields >> i >> j) || (fields >> extra)) {
            throw CommandError{kExitUsage, "line " + std::to_string(lineno) +
                                               ": expected two integers 'i j', got '" + line + "'"};
        }
        if (i < 1 || i > j || static_cast<unsigned long long>(j) > n) {
            throw CommandError{kExitUsage, "line " + std::to_string(lineno) + ": range (" +
                                               std::to_string(i) + ", " + std::to_string(j) +
                                               ") outside 1.." + std::to_string(n)};
        }
        out.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
    }
    return out;
}

int cmd_query(const QueryArgs& a, std::ostream& out) {
    Index idx;
    if (!a.index.empty()) {
        try {
            idx = Index::load_file(a.index);
        } catch (const std::exception& e) {
            throw CommandError{kExitIo, e.what()};
        }
    } else {
        idx = Index::build(read_text(a.text), {parse_rmq_backend(a.rmq)});
    }
    const auto queries = read_queries(a.queries, idx.size());
    const auto answers = idx.query_batch(queries, a.threads);
    for (const Answer& ans : answers) {
        if (a.format == "len") {
            out << ans.length() << "\n";
        } else if (a.format == "span") {
            out << ans.start << " " << ans.end << "\n";
        } else {
            out << idx.text().substr(ans.start, ans.end) << "\n";
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::size_t random = 0;
    std::size_t len = 2000;
    std::size_t alphabet = 2;
    std::uint64_t seed = 1;
    std::size_t exhaustive = 0;
    std::size_t queries = 200;
    std::size_t sweep_cap = 400;
    std::string rmq = "block";
    std::string waq = "chains";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    VerifyConfig config;
    config.random_texts = a.random;
    config.max_len = a.len;
    config.alphabet = a.alphabet;
    config.seed = a.seed;
    config.exhaustive_max_len = a.exhaustive;
    config.queries_per_text = a.queries;
    config.sweep_cap = a.sweep_cap;
    config.build = {parse_rmq_backend(a.rmq), parse_waq(a.waq)};
    if (config.random_texts == 0 && config.exhaustive_max_len == 0) {
        throw CommandError{kExitUsage, "nothing to verify: pass --random N and/or --exhaustive L"};
    }

    const OracleReport report = run_verification(config);
    out << "texts: " << report.texts << "\n"
        << "cases: " << report.total_cases << "\n"
        << "mismatches: " << report.mismatch_count << "\n";
    if (!report.passed()) {
        out << "FAIL\n"
            << "counterexample: " << report.mismatches.front().describe() << "\n";
        return kExitVerify;
    }
    out << "PASS\n";
    return kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
    std::size_t len = 1'000'000;
    std::size_t queries = 1'000'000;
    std::uint64_t seed = 1;
    std::size_t alphabet = 4;
    std::size_t repeats = 3;
    std::string rmq = "block";
    std::string waq = "chains";
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    BenchConfig config;
    config.length = a.len;
    config.queries = a.queries;
    config.seed = a.seed;
    config.alphabet = a.alphabet;
    config.repeats = a.repeats;
    config.build = {parse_rmq_backend(a.rmq), parse_waq(a.waq)};
    out << "rmq backend: " << a.rmq << "\n";
    print_report(out, run_bench(config));
    return kExitOk;
}

// ---------------------------------------------------------------- dump

struct DumpArgs {
    std::string text;
    std::string what;
    bool dot = false;
};

void dump_mp(const MPArray& mp, std::ostream& out) {
    for (std::size_t m = 1; m <= mp.size(); ++m) {
        out << m << " " << (m + 1) / 2 << (m % 2 == 0 ? ".5" : "") << " " << mp[m] << "\n";
    }
}

void dump_eertree(const Eertree& tree, const Text& text, bool dot, std::ostream& out) {
    if (dot) {
        out << "digraph eertree {\n  node [shape=circle];\n";
        for (NodeId v = 0; v < tree.node_count(); ++v) {
            out << "  " << v << " [label=\"" << v << ":" << tree.length(v) << "\"];\n";
        }
        for (NodeId v = 0; v < tree.node_count(); ++v) {
            for (const auto& e : tree.edges(v)) {
                out << "  " << v << " -> " << e.child << " [label=\""
                    << dot_escape(std::string_view(reinterpret_cast<const char*>(&e.label), 1))
                    << "\"];\n";
            }
        }
        for (NodeId v = kEmptyNode; v < tree.node_count(); ++v) {
            out << "  " << v << " -> " << tree.node(v).suffix_link << " [style=dashed];\n";
        }
        for (NodeId v = kEmptyNode + 1; v < tree.node_count(); ++v) {
            out << "  " << v << " -> " << tree.node(v).series_link << " [style=bold];\n";
        }
        out << "}\n";
        return;
    }
    out << "# id length link series delta prog palindrome\n";
    for (NodeId v = 0; v < tree.node_count(); ++v) {
        const PalNode& node = tree.node(v);
        out << v << " " << node.length << " " << node.suffix_link << " ";
        if (v <= kEmptyNode) {
            out << "- - -";
        } else {
            out << node.series_link << " " << node.delta << " " << node.prog.first << ","
                << node.prog.diff << "," << node.prog.count;
        }
        out << " " << node_label(tree, text, v) << "\n";
    }
}

void dump_series(const SeriesTree& st, const Eertree& tree, const Text& text, bool dot,
                 std::ostream& out) {
    if (dot) {
        out << "digraph seriestree {\n  node [shape=circle];\n";
        for (NodeId v = 0; v < st.size(); ++v) {
            if (!st.contains(v)) continue;
            out << "  " << v << " [label=\"" << v << ":" << st.weight(v) << "\"];\n";
        }
        for (NodeId v = 0; v < st.size(); ++v) {
            if (st.contains(v) && v != st.root()) {
                out << "  " << st.parent(v) << " -> " << v << ";\n";
            }
        }
        out << "}\n";
        return;
    }
    out << "# id weight parent depth palindrome\n";
    for (NodeId v = 0; v < st.size(); ++v) {
        if (!st.contains(v)) continue;
        out << v << " " << st.weight(v) << " ";
        if (v == st.root()) out << "-";
        else out << st.parent(v);
        out << " " << st.depth(v) << " " << node_label(tree, text, v) << "\n";
    }
}

int cmd_dump(const DumpArgs& a, std::ostream& out) {
    Text text = read_text(a.text);
    if (a.what == "mp") {
        dump_mp(compute_mp(text), out);
    } else {
        Eertree tree = Eertree::build(text);
        if (a.what == "eertree") {
            dump_eertree(tree, text, a.dot, out);
        } else {
            dump_series(SeriesTree::build(tree), tree, text, a.dot, out);
        }
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ilpq - internal longest palindrome queries"};
    app.require_subcommand(1);
    const auto backends = CLI::IsMember({"sparse", "block"});
    const auto waq_modes = CLI::IsMember({"chains", "walk"});

    BuildArgs build;
    auto* build_cmd = app.add_subcommand("build", "Build an index and write it to a file");
    build_cmd->add_option("--text", build.text, "Input text file (raw bytes)")->required();
    build_cmd->add_option("--out", build.out, "Output index file")->required();
    build_cmd->add_option("--rmq", build.rmq, "Range maximum backend")->check(backends);
    build_cmd->add_option("--waq", build.waq, "Weighted ancestor query mode")->check(waq_modes);

    QueryArgs query;
    auto* query_cmd = app.add_subcommand("query", "Answer longest palindrome queries");
    auto* text_opt = query_cmd->add_option("--text", query.text, "Text file to index on the fly");
    auto* index_opt = query_cmd->add_option("--index", query.index, "Prebuilt index file");
    text_opt->excludes(index_opt);
    query_cmd->add_option("--queries", query.queries, "File with one 'i j' pair per line")->required();
    query_cmd->add_option("--format", query.format, "Output format")
        ->check(CLI::IsMember({"len", "span", "substr"}));
    query_cmd->add_option("--rmq", query.rmq, "Range maximum backend (with --text)")->check(backends);
    query_cmd->add_option("--threads", query.threads, "Worker threads")->check(CLI::Range(1u, 256u));

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Differential test against brute force");
    verify_cmd->add_option("--random", verify.random, "Number of random texts");
    verify_cmd->add_option("--len", verify.len, "Maximum random text length")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--alphabet", verify.alphabet, "Alphabet size")->check(CLI::Range(1, 256));
    verify_cmd->add_option("--seed", verify.seed, "Random seed");
    verify_cmd->add_option("--exhaustive", verify.exhaustive, "Check every string up to this length");
    verify_cmd->add_option("--queries", verify.queries, "Random queries per long text");
    verify_cmd->add_option("--sweep-cap", verify.sweep_cap, "Texts up to this length get every range");
    verify_cmd->add_option("--rmq", verify.rmq, "Range maximum backend")->check(backends);
    verify_cmd->add_option("--waq", verify.waq, "Weighted ancestor query mode")->check(waq_modes);

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Measure build time and query latency");
    bench_cmd->add_option("--len", bench.len, "Random text length")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--queries", bench.queries, "Number of queries")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench.seed, "Random seed");
    bench_cmd->add_option("--alphabet", bench.alphabet, "Alphabet size")->check(CLI::Range(1, 256));
    bench_cmd->add_option("--repeats", bench.repeats, "Timing repeats (best-of)")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--rmq", bench.rmq, "Range maximum backend")->check(backends);
    bench_cmd->add_option("--waq", bench.waq, "Weighted ancestor query mode")->check(waq_modes);

    DumpArgs dump;
    auto* dump_cmd = app.add_subcommand("dump", "Print internal structures");
    dump_cmd->add_option("--text", dump.text, "Input text file")->required();
    dump_cmd->add_option("--what", dump.what, "Structure to print")
        ->required()
        ->check(CLI::IsMember({"eertree", "seriestree", "mp"}));
    dump_cmd->add_flag("--dot", dump.dot, "Graphviz output (eertree, seriestree)");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (query_cmd->parsed() && query.text.empty() && query.index.empty()) {
            throw CLI::ValidationError("query: one of --text or --index is required");
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (build_cmd->parsed()) return cmd_build(build, out);
        if (query_cmd->parsed()) return cmd_query(query, out);
        if (verify_cmd->parsed()) return cmd_verify(verify, out);
        if (bench_cmd->parsed()) return cmd_bench(bench, out);
        return cmd_dump(dump, out);
    } catch (const CommandError& e) {
        err << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

}  // namespace ilpq::tools
