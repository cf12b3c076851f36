// Command-line front end: solve / check / oracle / gen / fuzz / bench.
//
// Exit codes are a stable contract:
//   0 ok, 1 parse error, 2 not a block graph, 3 invalid assignment,
//   4 oracle cap exceeded, 5 fuzz mismatch.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "iidom/block_cut.hpp"
#include "iidom/dp.hpp"
#include "iidom/fuzz.hpp"
#include "iidom/generator.hpp"
#include "iidom/graph.hpp"
#include "iidom/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitNotBlockGraph = 2;
constexpr int kExitInvalidAssignment = 3;
constexpr int kExitOracleCap = 4;
constexpr int kExitFuzzMismatch = 5;

iidom::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw iidom::ParseError(0, "cannot open '" + path + "'");
    return iidom::parse_graph(in);
}

iidom::Assignment load_assignment(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw iidom::ParseError(0, "cannot open '" + path + "'");
    return iidom::parse_assignment(in);
}

std::string join_values(const std::vector<int>& values) {
    std::ostringstream out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out << ' ';
        out << values[i];
    }
    return out.str();
}

int cmd_solve(const std::string& file, bool want_certificate, bool json_mode) {
    iidom::Graph g = load_graph(file);
    iidom::SolveResult result;
    try {
        result = iidom::solve(g, want_certificate);
    } catch (const iidom::NotBlockGraphError& e) {
        std::cerr << "not a block graph: " << e.what() << "\n";
        return kExitNotBlockGraph;
    }
    if (json_mode) {
        nlohmann::ordered_json report;
        report["n"] = g.vertex_count();
        report["m"] = g.edge_count();
        report["components"] = result.stats.components;
        report["i_I"] = result.number;
        if (result.certificate) report["certificate"] = *result.certificate;
        report["elapsed_ms"] = result.stats.elapsed_ms;
        std::cout << report.dump() << "\n";
        return kExitOk;
    }
    std::cout << "i_I = " << result.number << "\n";
    if (result.certificate) {
        std::cout << "certificate: " << join_values(*result.certificate) << "\n";
        std::cout << "certificate check: valid IIDF, weight "
                  << iidom::assignment_weight(*result.certificate) << "\n";
    }
    return kExitOk;
}

int cmd_check(const std::string& graph_file, const std::string& assignment_file) {
    iidom::Graph g = load_graph(graph_file);
    iidom::Assignment a = load_assignment(assignment_file);
    if (static_cast<int>(a.size()) != g.vertex_count()) {
        std::cerr << "assignment has " << a.size() << " values but the graph has "
                  << g.vertex_count() << " vertices\n";
        return kExitInvalidAssignment;
    }
    auto check = iidom::is_independent_italian(g, a);
    if (!check.ok) {
        std::cerr << check.violation.message << "\n";
        return kExitInvalidAssignment;
    }
    std::cout << "valid IIDF, weight " << iidom::assignment_weight(a) << "\n";
    return kExitOk;
}

int cmd_oracle(const std::string& file, int cap) {
    iidom::Graph g = load_graph(file);
    iidom::OracleResult result;
    try {
        result = iidom::brute_force(g, cap);
    } catch (const iidom::OracleCapExceeded& e) {
        std::cerr << e.what() << "\n";
        return kExitOracleCap;
    }
    std::cout << "i_I = " << result.number << "\n";
    std::cout << "witness: " << join_values(result.witness) << "\n";
    std::cout << "explored: " << result.explored << "\n";
    return kExitOk;
}

int cmd_gen(int blocks, int max_clique, uint64_t seed, const std::string& out_path) {
    iidom::Graph g = iidom::random_block_graph({blocks, max_clique, seed});
    std::ostringstream text;
    text << "# random block graph: blocks=" << blocks << " max-clique=" << max_clique
         << " seed=" << seed << "\n";
    text << iidom::to_edge_list(g);
    if (out_path.empty()) {
        std::cout << text.str();
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write '" << out_path << "'\n";
            return kExitParse;
        }
        out << text.str();
    }
    return kExitOk;
}

int cmd_fuzz(long long iterations, int max_blocks, int max_clique, uint64_t seed) {
    iidom::FuzzParams params;
    params.iterations = iterations;
    params.max_blocks = max_blocks;
    params.max_clique = max_clique;
    params.seed = seed;
    iidom::FuzzOutcome outcome = iidom::run_fuzz(params);
    if (!outcome.ok) {
        std::cerr << outcome.message << "\n";
        if (!outcome.reproducer_path.empty())
            std::cerr << "reproducer: " << outcome.reproducer_path << "\n";
        return kExitFuzzMismatch;
    }
    std::cout << outcome.ran << "/" << iterations << " agree\n";
    return kExitOk;
}

iidom::Graph generate_at_least(long long target_n, uint64_t seed) {
    // blocks of size 2..4 add two fresh vertices on average
    long long blocks = std::max<long long>(1, target_n / 2);
    for (uint64_t attempt = 0;; ++attempt) {
        iidom::Graph g =
            iidom::random_block_graph({static_cast<int>(blocks), 4, seed + attempt});
        if (g.vertex_count() >= target_n) return g;
        blocks = blocks * 11 / 10 + 8;
    }
}

int cmd_bench(const std::vector<long long>& sizes, uint64_t seed) {
    double prev_ms = 0.0;
    long long prev_n = 0;
    for (size_t i = 0; i < sizes.size(); ++i) {
        iidom::Graph g = generate_at_least(sizes[i], seed + i);
        double best_ms = 0.0;
        long long number = 0;
        for (int rep = 0; rep < 3; ++rep) {
            auto start = std::chrono::steady_clock::now();
            auto result = iidom::solve(g, false);
            auto stop = std::chrono::steady_clock::now();
            double ms = std::chrono::duration<double, std::milli>(stop - start).count();
            if (rep == 0 || ms < best_ms) best_ms = ms;
            number = result.number;
        }
        std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count() << " i_I=" << number
                  << " solve_ms=" << best_ms << "\n";
        if (i > 0) {
            std::cout << "ratio: time x" << (prev_ms > 0 ? best_ms / prev_ms : 0.0) << " (n x"
                      << static_cast<double>(g.vertex_count()) / static_cast<double>(prev_n)
                      << ")\n";
        }
        prev_ms = best_ms;
        prev_n = g.vertex_count();
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact independent Italian domination on block graphs"};
    app.require_subcommand(1);

    std::function<int()> action;

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "compute i_I of a block graph");
    std::string solve_file;
    bool solve_cert = false, solve_json = false;
    solve_cmd->add_option("file", solve_file, "edge-list file")->required();
    solve_cmd->add_flag("--certificate", solve_cert, "also print an optimal assignment");
    solve_cmd->add_flag("--json", solve_json, "machine-readable report");
    solve_cmd->callback(
        [&] { action = [&] { return cmd_solve(solve_file, solve_cert, solve_json); }; });

    // check
    auto* check_cmd = app.add_subcommand("check", "verify an assignment against a graph");
    std::string check_graph, check_assignment;
    check_cmd->add_option("graph", check_graph, "edge-list file")->required();
    check_cmd->add_option("assignment", check_assignment, "assignment file")->required();
    check_cmd->callback(
        [&] { action = [&] { return cmd_check(check_graph, check_assignment); }; });

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force i_I of a small graph");
    std::string oracle_file;
    int oracle_cap = 16;
    oracle_cmd->add_option("file", oracle_file, "edge-list file")->required();
    oracle_cmd->add_option("--cap", oracle_cap, "maximum vertex count")->capture_default_str();
    oracle_cmd->callback([&] { action = [&] { return cmd_oracle(oracle_file, oracle_cap); }; });

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate a random block graph");
    int gen_blocks = 0, gen_max_clique = 0;
    uint64_t gen_seed = 0;
    std::string gen_out;
    gen_cmd->add_option("--blocks", gen_blocks, "number of blocks")
        ->required()
        ->check(CLI::PositiveNumber);
    gen_cmd->add_option("--max-clique", gen_max_clique, "maximum clique size (>= 2)")
        ->required()
        ->check(CLI::Range(2, 1000000));
    gen_cmd->add_option("--seed", gen_seed, "generator seed")->required();
    gen_cmd->add_option("--out", gen_out, "output file (default: stdout)");
    gen_cmd->callback([&] {
        action = [&] { return cmd_gen(gen_blocks, gen_max_clique, gen_seed, gen_out); };
    });

    // fuzz
    auto* fuzz_cmd = app.add_subcommand("fuzz", "differential test: solver vs oracle");
    long long fuzz_iterations = 0;
    int fuzz_max_blocks = 0, fuzz_max_clique = 0;
    uint64_t fuzz_seed = 0;
    fuzz_cmd->add_option("--iterations", fuzz_iterations, "number of instances")
        ->required()
        ->check(CLI::NonNegativeNumber);
    fuzz_cmd->add_option("--max-blocks", fuzz_max_blocks, "maximum blocks per instance")
        ->required()
        ->check(CLI::PositiveNumber);
    fuzz_cmd->add_option("--max-clique", fuzz_max_clique, "maximum clique size (>= 2)")
        ->required()
        ->check(CLI::Range(2, 1000000));
    fuzz_cmd->add_option("--seed", fuzz_seed, "master seed")->required();
    fuzz_cmd->callback([&] {
        action = [&] {
            return cmd_fuzz(fuzz_iterations, fuzz_max_blocks, fuzz_max_clique, fuzz_seed);
        };
    });

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "time the solver on generated graphs");
    std::vector<long long> bench_sizes;
    uint64_t bench_seed = 1;
    bench_cmd->add_option("--sizes", bench_sizes, "ascending vertex counts, comma separated")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--seed", bench_seed, "generator seed")->capture_default_str();
    bench_cmd->callback([&] {
        for (size_t i = 1; i < bench_sizes.size(); ++i)
            if (bench_sizes[i] <= bench_sizes[i - 1])
                throw CLI::ValidationError("--sizes", "sizes must be strictly ascending");
        action = [&] { return cmd_bench(bench_sizes, bench_seed); };
    });

    CLI11_PARSE(app, argc, argv);

    try {
        return action();
    } catch (const iidom::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
