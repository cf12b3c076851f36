#include "iidom/fuzz.hpp"

#include <fstream>

#include "iidom/generator.hpp"
#include "iidom/oracle.hpp"
#include "iidom/splitmix64.hpp"

namespace iidom {

namespace {

std::string dump_instance(const FuzzParams& params, long long iteration, const GenParams& gp,
                          const Graph& g) {
    std::string path = params.dump_dir + "/iidom_fuzz_fail_seed" + std::to_string(params.seed) +
                       "_iter" + std::to_string(iteration) + ".graph";
    std::ofstream out(path);
    out << "# fuzz reproducer: master seed " << params.seed << ", iteration " << iteration
        << "\n";
    out << "# gen params: blocks=" << gp.num_blocks << " max-clique=" << gp.max_clique
        << " seed=" << gp.seed << "\n";
    out << to_edge_list(g);
    return path;
}

}  // namespace

FuzzOutcome run_fuzz(const FuzzParams& params, const SolverFn& solver) {
    FuzzOutcome outcome;
    if (params.iterations < 0 || params.max_blocks < 1 || params.max_clique < 2) {
        outcome.ok = false;
        outcome.message = "invalid fuzz parameters";
        return outcome;
    }
    SolverFn run_solver = solver ? solver : [](const Graph& g, bool cert) {
        return solve(g, cert);
    };
    SplitMix64 master(params.seed);
    for (long long i = 0; i < params.iterations; ++i) {
        GenParams gp;
        gp.num_blocks = 1 + static_cast<int>(master.next_below(params.max_blocks));
        gp.max_clique = params.max_clique;
        gp.seed = master.next();
        Graph g = random_block_graph(gp);

        SolveResult dp = run_solver(g, true);
        OracleResult oracle = brute_force(g, g.vertex_count());
        ++outcome.ran;

        std::string defect;
        if (dp.number != oracle.number) {
            defect = "dp=" + std::to_string(dp.number) +
                     " oracle=" + std::to_string(oracle.number);
        } else if (!dp.certificate) {
            defect = "certificate missing";
        } else if (!is_independent_italian(g, *dp.certificate).ok) {
            defect = "certificate fails the checker";
        } else if (assignment_weight(*dp.certificate) != dp.number) {
            defect = "certificate weight differs from the reported number";
        }
        if (!defect.empty()) {
            outcome.ok = false;
            outcome.reproducer_path = dump_instance(params, i, gp, g);
            outcome.message = "mismatch at iteration " + std::to_string(i) + ": " + defect;
            return outcome;
        }
    }
    return outcome;
}

}  // namespace iidom
