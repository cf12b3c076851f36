#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "iidom/dp.hpp"
#include "iidom/graph.hpp"

namespace iidom {

struct FuzzParams {
    long long iterations = 1000;
    int max_blocks = 6;   ///< blocks drawn uniformly from [1, max_blocks]
    int max_clique = 4;
    uint64_t seed = 0;
    std::string dump_dir = ".";  ///< where a failing instance is written
};

struct FuzzOutcome {
    long long ran = 0;
    bool ok = true;
    std::string reproducer_path;  ///< set on failure
    std::string message;
};

using SolverFn = std::function<SolveResult(const Graph&, bool want_certificate)>;

/// Differential run: per iteration, one SplitMix64 stream seeded by `seed`
/// draws num_blocks = 1 + next_below(max_blocks) and then a fresh graph
/// seed; the instance goes through the solver (certificates on) and the
/// brute-force oracle. Any number mismatch or certificate defect stops the
/// run, dumps the instance as an edge-list file and reports the path.
/// `solver` defaults to solve(); tests inject corrupted solvers to exercise
/// the failure path.
FuzzOutcome run_fuzz(const FuzzParams& params, const SolverFn& solver = nullptr);

}  // namespace iidom
