#pragma once

#include <stdexcept>
#include <string>

#include "iidom/graph.hpp"

namespace iidom {

class OracleCapExceeded : public std::runtime_error {
public:
    OracleCapExceeded(int n, int cap)
        : std::runtime_error("graph has " + std::to_string(n) +
                             " vertices, oracle cap is " + std::to_string(cap)) {}
};

struct OracleResult {
    long long number = 0;
    Assignment witness;      ///< lexicographically smallest optimum
    long long explored = 0;  ///< complete candidate assignments examined
};

/// Exhaustive ground truth for any simple graph (not just block graphs).
/// Enumerates assignments whose positive vertices form an independent set
/// with values in {1,2} - no valid assignment has a dependent support, so
/// nothing is missed - pruning branches that already exceed the best weight
/// or contain an irreparably undominated vertex. The witness is the
/// lexicographically smallest minimum-weight assignment.
OracleResult brute_force(const Graph& g, int cap = 16);

/// Plain 3^n sweep in lexicographic order, n <= 8. Deliberately has no
/// cleverness at all: it is the sanity anchor brute_force is cross-checked
/// against.
OracleResult brute_force_full(const Graph& g);

}  // namespace iidom
