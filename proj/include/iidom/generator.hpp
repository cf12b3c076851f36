#pragma once

#include <cstdint>
#include <string>

#include "iidom/graph.hpp"
#include "iidom/splitmix64.hpp"

namespace iidom {

/// Parameters for the random connected block-graph generator.
struct GenParams {
    int num_blocks = 1;      ///< >= 1
    int max_clique = 4;      ///< >= 2
    uint64_t seed = 0;
};

/// Connected block graph built clique by clique; the construction guarantees
/// every biconnected component is a clique, no rejection sampling involved.
///
/// The draw sequence is a documented contract so corpora reproduce across
/// implementations. With one SplitMix64 stream seeded by `seed`:
///   1. first block size s0 = 2 + next_below(max_clique - 1); its members
///      are vertices 0..s0-1;
///   2. for each further block: attach = next_below(current vertex count),
///      then size s = 2 + next_below(max_clique - 1); the block consists of
///      `attach` plus the next s-1 fresh vertex ids.
/// Each new block shares exactly one existing vertex, which thereby becomes
/// a cut vertex.
Graph random_block_graph(const GenParams& p);

enum class Family { path, star, complete, caterpillar };

/// Closed-form fixtures (k >= 1): path = P_k, star = K_{1,k},
/// complete = K_k, caterpillar = k triangles {2i, 2i+1, 2i+2} chained on
/// shared even-numbered vertices.
Graph family(Family f, int k);

/// Name-based lookup for the CLI; throws std::invalid_argument on unknown
/// names.
Graph family(const std::string& name, int k);

}  // namespace iidom
