#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iidom/graph.hpp"

namespace iidom {

/// Biconnected components and articulation points of a (possibly
/// disconnected) graph. Blocks appear in depth-first discovery order with
/// sorted member lists; an isolated vertex forms a singleton block.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;       ///< vertex sets, discovery order
    std::vector<std::vector<int>> block_cuts;   ///< per block: its cut vertices
    std::vector<int> block_edge_count;          ///< per block: number of edges
    std::vector<int> cut_vertices;              ///< ascending
    std::vector<char> is_cut;                   ///< size n
    std::vector<int> vertex_component;          ///< size n
    std::vector<int> block_component;
    int component_count = 0;
};

/// O(n+m) iterative depth-first search; no recursion, so path-like graphs of
/// 10^5+ vertices are fine.
BlockDecomposition decompose(const Graph& g);

struct BlockGraphDiagnostic {
    int block_index = -1;
    std::vector<int> block;              ///< members of the offending block
    std::pair<int, int> missing_edge{-1, -1};
    std::string message;
};

/// Empty result means every block induces a clique (the input is a block
/// graph); otherwise describes the first non-clique block and one missing
/// edge of it.
std::optional<BlockGraphDiagnostic> validate_block_graph(const Graph& g,
                                                         const BlockDecomposition& d);

class NotBlockGraphError : public std::runtime_error {
public:
    explicit NotBlockGraphError(BlockGraphDiagnostic d)
        : std::runtime_error(d.message), diagnostic_(std::move(d)) {}

    const BlockGraphDiagnostic& diagnostic() const noexcept { return diagnostic_; }

private:
    BlockGraphDiagnostic diagnostic_;
};

enum class TreeNodeKind { cut, block };

/// Bipartite tree on the cut vertices and blocks of a connected block graph:
/// a cut node is adjacent to a block node iff the vertex belongs to the
/// block. Node ids list all cut nodes first (ascending vertex id), then all
/// block nodes (ascending block index).
struct BlockCutTree {
    std::vector<TreeNodeKind> kind;
    std::vector<int> cut_vertex;    ///< per node; -1 for block nodes
    std::vector<int> block_index;   ///< per node; -1 for cut nodes
    std::vector<int> block_type;    ///< 0/1/2 per block node; -1 for cut nodes
    std::vector<std::vector<int>> members;      ///< block members; empty for cut nodes
    std::vector<std::vector<int>> cut_members;  ///< cut vertices of the block
    std::vector<std::vector<int>> adj;
    int root = -1;
    std::vector<int> order;   ///< children before parents, root last
    std::vector<int> parent;  ///< -1 at the root
    int graph_n = 0;

    int node_count() const noexcept { return static_cast<int>(kind.size()); }
    bool is_cut_node(int id) const { return kind[id] == TreeNodeKind::cut; }

    int edge_count() const noexcept {
        size_t degree_total = 0;
        for (const auto& list : adj) degree_total += list.size();
        return static_cast<int>(degree_total / 2);
    }
};

struct TreeBuildOptions {
    /// Any tree node id. Default: the cut node with the largest vertex id.
    std::optional<int> root;
    /// When set, child processing order is permuted by this seed. The solved
    /// number must not depend on it.
    std::optional<uint64_t> shuffle_seed;
};

/// Requires a connected graph with at least one cut vertex (complete
/// components take the closed-form shortcut instead); throws
/// std::invalid_argument otherwise.
BlockCutTree build_tree(const Graph& g, const BlockDecomposition& d,
                        const TreeBuildOptions& opts = {});

/// Same, restricted to one connected component of a possibly disconnected
/// graph.
BlockCutTree build_tree_for_component(const Graph& g, const BlockDecomposition& d, int component,
                                      const TreeBuildOptions& opts = {});

/// Lowest-level builder over an explicit selection of cut vertices and block
/// indices (one component's worth, both in ascending order). The solver
/// groups the decomposition by component once and feeds each group here, so
/// multi-component graphs stay linear overall.
BlockCutTree build_tree_from_parts(const Graph& g, const BlockDecomposition& d,
                                   const std::vector<int>& component_cuts,
                                   const std::vector<int>& component_blocks,
                                   const TreeBuildOptions& opts = {});

/// Values on tree nodes: a cut node keeps its vertex value, a block node
/// receives the total value of the block minus the total on its cut
/// vertices (that is, the weight sitting on the block's uncut vertices).
struct InducedAssignment {
    std::vector<int> node_values;

    long long weight() const {
        long long w = 0;
        for (int v : node_values) w += v;
        return w;
    }

    bool operator==(const InducedAssignment&) const = default;
};

/// Total weight is preserved for every assignment, valid or not.
InducedAssignment induce(const BlockCutTree& t, const Graph& g, const Assignment& a);

class RealizeError : public std::invalid_argument {
public:
    RealizeError(int property, const std::string& what)
        : std::invalid_argument(what), property_(property) {}

    /// 1 or 2 for the matching characterization property, 0 for the block1
    /// value restriction or an out-of-range value.
    int property() const noexcept { return property_; }

private:
    int property_;
};

/// Canonical pullback: cut node values are copied to their vertices and each
/// positive block value lands on the lowest-id uncut vertex of its block.
/// Requires type-0 blocks valued 0, type-2 blocks valued 0 or 2 and type-1
/// blocks valued 0 or 1 (throws RealizeError otherwise). When fs satisfies
/// all five characterization properties the result passes
/// is_independent_italian and induce(realize(fs)) == fs.
Assignment realize(const BlockCutTree& t, const Graph& g, const InducedAssignment& fs);

/// Writes only the vertices covered by the tree, leaving the rest of `out`
/// untouched; the solver uses this to assemble multi-component certificates.
void realize_into(const BlockCutTree& t, const InducedAssignment& fs, Assignment& out);

struct PropertyCheckResult {
    bool ok = false;
    int property = 0;  ///< 1..5 on failure
    int node = -1;     ///< tree node of the first failure
    std::string message;
};

/// Checks the five characterization properties of induced functions:
///   1. type-0 block nodes carry 0;
///   2. type-2 block nodes carry 0 or 2;
///   3. a type-1/2 block node carrying 0 has exactly one neighbor carrying 2;
///   4. a cut node carrying 0 sees, within its two-step tree neighborhood,
///      a node carrying 2 or two nodes carrying 1 whose units lie in
///      distinct blocks;
///   5. a positive cut node has an all-zero two-step neighborhood; a
///      positive block node has all-zero neighbors.
/// Nodes are scanned in id order (cut nodes first) and the first failing
/// node is reported with its property number.
PropertyCheckResult check_five_properties(const BlockCutTree& t, const Graph& g,
                                          const InducedAssignment& fs);

/// Overload that also verifies, for positive type-2 block nodes, that the
/// source assignment puts the block's weight on exactly one uncut vertex.
PropertyCheckResult check_five_properties(const BlockCutTree& t, const Graph& g,
                                          const InducedAssignment& fs, const Assignment& source);

/// Debug text dump: one line per node ("cut <v>" or
/// "block <id> type <t> members <v...>"), then one line per edge.
/// Not a stability-guaranteed format.
std::string dump_tree(const BlockCutTree& t);

}  // namespace iidom
