#include "iidom/block_cut.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <unordered_map>

#include "iidom/splitmix64.hpp"

namespace iidom {

namespace {

std::string join_ids(const std::vector<int>& ids) {
    std::string out;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(ids[i]);
    }
    return out;
}

}  // namespace

BlockDecomposition decompose(const Graph& g) {
    const int n = g.vertex_count();
    BlockDecomposition d;
    d.is_cut.assign(n, 0);
    d.vertex_component.assign(n, -1);

    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), root_children(n, 0);
    std::vector<int> member_mark(n, -1);
    std::vector<std::pair<int, int>> edge_stack;
    // frame: vertex plus index of the next neighbor to look at
    std::vector<std::pair<int, int>> frames;
    int timer = 0;

    auto close_block = [&](int p, int v) {
        std::vector<int> block;
        int edges = 0;
        const int epoch = static_cast<int>(d.blocks.size());
        while (true) {
            assert(!edge_stack.empty());
            auto e = edge_stack.back();
            edge_stack.pop_back();
            ++edges;
            for (int x : {e.first, e.second}) {
                if (member_mark[x] != epoch) {
                    member_mark[x] = epoch;
                    block.push_back(x);
                }
            }
            if (e.first == p && e.second == v) break;
        }
        std::sort(block.begin(), block.end());
        d.blocks.push_back(std::move(block));
        d.block_edge_count.push_back(edges);
        d.block_component.push_back(d.component_count);
    };

    for (int start = 0; start < n; ++start) {
        if (disc[start] != -1) continue;
        if (g.degree(start) == 0) {
            disc[start] = timer++;
            d.vertex_component[start] = d.component_count;
            d.blocks.push_back({start});
            d.block_edge_count.push_back(0);
            d.block_component.push_back(d.component_count);
            ++d.component_count;
            continue;
        }
        disc[start] = low[start] = timer++;
        d.vertex_component[start] = d.component_count;
        frames.emplace_back(start, 0);
        while (!frames.empty()) {
            int v = frames.back().first;
            int i = frames.back().second;
            auto nbrs = g.neighbors(v);
            if (i < static_cast<int>(nbrs.size())) {
                frames.back().second = i + 1;
                int to = nbrs[i];
                if (disc[to] == -1) {
                    parent[to] = v;
                    if (v == start) ++root_children[start];
                    disc[to] = low[to] = timer++;
                    d.vertex_component[to] = d.component_count;
                    edge_stack.emplace_back(v, to);
                    frames.emplace_back(to, 0);
                } else if (to != parent[v] && disc[to] < disc[v]) {
                    // back edge, recorded once from the descendant side
                    edge_stack.emplace_back(v, to);
                    low[v] = std::min(low[v], disc[to]);
                }
            } else {
                frames.pop_back();
                if (!frames.empty()) {
                    int p = frames.back().first;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) {
                        if (p != start) d.is_cut[p] = 1;
                        close_block(p, v);
                    }
                }
            }
        }
        if (root_children[start] >= 2) d.is_cut[start] = 1;
        ++d.component_count;
    }

    for (int v = 0; v < n; ++v)
        if (d.is_cut[v]) d.cut_vertices.push_back(v);
    d.block_cuts.resize(d.blocks.size());
    for (size_t b = 0; b < d.blocks.size(); ++b)
        for (int v : d.blocks[b])
            if (d.is_cut[v]) d.block_cuts[b].push_back(v);
    return d;
}

std::optional<BlockGraphDiagnostic> validate_block_graph(const Graph& g,
                                                         const BlockDecomposition& d) {
    for (size_t b = 0; b < d.blocks.size(); ++b) {
        const auto& block = d.blocks[b];
        long long k = static_cast<long long>(block.size());
        if (d.block_edge_count[b] == k * (k - 1) / 2) continue;
        BlockGraphDiagnostic diag;
        diag.block_index = static_cast<int>(b);
        diag.block = block;
        for (size_t i = 0; i < block.size() && diag.missing_edge.first < 0; ++i)
            for (size_t j = i + 1; j < block.size(); ++j)
                if (!g.has_edge(block[i], block[j])) {
                    diag.missing_edge = {block[i], block[j]};
                    break;
                }
        diag.message = "block {" + join_ids(block) + "} is not a clique (missing edge (" +
                       std::to_string(diag.missing_edge.first) + ", " +
                       std::to_string(diag.missing_edge.second) + "))";
        return diag;
    }
    return std::nullopt;
}

BlockCutTree build_tree(const Graph& g, const BlockDecomposition& d,
                        const TreeBuildOptions& opts) {
    if (d.component_count != 1)
        throw std::invalid_argument("build_tree expects a connected graph (found " +
                                    std::to_string(d.component_count) + " components)");
    return build_tree_for_component(g, d, 0, opts);
}

BlockCutTree build_tree_for_component(const Graph& g, const BlockDecomposition& d, int component,
                                      const TreeBuildOptions& opts) {
    std::vector<int> cuts, blocks;
    for (int v : d.cut_vertices)
        if (d.vertex_component[v] == component) cuts.push_back(v);
    for (size_t b = 0; b < d.blocks.size(); ++b)
        if (d.block_component[b] == component) blocks.push_back(static_cast<int>(b));
    return build_tree_from_parts(g, d, cuts, blocks, opts);
}

BlockCutTree build_tree_from_parts(const Graph& g, const BlockDecomposition& d,
                                   const std::vector<int>& component_cuts,
                                   const std::vector<int>& component_blocks,
                                   const TreeBuildOptions& opts) {
    BlockCutTree t;
    t.graph_n = g.vertex_count();

    std::unordered_map<int, int> cut_node_of;
    cut_node_of.reserve(component_cuts.size() * 2);
    for (int v : component_cuts) {
        cut_node_of.emplace(v, t.node_count());
        t.kind.push_back(TreeNodeKind::cut);
        t.cut_vertex.push_back(v);
        t.block_index.push_back(-1);
        t.block_type.push_back(-1);
        t.members.emplace_back();
        t.cut_members.emplace_back();
    }
    const int num_cuts = t.node_count();
    if (num_cuts == 0)
        throw std::invalid_argument(
            "component has no cut vertex; complete components are handled by the closed-form "
            "shortcut");

    for (int b : component_blocks) {
        int size = static_cast<int>(d.blocks[b].size());
        int cuts = static_cast<int>(d.block_cuts[b].size());
        t.kind.push_back(TreeNodeKind::block);
        t.cut_vertex.push_back(-1);
        t.block_index.push_back(b);
        t.block_type.push_back(size == cuts ? 0 : (size == cuts + 1 ? 1 : 2));
        t.members.push_back(d.blocks[b]);
        t.cut_members.push_back(d.block_cuts[b]);
    }

    t.adj.resize(t.node_count());
    for (int node = num_cuts; node < t.node_count(); ++node) {
        for (int v : t.cut_members[node]) {
            auto it = cut_node_of.find(v);
            assert(it != cut_node_of.end());
            t.adj[node].push_back(it->second);
            t.adj[it->second].push_back(node);
        }
    }

    t.root = opts.root.value_or(num_cuts - 1);  // highest-index cut node
    if (t.root < 0 || t.root >= t.node_count())
        throw std::invalid_argument("tree root out of range");

    if (opts.shuffle_seed) {
        SplitMix64 rng(*opts.shuffle_seed);
        for (auto& list : t.adj)
            for (size_t i = list.size(); i > 1; --i)
                std::swap(list[i - 1], list[rng.next_below(i)]);
    }

    // iterative postorder: children before parents, root last
    t.parent.assign(t.node_count(), -1);
    t.order.reserve(t.node_count());
    std::vector<std::pair<int, int>> frames;
    frames.emplace_back(t.root, 0);
    std::vector<char> visited(t.node_count(), 0);
    visited[t.root] = 1;
    while (!frames.empty()) {
        int v = frames.back().first;
        int i = frames.back().second;
        if (i < static_cast<int>(t.adj[v].size())) {
            frames.back().second = i + 1;
            int to = t.adj[v][i];
            if (!visited[to]) {
                visited[to] = 1;
                t.parent[to] = v;
                frames.emplace_back(to, 0);
            }
        } else {
            frames.pop_back();
            t.order.push_back(v);
        }
    }
    if (static_cast<int>(t.order.size()) != t.node_count())
        throw std::logic_error("block-cutpoint graph is not connected");  // contradicts Tarjan
    return t;
}

InducedAssignment induce(const BlockCutTree& t, const Graph& g, const Assignment& a) {
    if (static_cast<int>(a.size()) != g.vertex_count())
        throw std::invalid_argument("assignment length does not match vertex count");
    InducedAssignment fs;
    fs.node_values.resize(t.node_count());
    for (int node = 0; node < t.node_count(); ++node) {
        if (t.is_cut_node(node)) {
            fs.node_values[node] = a[t.cut_vertex[node]];
        } else {
            int total = 0;
            for (int v : t.members[node]) total += a[v];
            for (int v : t.cut_members[node]) total -= a[v];
            fs.node_values[node] = total;
        }
    }
    return fs;
}

namespace {

void realize_validate(const BlockCutTree& t, const InducedAssignment& fs) {
    if (fs.node_values.size() != static_cast<size_t>(t.node_count()))
        throw std::invalid_argument("induced assignment length does not match tree");
    for (int node = 0; node < t.node_count(); ++node) {
        int s = fs.node_values[node];
        if (s < 0 || s > 2)
            throw RealizeError(0, "node value " + std::to_string(s) + " out of range");
        if (t.is_cut_node(node)) continue;
        switch (t.block_type[node]) {
            case 0:
                if (s != 0)
                    throw RealizeError(1, "type-0 block node carries " + std::to_string(s));
                break;
            case 1:
                if (s > 1)
                    throw RealizeError(0, "type-1 block node carries " + std::to_string(s) +
                                              " (must be 0 or 1)");
                break;
            default:
                if (s == 1)
                    throw RealizeError(2, "type-2 block node carries 1 (must be 0 or 2)");
                break;
        }
    }
}

}  // namespace

void realize_into(const BlockCutTree& t, const InducedAssignment& fs, Assignment& out) {
    realize_validate(t, fs);
    for (int node = 0; node < t.node_count(); ++node) {
        if (t.is_cut_node(node)) {
            out[t.cut_vertex[node]] = fs.node_values[node];
            continue;
        }
        int s = fs.node_values[node];
        // members sorted, cut_members a sorted subsequence: merge to find uncuts
        size_t ci = 0;
        for (int v : t.members[node]) {
            if (ci < t.cut_members[node].size() && t.cut_members[node][ci] == v) {
                ++ci;
                continue;
            }
            out[v] = s;  // lowest-id uncut vertex takes the block's weight
            s = 0;
        }
        assert(s == 0 && "positive value on a block with no uncut vertex");
    }
}

Assignment realize(const BlockCutTree& t, const Graph& g, const InducedAssignment& fs) {
    Assignment out(g.vertex_count(), 0);
    realize_into(t, fs, out);
    return out;
}

namespace {

// Distance-1 and distance-2 tree neighborhood, excluding the node itself.
std::vector<int> two_step(const BlockCutTree& t, int node) {
    std::vector<int> out;
    for (int b : t.adj[node]) {
        out.push_back(b);
        for (int c : t.adj[b])
            if (c != node) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// True when the units of two positive nodes necessarily sit in the same
// block: two cut nodes sharing a block neighbor, or a cut node adjacent to
// the block node itself (a block node counts as adjacent to itself here).
bool same_block_units(const BlockCutTree& t, int x, int y) {
    auto blocks_of = [&](int node) -> std::vector<int> {
        if (t.is_cut_node(node)) return t.adj[node];
        return {node};
    };
    auto bx = blocks_of(x);
    auto by = blocks_of(y);
    for (int a : bx)
        for (int b : by)
            if (a == b) return true;
    return false;
}

PropertyCheckResult check_properties_impl(const BlockCutTree& t, const InducedAssignment& fs,
                                          const Assignment* source) {
    if (fs.node_values.size() != static_cast<size_t>(t.node_count()))
        throw std::invalid_argument("induced assignment length does not match tree");
    const auto& val = fs.node_values;
    auto fail = [&](int property, int node, std::string msg) {
        PropertyCheckResult r;
        r.ok = false;
        r.property = property;
        r.node = node;
        r.message = std::move(msg);
        return r;
    };

    for (int node = 0; node < t.node_count(); ++node) {
        if (t.is_cut_node(node)) {
            auto reach = two_step(t, node);
            if (val[node] == 0) {
                bool dominated = false;
                for (int u : reach)
                    if (val[u] == 2) dominated = true;
                if (!dominated) {
                    std::vector<int> ones;
                    for (int u : reach)
                        if (val[u] == 1) ones.push_back(u);
                    for (size_t i = 0; i < ones.size() && !dominated; ++i)
                        for (size_t j = i + 1; j < ones.size() && !dominated; ++j)
                            if (!same_block_units(t, ones[i], ones[j])) dominated = true;
                }
                if (!dominated)
                    return fail(4, node,
                                "cut node for vertex " + std::to_string(t.cut_vertex[node]) +
                                    " carries 0 but is not dominated in its two-step "
                                    "neighborhood");
            } else {
                for (int u : reach)
                    if (val[u] != 0)
                        return fail(5, node,
                                    "positive cut node for vertex " +
                                        std::to_string(t.cut_vertex[node]) +
                                        " has a positive node in its two-step neighborhood");
            }
            continue;
        }
        int type = t.block_type[node];
        if (type == 0 && val[node] != 0)
            return fail(1, node, "type-0 block node carries " + std::to_string(val[node]));
        if (type == 2 && val[node] != 0 && val[node] != 2)
            return fail(2, node, "type-2 block node carries " + std::to_string(val[node]));
        if (type >= 1 && val[node] == 0) {
            int twos = 0;
            for (int u : t.adj[node])
                if (val[u] == 2) ++twos;
            if (twos != 1)
                return fail(3, node,
                            "type-" + std::to_string(type) +
                                " block node carries 0 but has " + std::to_string(twos) +
                                " neighbors carrying 2 (needs exactly one)");
        }
        if (type >= 1 && val[node] != 0) {
            for (int u : t.adj[node])
                if (val[u] != 0)
                    return fail(5, node, "positive block node has a positive neighbor");
            if (type == 2 && source != nullptr) {
                int positive_uncut = 0;
                size_t ci = 0;
                for (int v : t.members[node]) {
                    if (ci < t.cut_members[node].size() && t.cut_members[node][ci] == v) {
                        ++ci;
                        continue;
                    }
                    if ((*source)[v] != 0) ++positive_uncut;
                }
                if (positive_uncut != 1)
                    return fail(5, node,
                                "type-2 block has " + std::to_string(positive_uncut) +
                                    " positive uncut vertices (needs exactly one)");
            }
        }
    }
    PropertyCheckResult ok;
    ok.ok = true;
    return ok;
}

}  // namespace

PropertyCheckResult check_five_properties(const BlockCutTree& t, const Graph& g,
                                          const InducedAssignment& fs) {
    (void)g;
    return check_properties_impl(t, fs, nullptr);
}

PropertyCheckResult check_five_properties(const BlockCutTree& t, const Graph& g,
                                          const InducedAssignment& fs, const Assignment& source) {
    if (static_cast<int>(source.size()) != g.vertex_count())
        throw std::invalid_argument("source assignment length does not match vertex count");
    return check_properties_impl(t, fs, &source);
}

std::string dump_tree(const BlockCutTree& t) {
    std::ostringstream out;
    for (int node = 0; node < t.node_count(); ++node) {
        if (t.is_cut_node(node)) {
            out << "cut " << t.cut_vertex[node] << '\n';
        } else {
            out << "block " << t.block_index[node] << " type " << t.block_type[node]
                << " members";
            for (int v : t.members[node]) out << ' ' << v;
            out << '\n';
        }
    }
    for (int node = 0; node < t.node_count(); ++node)
        for (int to : t.adj[node])
            if (node < to) out << "edge " << node << ' ' << to << '\n';
    return out.str();
}

}  // namespace iidom
