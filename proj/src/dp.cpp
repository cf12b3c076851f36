#include "iidom/dp.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <climits>

namespace iidom {

namespace {

constexpr ExtWeight kInf = ExtWeight::infinity();

ExtWeight fin(long long v) { return ExtWeight::finite(v); }

// One minimum term of a merge recurrence: parent label index, child label
// index, and a constant shift. Term order matches the recurrences and is
// the certificate tie-breaking order.
struct TermDef {
    int8_t parent;
    int8_t child;
    int8_t delta;
};

// Cut parent absorbing a block child. Label indices: [i0, i1, i2, i00, i01]
// for the parent, [b0, b1, b2, b01, b02] for the child.
//   i0  = min(i0+b0, i01+b1-1, i00+b2)
//   i1  = i1 + b01 - 1
//   i2  = i2 + b02 - 2
//   i00 = i00 + min(b0, b1, b2)
//   i01 = min(i01+b0, i00+b1+1, i00+b2+1)
constexpr TermDef kCutParentTerms[5][3] = {
    {{0, 0, 0}, {4, 1, -1}, {3, 2, 0}},
    {{1, 3, -1}, {}, {}},
    {{2, 4, -2}, {}, {}},
    {{3, 0, 0}, {3, 1, 0}, {3, 2, 0}},
    {{4, 0, 0}, {3, 1, 1}, {3, 2, 1}},
};
constexpr int kCutParentTermCount[5] = {3, 1, 1, 3, 3};

// Block parent absorbing a cut child.
//   b0  = b0 + c0
//   b1  = min(b1+c01-1, b01+c1-1)
//   b2  = min(b2+c00, b02+c2-2)
//   b01 = b01 + c01 - 1
//   b02 = b02 + c00
constexpr TermDef kBlockParentTerms[5][3] = {
    {{0, 0, 0}, {}, {}},
    {{1, 4, -1}, {3, 1, -1}, {}},
    {{2, 3, 0}, {4, 2, -2}, {}},
    {{3, 4, -1}, {}, {}},
    {{4, 3, 0}, {}, {}},
};
constexpr int kBlockParentTermCount[5] = {1, 2, 2, 1, 1};

LabelVector merge_labels(const LabelVector& parent, const LabelVector& child, bool cut_parent,
                         MergeChoices* choices) {
    const auto* terms = cut_parent ? kCutParentTerms : kBlockParentTerms;
    const int* counts = cut_parent ? kCutParentTermCount : kBlockParentTermCount;
    LabelVector out;
    for (int label = 0; label < 5; ++label) {
        ExtWeight best = kInf;
        int best_term = -1;
        for (int ti = 0; ti < counts[label]; ++ti) {
            const TermDef& term = terms[label][ti];
            ExtWeight cand = (parent[term.parent] + child[term.child]).shifted(term.delta);
            if (cand < best) {
                best = cand;
                best_term = ti;
            }
        }
        out[label] = best;
        if (choices) (*choices)[label] = static_cast<int8_t>(best_term);
    }
    return out;
}

#ifndef NDEBUG
// Finite-label floors; they make every subtraction in the recurrences safe.
void assert_cut_invariants(const LabelVector& v) {
    assert(v[1].is_infinite() || v[1].value() >= 1);  // i1
    assert(v[2].is_infinite() || v[2].value() >= 2);  // i2
    assert(v[4].is_infinite() || v[4].value() >= 1);  // i01 includes its pendant unit
}

void assert_block_invariants(const LabelVector& v) {
    assert(v[3].is_infinite() || v[3].value() >= 1);  // b01
    assert(v[4].is_infinite() || v[4].value() >= 2);  // b02
}
#endif

// Label state -> the node's own induced value at the leaf initialization.
// Waived and pendant states carry 0; the pendant's unit lives on the
// neighbor the label models, not on the node itself.
constexpr int kInitValue[5] = {0, 1, 2, 0, 0};

void run_dp(const BlockCutTree& t, Trace& trace, bool record_merges) {
    const int k = t.node_count();
    trace.final_labels.resize(k);
    trace.merges.assign(k, {});
    for (int node = 0; node < k; ++node) trace.final_labels[node] = init_labels(t, node);
    for (int idx = 0; idx + 1 < k; ++idx) {  // root (last in order) absorbs only
        int node = t.order[idx];
        int par = t.parent[node];
        MergeChoices choices{};
        bool cut_parent = t.is_cut_node(par);
        trace.final_labels[par] =
            merge_labels(trace.final_labels[par], trace.final_labels[node], cut_parent,
                         record_merges ? &choices : nullptr);
#ifndef NDEBUG
        if (cut_parent)
            assert_cut_invariants(trace.final_labels[par]);
        else
            assert_block_invariants(trace.final_labels[par]);
#endif
        if (record_merges) trace.merges[par].push_back({node, choices});
    }
}

}  // namespace

CutLabels init_cut_labels() { return {kInf, fin(1), fin(2), fin(0), kInf}; }

BlockLabels init_block_labels(int block_type) {
    switch (block_type) {
        case 0:
            return {fin(0), kInf, kInf, fin(1), fin(2)};
        case 1:
            return {kInf, fin(1), kInf, kInf, fin(2)};
        case 2:
            return {kInf, kInf, fin(2), kInf, fin(2)};
        default:
            throw std::invalid_argument("block type must be 0, 1 or 2");
    }
}

LabelVector init_labels(const BlockCutTree& t, int node) {
    if (t.is_cut_node(node)) return init_cut_labels().to_array();
    return init_block_labels(t.block_type[node]).to_array();
}

CutLabels absorb_block_into_cut(const CutLabels& parent, const BlockLabels& child,
                                MergeChoices* choices) {
    return CutLabels::from_array(
        merge_labels(parent.to_array(), child.to_array(), true, choices));
}

BlockLabels absorb_cut_into_block(const BlockLabels& parent, const CutLabels& child,
                                  MergeChoices* choices) {
    return BlockLabels::from_array(
        merge_labels(parent.to_array(), child.to_array(), false, choices));
}

RootChoice finalize_root(const LabelVector& labels) {
    RootChoice rc;
    rc.weight = kInf;
    for (int label = 0; label < 3; ++label) {
        if (labels[label] < rc.weight) {
            rc.weight = labels[label];
            rc.label = label;
        }
    }
    return rc;
}

InducedAssignment extract_induced(const BlockCutTree& t, const Trace& trace, int root_label) {
    if (root_label < 0 || root_label >= 5) throw std::logic_error("root label out of range");
    if (trace.final_labels[t.root][root_label].is_infinite())
        throw std::logic_error("cannot trace an infinite label");

    InducedAssignment fs;
    fs.node_values.assign(t.node_count(), 0);
    std::vector<int> required(t.node_count(), -1);
    required[t.root] = root_label;

    // Reverse of the sweep order visits every node before its children, so
    // required labels are known when we reach them.
    for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
        int node = *it;
        int label = required[node];
        if (label < 0) throw std::logic_error("trace chain broken");
        const auto& records = trace.merges[node];
        for (auto rit = records.rbegin(); rit != records.rend(); ++rit) {
            int term_idx = rit->choices[label];
            if (term_idx < 0) throw std::logic_error("argmin missing for a finite label");
            const TermDef& term = t.is_cut_node(node) ? kCutParentTerms[label][term_idx]
                                                      : kBlockParentTerms[label][term_idx];
            required[rit->child] = term.child;
            label = term.parent;
        }
        fs.node_values[node] = kInitValue[label];
    }
    return fs;
}

Assignment extract_certificate(const BlockCutTree& t, const Graph& g, const Trace& trace,
                               int root_label) {
    InducedAssignment fs = extract_induced(t, trace, root_label);
    Assignment cert = realize(t, g, fs);
    auto check = is_independent_italian(g, cert);
    if (!check.ok)
        throw std::logic_error("traced certificate fails the checker: " +
                               check.violation.message);
    long long expected = trace.final_labels[t.root][root_label].value();
    if (assignment_weight(cert) != expected)
        throw std::logic_error("traced certificate weight mismatch");
    return cert;
}

SolveResult solve_tree(const BlockCutTree& t, const Graph& g, bool want_certificate,
                       Trace* trace_out) {
    Trace local;
    Trace& trace = trace_out ? *trace_out : local;
    run_dp(t, trace, want_certificate || trace_out != nullptr);
    RootChoice rc = finalize_root(trace.final_labels[t.root]);
    if (rc.weight.is_infinite())
        throw std::logic_error("no finite root label; every block graph admits a solution");
    SolveResult res;
    res.number = rc.weight.value();
    res.stats.components = 1;
    res.stats.tree_nodes = t.node_count();
    if (want_certificate) res.certificate = extract_certificate(t, g, trace, rc.label);
    return res;
}

SolveResult solve(const Graph& g, bool want_certificate) {
    auto start = std::chrono::steady_clock::now();
    const int n = g.vertex_count();

    BlockDecomposition d = decompose(g);
    if (auto diag = validate_block_graph(g, d)) throw NotBlockGraphError(*diag);

    std::vector<std::vector<int>> comp_cuts(d.component_count);
    std::vector<std::vector<int>> comp_blocks(d.component_count);
    for (int v : d.cut_vertices) comp_cuts[d.vertex_component[v]].push_back(v);
    for (size_t b = 0; b < d.blocks.size(); ++b)
        comp_blocks[d.block_component[b]].push_back(static_cast<int>(b));
    std::vector<int> comp_size(d.component_count, 0);
    std::vector<int> comp_min(d.component_count, INT_MAX);
    for (int v = 0; v < n; ++v) {
        int c = d.vertex_component[v];
        ++comp_size[c];
        comp_min[c] = std::min(comp_min[c], v);
    }

    SolveResult res;
    res.stats.components = d.component_count;
    Assignment cert;
    if (want_certificate) cert.assign(n, 0);

    for (int c = 0; c < d.component_count; ++c) {
        if (comp_cuts[c].empty()) {
            // the component is a single clique (or a lone vertex)
            res.number += comp_size[c] == 1 ? 1 : 2;
            if (want_certificate) cert[comp_min[c]] = comp_size[c] == 1 ? 1 : 2;
            continue;
        }
        BlockCutTree t = build_tree_from_parts(g, d, comp_cuts[c], comp_blocks[c]);
        res.stats.tree_nodes += t.node_count();
        Trace trace;
        run_dp(t, trace, want_certificate);
        RootChoice rc = finalize_root(trace.final_labels[t.root]);
        if (rc.weight.is_infinite())
            throw std::logic_error("no finite root label; every block graph admits a solution");
        res.number += rc.weight.value();
        if (want_certificate) {
            InducedAssignment fs = extract_induced(t, trace, rc.label);
            realize_into(t, fs, cert);
        }
    }

    if (want_certificate) {
        auto check = is_independent_italian(g, cert);
        if (!check.ok)
            throw std::logic_error("assembled certificate fails the checker: " +
                                   check.violation.message);
        if (assignment_weight(cert) != res.number)
            throw std::logic_error("assembled certificate weight mismatch");
        res.certificate = std::move(cert);
    }

    auto stop = std::chrono::steady_clock::now();
    res.stats.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return res;
}

}  // namespace iidom
