#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "iidom/block_cut.hpp"
#include "iidom/graph.hpp"

namespace iidom {

/// A nonnegative weight or infinity. Infinity is a distinguished state, not
/// a large sentinel that arithmetic could silently overflow: addition
/// saturates, and subtracting a constant below zero from a finite value
/// throws (that would be a bug in the recurrences, never bad input).
class ExtWeight {
public:
    constexpr ExtWeight() : finite_(false), value_(0) {}

    static constexpr ExtWeight infinity() { return ExtWeight(); }

    static constexpr ExtWeight finite(long long v) {
        ExtWeight w;
        w.finite_ = true;
        w.value_ = v;
        return w;
    }

    bool is_infinite() const noexcept { return !finite_; }
    bool is_finite() const noexcept { return finite_; }

    long long value() const {
        if (!finite_) throw std::logic_error("value() on infinite weight");
        return value_;
    }

    friend ExtWeight operator+(ExtWeight a, ExtWeight b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return finite(a.value_ + b.value_);
    }

    /// Subtracts a nonnegative constant; infinity is absorbing.
    ExtWeight minus(long long k) const {
        if (!finite_) return infinity();
        if (value_ < k) throw std::logic_error("extended weight underflow");
        return finite(value_ - k);
    }

    /// Shifts by a signed constant (adds or subtracts).
    ExtWeight shifted(long long delta) const {
        if (!finite_) return infinity();
        return delta >= 0 ? finite(value_ + delta) : minus(-delta);
    }

    /// Infinity compares greater than every finite value.
    friend bool operator<(ExtWeight a, ExtWeight b) {
        if (!b.finite_) return a.finite_;
        if (!a.finite_) return false;
        return a.value_ < b.value_;
    }

    bool operator==(const ExtWeight&) const = default;

private:
    bool finite_;
    long long value_;
};

using LabelVector = std::array<ExtWeight, 5>;

/// Labels of a cut node u over the tree built so far:
///   i0  - minimum weight with u valued 0 and every constraint satisfied
///   i1  - minimum weight with u valued 1
///   i2  - minimum weight with u valued 2
///   i00 - minimum weight with u removed (u implicitly 0, its own
///         domination requirement waived)
///   i01 - minimum weight with u valued 0 and a pendant weight-1 type-1
///         block neighbor standing in for the future parent; the pendant's
///         unit is included in the label
struct CutLabels {
    ExtWeight i0, i1, i2, i00, i01;

    LabelVector to_array() const { return {i0, i1, i2, i00, i01}; }
    static CutLabels from_array(const LabelVector& v) { return {v[0], v[1], v[2], v[3], v[4]}; }
    bool operator==(const CutLabels&) const = default;
};

/// Labels of a block node u; the level refers to the total value on the
/// closed tree neighborhood of u (the block's own value plus its absorbed
/// cut members):
///   b0 / b1 / b2 - minimum weight with that neighborhood summing to 0/1/2
///   b01 / b02    - neighborhood summing to 0 plus a pendant cut neighbor
///                  valued 1/2, the pendant's weight included
struct BlockLabels {
    ExtWeight b0, b1, b2, b01, b02;

    LabelVector to_array() const { return {b0, b1, b2, b01, b02}; }
    static BlockLabels from_array(const LabelVector& v) { return {v[0], v[1], v[2], v[3], v[4]}; }
    bool operator==(const BlockLabels&) const = default;
};

CutLabels init_cut_labels();
BlockLabels init_block_labels(int block_type);
LabelVector init_labels(const BlockCutTree& t, int node);

/// Per output label, the index of the chosen minimum term (-1 when the
/// result is infinite). Term indices follow the order the recurrences list
/// them in, which is also the tie-breaking order.
using MergeChoices = std::array<int8_t, 5>;

/// Merges a finished block child into a cut parent. Both merges read only a
/// snapshot of the pre-merge parent labels; sequential in-place updates
/// would let the new i00 leak into the i01 terms that must see the old one.
CutLabels absorb_block_into_cut(const CutLabels& parent, const BlockLabels& child,
                                MergeChoices* choices = nullptr);

/// Merges a finished cut child into a block parent.
BlockLabels absorb_cut_into_block(const BlockLabels& parent, const CutLabels& child,
                                  MergeChoices* choices = nullptr);

struct RootChoice {
    ExtWeight weight;
    int label = -1;  ///< 0, 1 or 2; -1 when all three are infinite
};

/// Minimum of the three non-pendant labels (first index wins ties). Pendant
/// labels model a neighbor that does not exist at the root, so they never
/// participate.
RootChoice finalize_root(const LabelVector& labels);

struct MergeRecord {
    int child = -1;         ///< tree node absorbed at this step
    MergeChoices choices{};  ///< argmin per output label
};

/// Complete argmin record of a tree sweep: enough to reconstruct, for any
/// finite label of any node, the chain of choices down to the leaf
/// initializations.
struct Trace {
    std::vector<LabelVector> final_labels;         ///< per node, after all merges
    std::vector<std::vector<MergeRecord>> merges;  ///< per node, in processing order
};

/// Walks the trace top-down from the chosen root label, converts the label
/// states into an induced assignment (pendant and waived states carry value
/// 0), applies the canonical pullback, and verifies the result against the
/// checker and the label's weight before returning. Failures throw
/// std::logic_error: they indicate a solver bug, never a user error.
Assignment extract_certificate(const BlockCutTree& t, const Graph& g, const Trace& trace,
                               int root_label);

/// As above but stops at the induced assignment (no pullback).
InducedAssignment extract_induced(const BlockCutTree& t, const Trace& trace, int root_label);

struct SolveStats {
    int components = 0;
    int tree_nodes = 0;
    double elapsed_ms = 0.0;
};

struct SolveResult {
    long long number = 0;
    std::optional<Assignment> certificate;
    SolveStats stats;
};

/// Single-tree solve for a connected graph with at least one cut vertex.
/// The children-before-parents sweep is one linear pass; with
/// want_certificate the traceback produces an assignment that passes the
/// checker with weight equal to the returned number.
SolveResult solve_tree(const BlockCutTree& t, const Graph& g, bool want_certificate = false,
                       Trace* trace_out = nullptr);

/// Full solver for any valid block graph. Complete components (no cut
/// vertex) contribute 1 (single vertex) or 2 directly; every other
/// component goes through its block-cutpoint tree. Component results add
/// up. Throws NotBlockGraphError when some block is not a clique.
/// Total work is O(n+m).
SolveResult solve(const Graph& g, bool want_certificate = false);

}  // namespace iidom
