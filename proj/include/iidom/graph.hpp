#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace iidom {

/// Raised when input text does not conform to the expected format.
/// line() is 1-based and points at the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Simple undirected graph over dense 0-based vertex ids.
/// Immutable after construction; adjacency lists are sorted ascending, so all
/// iteration orders derived from them are platform-independent.
class Graph {
public:
    Graph() = default;

    /// Validates and builds. Rejects self-loops, duplicate edges and
    /// out-of-range endpoints; edge order does not affect the result.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    std::span<const int> neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    /// Normalized (u < v) edges, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// f: V -> {0,1,2}, one value per vertex.
using Assignment = std::vector<int>;

/// Edge-list text format: optional comment lines starting with '#',
/// a header line "n m", then exactly m lines "u v" with 0 <= u,v < n, u != v.
/// Blank lines are ignored. Every violation is reported with its line number.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);

/// Inverse of parse_graph: header plus normalized sorted edge lines.
std::string to_edge_list(const Graph& g);

/// Whitespace-separated values from {0,1,2}. The caller checks the length
/// against the graph it belongs to.
Assignment parse_assignment(std::istream& in);
Assignment parse_assignment(const std::string& text);

long long assignment_weight(const Assignment& a);

struct CheckViolation {
    enum class Kind { none, undominated, adjacent_positive };
    Kind kind = Kind::none;
    int vertex = -1;  ///< undominated vertex, or first endpoint of the bad edge
    int other = -1;   ///< second endpoint for adjacent_positive
    std::string message;
};

struct CheckResult {
    bool ok = false;
    CheckViolation violation;  ///< kind none when ok
};

/// True iff every vertex assigned 0 has neighbor values summing to >= 2 and
/// no edge joins two positive vertices. On failure reports the first
/// violation found scanning vertices in ascending id order.
/// Throws std::invalid_argument when a.size() != g.vertex_count().
CheckResult is_independent_italian(const Graph& g, const Assignment& a);

/// Twice the size of the lowest-id-first greedy maximal independent set.
/// Assigning 2 on that set always passes is_independent_italian, so the
/// returned value upper-bounds the optimum.
long long greedy_mis_bound(const Graph& g);

}  // namespace iidom
