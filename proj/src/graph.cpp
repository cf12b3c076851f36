#include "iidom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <unordered_set>

namespace iidom {

namespace {

// Trims trailing carriage returns and whitespace-only prefixes for the
// comment test; tokens themselves are split on any whitespace.
bool is_skippable(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;  // blank
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

long long parse_int(const std::string& tok, int lineno) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(lineno, "invalid integer '" + tok + "'");
    return value;
}

long long edge_key(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    return static_cast<long long>(u) * n + v;
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    g.edges_.reserve(edges.size());
    std::unordered_set<long long> seen;
    seen.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (!seen.insert(edge_key(n, u, v)).second)
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                        std::to_string(v));
        if (u > v) std::swap(u, v);
        g.edges_.emplace_back(u, v);
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<std::pair<int, int>> edges;
    std::unordered_set<long long> seen;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_skippable(line)) continue;
        auto toks = tokenize(line);
        if (!have_header) {
            if (toks.size() != 2)
                throw ParseError(lineno, "malformed header: expected 'n m'");
            n = parse_int(toks[0], lineno);
            m = parse_int(toks[1], lineno);
            if (n < 0 || m < 0)
                throw ParseError(lineno, "malformed header: counts must be nonnegative");
            have_header = true;
            edges.reserve(static_cast<size_t>(m));
            seen.reserve(static_cast<size_t>(m) * 2);
            continue;
        }
        if (static_cast<long long>(edges.size()) == m)
            throw ParseError(lineno, "unexpected content after " + std::to_string(m) + " edges");
        if (toks.size() != 2)
            throw ParseError(lineno, "expected 2 tokens, found " + std::to_string(toks.size()));
        long long u = parse_int(toks[0], lineno);
        long long v = parse_int(toks[1], lineno);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineno, "vertex id out of range [0, " + std::to_string(n) + ")");
        if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        if (!seen.insert(edge_key(static_cast<int>(n), static_cast<int>(u), static_cast<int>(v)))
                 .second)
            throw ParseError(lineno,
                             "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (!have_header) throw ParseError(lineno + 1, "missing header 'n m'");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(lineno + 1, "expected " + std::to_string(m) + " edges, found " +
                                         std::to_string(edges.size()));
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Assignment parse_assignment(std::istream& in) {
    Assignment a;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_skippable(line)) continue;
        for (const auto& tok : tokenize(line)) {
            long long v = parse_int(tok, lineno);
            if (v < 0 || v > 2)
                throw ParseError(lineno, "assignment value '" + tok + "' not in {0,1,2}");
            a.push_back(static_cast<int>(v));
        }
    }
    return a;
}

Assignment parse_assignment(const std::string& text) {
    std::istringstream in(text);
    return parse_assignment(in);
}

long long assignment_weight(const Assignment& a) {
    long long w = 0;
    for (int v : a) w += v;
    return w;
}

CheckResult is_independent_italian(const Graph& g, const Assignment& a) {
    if (static_cast<int>(a.size()) != g.vertex_count())
        throw std::invalid_argument("assignment length " + std::to_string(a.size()) +
                                    " does not match vertex count " +
                                    std::to_string(g.vertex_count()));
    CheckResult res;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (a[v] == 0) {
            long long sum = 0;
            for (int u : g.neighbors(v)) sum += a[u];
            if (sum < 2) {
                res.ok = false;
                res.violation.kind = CheckViolation::Kind::undominated;
                res.violation.vertex = v;
                res.violation.message = "vertex " + std::to_string(v) +
                                        " undominated (neighbor sum " + std::to_string(sum) + ")";
                return res;
            }
        } else {
            for (int u : g.neighbors(v)) {
                if (a[u] > 0) {
                    res.ok = false;
                    res.violation.kind = CheckViolation::Kind::adjacent_positive;
                    res.violation.vertex = v;
                    res.violation.other = u;
                    res.violation.message = "independence violated: vertices " +
                                            std::to_string(v) + " and " + std::to_string(u) +
                                            " are adjacent and both positive";
                    return res;
                }
            }
        }
    }
    res.ok = true;
    return res;
}

long long greedy_mis_bound(const Graph& g) {
    std::vector<char> blocked(g.vertex_count(), 0);
    long long size = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (blocked[v]) continue;
        ++size;
        for (int u : g.neighbors(v)) blocked[u] = 1;
    }
    return 2 * size;
}

}  // namespace iidom
