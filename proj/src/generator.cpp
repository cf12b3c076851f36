#include "iidom/generator.hpp"

#include <stdexcept>

namespace iidom {

namespace {

void add_clique(std::vector<std::pair<int, int>>& edges, const std::vector<int>& members) {
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            edges.emplace_back(members[i], members[j]);
}

}  // namespace

Graph random_block_graph(const GenParams& p) {
    if (p.num_blocks < 1) throw std::invalid_argument("num_blocks must be >= 1");
    if (p.max_clique < 2) throw std::invalid_argument("max_clique must be >= 2");
    SplitMix64 rng(p.seed);
    std::vector<std::pair<int, int>> edges;
    int n = 2 + static_cast<int>(rng.next_below(p.max_clique - 1));
    {
        std::vector<int> members(n);
        for (int i = 0; i < n; ++i) members[i] = i;
        add_clique(edges, members);
    }
    for (int b = 1; b < p.num_blocks; ++b) {
        int attach = static_cast<int>(rng.next_below(n));
        int size = 2 + static_cast<int>(rng.next_below(p.max_clique - 1));
        std::vector<int> members;
        members.reserve(size);
        members.push_back(attach);
        for (int i = 1; i < size; ++i) members.push_back(n++);
        add_clique(edges, members);
    }
    return Graph::from_edges(n, edges);
}

Graph family(Family f, int k) {
    if (k < 1) throw std::invalid_argument("family size must be >= 1");
    std::vector<std::pair<int, int>> edges;
    switch (f) {
        case Family::path:
            for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
            return Graph::from_edges(k, edges);
        case Family::star:
            for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
            return Graph::from_edges(k + 1, edges);
        case Family::complete:
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
            return Graph::from_edges(k, edges);
        case Family::caterpillar:
            for (int i = 0; i < k; ++i) {
                int base = 2 * i;
                edges.emplace_back(base, base + 1);
                edges.emplace_back(base, base + 2);
                edges.emplace_back(base + 1, base + 2);
            }
            return Graph::from_edges(2 * k + 1, edges);
    }
    throw std::invalid_argument("unknown family");
}

Graph family(const std::string& name, int k) {
    if (name == "path") return family(Family::path, k);
    if (name == "star") return family(Family::star, k);
    if (name == "complete") return family(Family::complete, k);
    if (name == "caterpillar") return family(Family::caterpillar, k);
    throw std::invalid_argument("unknown family '" + name + "'");
}

}  // namespace iidom
