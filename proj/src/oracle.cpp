#include "iidom/oracle.hpp"

#include <algorithm>

namespace iidom {

namespace {

struct Search {
    const Graph& g;
    int n;
    // vertices whose closed neighborhood is fully decided once vertex v is:
    // their domination status is final at that point.
    std::vector<std::vector<int>> finalized_at;
    Assignment cur;
    Assignment best;
    long long best_weight;
    long long explored = 0;

    explicit Search(const Graph& g)
        : g(g),
          n(g.vertex_count()),
          finalized_at(g.vertex_count()),
          cur(g.vertex_count(), 0),
          best_weight(-1) {
        for (int u = 0; u < n; ++u) {
            int last = u;
            for (int w : g.neighbors(u)) last = std::max(last, w);
            finalized_at[last].push_back(u);
        }
    }

    bool dominated(int u) const {
        if (cur[u] != 0) return true;
        long long sum = 0;
        for (int w : g.neighbors(u)) sum += cur[w];
        return sum >= 2;
    }

    // Depth-first over vertices in id order, values tried ascending, so
    // complete assignments are visited in lexicographic order and the first
    // one found at the minimum weight is the lexicographically smallest.
    void run(int v, long long weight) {
        if (v == n) {
            ++explored;
            if (best_weight < 0 || weight < best_weight) {
                best_weight = weight;
                best = cur;
            }
            return;
        }
        for (int val = 0; val <= 2; ++val) {
            if (best_weight >= 0 && weight + val >= best_weight) break;
            if (val > 0) {
                bool clash = false;
                for (int w : g.neighbors(v)) {
                    if (w < v && cur[w] > 0) {
                        clash = true;
                        break;
                    }
                }
                if (clash) break;  // values 1 and 2 clash alike
            }
            cur[v] = val;
            bool dead = false;
            for (int u : finalized_at[v]) {
                if (!dominated(u)) {
                    dead = true;
                    break;
                }
            }
            if (!dead) run(v + 1, weight + val);
            cur[v] = 0;
        }
    }
};

}  // namespace

OracleResult brute_force(const Graph& g, int cap) {
    if (g.vertex_count() > cap) throw OracleCapExceeded(g.vertex_count(), cap);
    Search search(g);
    search.run(0, 0);
    OracleResult res;
    res.number = search.best_weight < 0 ? 0 : search.best_weight;
    res.witness = std::move(search.best);
    res.explored = search.explored;
    if (search.best_weight < 0)
        throw std::logic_error("no valid assignment found; all-ones is always valid");
    return res;
}

OracleResult brute_force_full(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 8) throw OracleCapExceeded(n, 8);
    OracleResult res;
    res.number = -1;
    Assignment a(n, 0);
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (long long code = 0; code < total; ++code) {
        long long rest = code;
        for (int v = n - 1; v >= 0; --v) {  // vertex 0 is the most significant digit
            a[v] = static_cast<int>(rest % 3);
            rest /= 3;
        }
        if (!is_independent_italian(g, a).ok) continue;
        long long w = assignment_weight(a);
        if (res.number < 0 || w < res.number) {
            res.number = w;
            res.witness = a;
        }
    }
    res.explored = total;
    if (res.number < 0) throw std::logic_error("no valid assignment found");
    return res;
}

}  // namespace iidom
