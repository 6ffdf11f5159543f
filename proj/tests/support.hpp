// Test-only helpers: an independent naive impropriety oracle, corpus
// generators for polygon triangulations and random outerplanar graphs,
// and small-graph canonicalization. Kept free of the library's search
// and embedding machinery so they can serve as oracles for it.
#ifndef IMPRO_TESTS_SUPPORT_HPP
#define IMPRO_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "impro/graph.hpp"

namespace impro::testing {

// ---------------------------------------------------------------------
// Naive exact oracle: enumerate colorings edge by edge in input order
// over the sufficient window [-H, H], H = 2|E| - |V|, first edge fixed
// to 0. Pruning uses only direct consequences of the definition: color
// multiplicity at a vertex <= k, assigned span at a vertex <= deg - 1,
// and a full interval check once a vertex has all its edges colored.
inline bool naive_exists(const Graph& g, int k) {
    const int m = g.edge_count();
    if (m == 0) return true;
    const int H = std::max(0, 2 * m - g.vertex_count());
    std::vector<int> colors(m, 0);

    auto vertex_ok = [&](int v, int upto) {
        std::vector<int> assigned;
        for (int e : g.incident_edges(v))
            if (e <= upto) assigned.push_back(colors[e]);
        if (assigned.empty()) return true;
        auto [lo, hi] = std::minmax_element(assigned.begin(), assigned.end());
        if (*hi - *lo > g.degree(v) - 1) return false;
        for (int c = *lo; c <= *hi; ++c) {
            int mult = static_cast<int>(std::count(assigned.begin(), assigned.end(), c));
            if (mult > k) return false;
            if (mult == 0 && static_cast<int>(assigned.size()) == g.degree(v))
                return false;  // completed vertex with a gap
        }
        return true;
    };

    auto rec = [&](auto&& self, int e) -> bool {
        if (e == m) return true;
        int lo = e == 0 ? 0 : -H, hi = e == 0 ? 0 : H;
        for (int c = lo; c <= hi; ++c) {
            colors[e] = c;
            auto [u, v] = g.edge(e);
            if (vertex_ok(u, e) && vertex_ok(v, e) && self(self, e + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

inline int naive_impropriety(const Graph& g) {
    if (g.edge_count() == 0) return 0;
    for (int k = 1;; ++k)
        if (naive_exists(g, k)) return k;
}

// ---------------------------------------------------------------------
// All triangulations of the convex polygon 0..n-1, each returned as the
// full edge list (n boundary sides + n-3 diagonals).
inline void polygon_triangulations(int n, std::vector<std::vector<std::pair<int, int>>>& out) {
    // T(i,j) = list of diagonal sets triangulating sub-polygon i..j
    std::vector<std::vector<std::vector<std::vector<std::pair<int, int>>>>> memo(
        n, std::vector<std::vector<std::vector<std::pair<int, int>>>>(n));
    auto solve = [&](auto&& self, int i, int j)
        -> const std::vector<std::vector<std::pair<int, int>>>& {
        auto& slot = memo[i][j];
        if (!slot.empty() || j - i < 2) {
            if (j - i < 2 && slot.empty()) slot.push_back({});
            return slot;
        }
        for (int k = i + 1; k < j; ++k) {
            for (const auto& left : self(self, i, k))
                for (const auto& right : self(self, k, j)) {
                    std::vector<std::pair<int, int>> d = left;
                    d.insert(d.end(), right.begin(), right.end());
                    if (k - i >= 2) d.emplace_back(i, k);
                    if (j - k >= 2) d.emplace_back(k, j);
                    slot.push_back(std::move(d));
                }
        }
        return slot;
    };
    for (const auto& diags2 : solve(solve, 0, n - 1)) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
        edges.insert(edges.end(), diags2.begin(), diags2.end());
        out.push_back(std::move(edges));
    }
}

// Non-crossing certificate for edges drawn as chords of the polygon
// whose cyclic order is vertex index order.
inline bool noncrossing_in_index_order(int n, const std::vector<std::pair<int, int>>& edges) {
    (void)n;
    auto norm = [](std::pair<int, int> e) {
        return std::make_pair(std::min(e.first, e.second), std::max(e.first, e.second));
    };
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = norm(edges[i]);
            auto [c, d] = norm(edges[j]);
            if (a == c || a == d || b == c || b == d) continue;
            if ((a < c && c < b) != (a < d && d < b)) return false;
        }
    return true;
}

// Random maximal outerplanar graph (triangulated polygon) with each edge
// then deleted independently with probability drop.
inline Graph random_outerplanar(int n, std::mt19937& rng, double drop = 0.3) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (j - i < 2) return;
        std::uniform_int_distribution<int> pick(i + 1, j - 1);
        int k = pick(rng);
        if (k - i >= 2) edges.emplace_back(i, k);
        if (j - k >= 2) edges.emplace_back(k, j);
        self(self, i, k);
        self(self, k, j);
    };
    if (n >= 3) rec(rec, 0, n - 1);
    std::vector<std::pair<int, int>> kept;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (auto e : edges)
        if (unif(rng) >= drop) kept.push_back(e);
    return Graph(n, std::move(kept));
}

inline Graph random_maximal_outerplanar(int n, std::mt19937& rng) {
    return random_outerplanar(n, rng, 0.0);
}

// ---------------------------------------------------------------------
// Canonical key of a small labeled graph: minimum adjacency bitmask over
// all vertex permutations. Only for n <= 8.
inline uint64_t canonical_key(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto mask_of = [&](const std::vector<int>& p) {
        uint64_t mask = 0;
        for (auto [u, v] : edges) {
            int a = std::min(p[u], p[v]), b = std::max(p[u], p[v]);
            mask |= 1ull << (b * (b - 1) / 2 + a);
        }
        return mask;
    };
    uint64_t best = ~0ull;
    do {
        best = std::min(best, mask_of(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return (static_cast<uint64_t>(n) << 56) | best;
}

}  // namespace impro::testing

#endif
