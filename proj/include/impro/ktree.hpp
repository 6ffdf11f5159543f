#ifndef IMPRO_KTREE_HPP
#define IMPRO_KTREE_HPP

#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "impro/graph.hpp"

namespace impro {

/// The witness family: an m-star centered at v0 with each edge subdivided
/// into an n-edge path, plus k-1 apex vertices w_i forming a clique and
/// joined to every other vertex.
///
/// Vertex layout: w_1..w_{k-1} at 0..k-2, v0 at k-1, then the path
/// vertices v_i^{(j)} row-major with j outer and i inner.
struct KTreeWitness {
    int k = 0, m = 0, n = 0;
    Graph graph;
    std::vector<std::string> labels;  // vertex -> role tag
    std::vector<int> e1;              // edge ids of {v_i^{(j)} w_1}
};

inline KTreeWitness gen_ktree(int k, int m, int n) {
    if (k < 2) throw std::invalid_argument("gen_ktree: k must be at least 2");
    if (m < 1 || n < 1) throw std::invalid_argument("gen_ktree: m and n must be positive");

    const int v0 = k - 1;
    const int total = k + m * n;
    auto path_vertex = [&](int i, int j) { return k + (j - 1) * n + (i - 1); };  // v_i^{(j)}

    std::vector<std::pair<int, int>> edges;
    // star paths: v0 v_1^{(j)}, then v_i^{(j)} v_{i+1}^{(j)}
    for (int j = 1; j <= m; ++j) {
        edges.emplace_back(v0, path_vertex(1, j));
        for (int i = 1; i <= n - 1; ++i)
            edges.emplace_back(path_vertex(i, j), path_vertex(i + 1, j));
    }
    // apex joins and the apex clique
    std::vector<int> e1;
    for (int w = 0; w <= k - 2; ++w)
        for (int x = 0; x < total; ++x) {
            if (x == w) continue;
            if (x < w) continue;  // clique edges emitted once, from the lower apex
            if (x <= k - 2 || x == v0 || x >= k) {
                if (w == 0 && x >= k) e1.push_back(static_cast<int>(edges.size()));
                edges.emplace_back(w, x);
            }
        }

    KTreeWitness wit;
    wit.k = k;
    wit.m = m;
    wit.n = n;
    wit.graph = Graph(total, std::move(edges));
    wit.e1 = std::move(e1);
    wit.labels.resize(total);
    for (int w = 0; w <= k - 2; ++w) wit.labels[w] = "w" + std::to_string(w + 1);
    wit.labels[v0] = "v0";
    for (int j = 1; j <= m; ++j)
        for (int i = 1; i <= n; ++i)
            wit.labels[path_vertex(i, j)] = "v" + std::to_string(i) + "_" + std::to_string(j);
    return wit;
}

/// Greedy perfect-elimination check: a k-tree on >= k+1 vertices always has
/// a simplicial vertex of degree exactly k, and removing one leaves a
/// k-tree, so greedy elimination down to K_{k+1} is complete.
inline bool verify_ktree(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (k < 1 || n < k + 1) return false;
    long long expect = static_cast<long long>(k) * n - static_cast<long long>(k) * (k + 1) / 2;
    if (g.edge_count() != expect) return false;

    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<char> alive(n, 1);
    int remaining = n;
    while (remaining > k + 1) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v) {
            if (!alive[v] || static_cast<int>(adj[v].size()) != k) continue;
            bool clique = true;
            for (auto it = adj[v].begin(); clique && it != adj[v].end(); ++it)
                for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
                    if (!adj[*it].count(*jt)) {
                        clique = false;
                        break;
                    }
            if (clique) pick = v;
        }
        if (pick < 0) return false;
        for (int u : adj[pick]) adj[u].erase(pick);
        adj[pick].clear();
        alive[pick] = 0;
        --remaining;
    }
    // the residue must be K_{k+1}
    for (int v = 0; v < n; ++v)
        if (alive[v] && static_cast<int>(adj[v].size()) != k) return false;
    return true;
}

struct InvalidWalkError : std::invalid_argument {
    explicit InvalidWalkError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Sum of (deg - 1) over the walk's interior vertices: an upper bound on
/// the color difference between the first and last walk edges under any
/// improper interval edge coloring.
inline long long walk_bound(const Graph& g, const std::vector<int>& walk) {
    if (walk.size() < 2) throw InvalidWalkError("walk needs at least one edge");
    for (size_t i = 0; i + 1 < walk.size(); ++i)
        if (!g.has_edge(walk[i], walk[i + 1]))
            throw InvalidWalkError("walk step " + std::to_string(i) + " is not an edge");
    long long bound = 0;
    for (size_t i = 1; i + 1 < walk.size(); ++i) bound += g.degree(walk[i]) - 1;
    return bound;
}

/// Pigeonhole lower bound on impro(T_{m,n}^{(k)}): the mn edges of E_1 fit
/// in a color window of 2m+2kn+(2k-3) integers once c(w1 v0) is anchored
/// to 0, so some color repeats at w1 at least ceil(mn / window) times.
struct ImproprietyCertificate {
    int k = 0, m = 0, n = 0;
    long long color_interval_halfwidth = 0;  // m + kn + (k-2)
    long long color_count = 0;               // 2m + 2kn + (2k-3)
    long long lower_bound = 0;               // ceil(mn / color_count)
    std::optional<long long> simplified_bound;  // floor(n/(2k+3)), m=n and n >= 2k-3 only
};

inline ImproprietyCertificate certificate(int k, int m, int n) {
    if (k < 2 || m < 1 || n < 1) throw std::invalid_argument("certificate: bad parameters");
    ImproprietyCertificate cert;
    cert.k = k;
    cert.m = m;
    cert.n = n;
    cert.color_interval_halfwidth = static_cast<long long>(m) + static_cast<long long>(k) * n + (k - 2);
    cert.color_count = 2 * cert.color_interval_halfwidth + 1;
    long long e1 = static_cast<long long>(m) * n;
    cert.lower_bound = (e1 + cert.color_count - 1) / cert.color_count;
    if (m == n && n >= 2 * k - 3) cert.simplified_bound = n / (2 * k + 3);
    return cert;
}

/// Smallest square instance m=n (with n >= 2k-3) whose exact ceiling bound
/// reaches the target; never exceeds the sufficient choice n = N(2k+3).
inline std::pair<int, int> size_for_target(int k, int target) {
    if (k < 2 || target < 1) throw std::invalid_argument("size_for_target: bad parameters");
    for (int n = std::max(1, 2 * k - 3);; ++n)
        if (certificate(k, n, n).lower_bound >= target) return {n, n};
}

inline std::string certificate_report(const ImproprietyCertificate& c) {
    std::ostringstream out;
    long long e1 = static_cast<long long>(c.m) * c.n;
    out << "impropriety lower-bound certificate for T_{" << c.m << "," << c.n << "}^(" << c.k
        << ")\n"
        << "  anchor: c(w1 v0) = 0 after translation\n"
        << "  walk bound: every E1 edge color lies in [-" << c.color_interval_halfwidth << ", "
        << c.color_interval_halfwidth << "]  (" << c.color_count << " colors)\n"
        << "  |E1| = m*n = " << e1 << ", all incident with w1\n"
        << "  pigeonhole: some color appears at w1 on >= ceil(" << e1 << "/" << c.color_count
        << ") = " << c.lower_bound << " edges of E1\n"
        << "  impro(T) >= " << c.lower_bound << "\n";
    if (c.simplified_bound)
        out << "  simplified bound (m=n, n >= 2k-3): floor(n/(2k+3)) = " << *c.simplified_bound
            << "\n";
    return out.str();
}

}  // namespace impro

#endif
