#ifndef IMPRO_OUTERPLANAR_HPP
#define IMPRO_OUTERPLANAR_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "impro/coloring.hpp"
#include "impro/graph.hpp"

namespace impro {

enum class Obstruction {
    too_many_edges,    // some biconnected piece exceeds the 2n-3 edge bound
    no_ear,            // biconnected piece with minimum degree >= 3 (K4-like)
    reinsert_failed,   // ear neighbors not adjacent on the outer cycle (K2,3-like)
    crossing_chords,   // final embedding failed the non-crossing certificate
};

inline const char* obstruction_name(Obstruction o) {
    switch (o) {
        case Obstruction::too_many_edges: return "edge count exceeds 2n-3";
        case Obstruction::no_ear: return "K4-type obstruction (biconnected piece with min degree 3)";
        case Obstruction::reinsert_failed: return "K2,3-type obstruction (no Hamiltonian outer cycle)";
        case Obstruction::crossing_chords: return "crossing chords";
    }
    return "unknown";
}

struct NotOuterplanarError : std::runtime_error {
    Obstruction obstruction;
    explicit NotOuterplanarError(Obstruction o)
        : std::runtime_error(std::string("not outerplanar: ") + obstruction_name(o)),
          obstruction(o) {}
};

struct DegenerateTriangulation : GraphError {
    DegenerateTriangulation() : GraphError("polygon needs at least 3 vertices") {}
};

/// Cyclic order of all vertices on a convex polygon, with every input edge
/// drawn as a non-crossing side or chord. Components occupy contiguous arcs.
struct OuterplanarEmbedding {
    Graph graph;
    std::vector<int> polygon_order;  // position -> vertex
    std::vector<int> position_of;    // vertex -> position
};

namespace detail {

struct Block {
    std::vector<int> cycle;  // outer-cycle vertex order; [u, w] for a bridge
};

/// Outer Hamiltonian cycle of a biconnected block by repeatedly peeling
/// degree-2 ears; both ear edges lie on the outer cycle, so ear neighbors
/// are cycle-adjacent and the ear can be re-inserted between them.
inline std::vector<int> block_outer_cycle(const std::vector<int>& verts,
                                          const std::vector<std::pair<int, int>>& edges) {
    const size_t nb = verts.size();
    if (nb == 2) return {std::min(edges[0].first, edges[0].second),
                         std::max(edges[0].first, edges[0].second)};
    if (edges.size() > 2 * nb - 3) throw NotOuterplanarError(Obstruction::too_many_edges);

    std::map<int, std::set<int>> adj;
    for (int v : verts) adj[v];
    for (auto [u, v] : edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<std::array<int, 3>> peeled;  // (ear, neighbor, neighbor)
    std::set<int> active(verts.begin(), verts.end());
    while (active.size() > 3) {
        int ear = -1;
        for (int v : active)
            if (adj[v].size() == 2) {
                ear = v;
                break;
            }
        if (ear < 0) throw NotOuterplanarError(Obstruction::no_ear);
        auto it = adj[ear].begin();
        int u = *it, w = *std::next(it);
        adj[u].erase(ear);
        adj[w].erase(ear);
        adj[u].insert(w);
        adj[w].insert(u);
        active.erase(ear);
        adj.erase(ear);
        peeled.push_back({ear, u, w});
    }
    auto it = active.begin();
    int a = *it, b = *std::next(it), c = *std::next(it, 2);
    if (!adj[a].count(b) || !adj[b].count(c) || !adj[a].count(c))
        throw NotOuterplanarError(Obstruction::no_ear);

    std::map<int, int> next{{a, b}, {b, c}, {c, a}};
    for (auto rit = peeled.rbegin(); rit != peeled.rend(); ++rit) {
        auto [ear, u, w] = *rit;
        if (next[u] == w) {
            next[u] = ear;
            next[ear] = w;
        } else if (next[w] == u) {
            next[w] = ear;
            next[ear] = u;
        } else {
            throw NotOuterplanarError(Obstruction::reinsert_failed);
        }
    }
    int start = *std::min_element(verts.begin(), verts.end());
    std::vector<int> cycle{start};
    for (int v = next[start]; v != start; v = next[v]) cycle.push_back(v);
    if (cycle.size() != nb) throw NotOuterplanarError(Obstruction::reinsert_failed);
    return cycle;
}

/// Tarjan biconnected components; bridges come out as 2-vertex blocks.
inline std::vector<Block> biconnected_blocks(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> edge_stack;
    std::vector<Block> blocks;
    int timer = 0;

    auto emit_block = [&](int top_edge) {
        std::vector<std::pair<int, int>> bedges;
        std::set<int> bverts;
        while (true) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            bedges.push_back(g.edge(e));
            bverts.insert(g.edge(e).first);
            bverts.insert(g.edge(e).second);
            if (e == top_edge) break;
        }
        std::vector<int> verts(bverts.begin(), bverts.end());
        blocks.push_back({block_outer_cycle(verts, bedges)});
    };

    struct Frame {
        int v, parent_edge;
        size_t idx = 0;
    };
    for (int s = 0; s < n; ++s) {
        if (disc[s] >= 0) continue;
        std::vector<Frame> stack{{s, -1}};
        disc[s] = low[s] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& inc = g.incident_edges(f.v);
            if (f.idx < inc.size()) {
                int e = inc[f.idx++];
                if (e == f.parent_edge) continue;
                int w = g.other_end(e, f.v);
                if (disc[w] < 0) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back(e);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v, pe = f.parent_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) emit_block(pe);
                }
            }
        }
    }
    return blocks;
}

inline void verify_noncrossing(const Graph& g, const std::vector<int>& position_of) {
    const int m = g.edge_count();
    std::vector<std::pair<int, int>> span(m);
    for (int e = 0; e < m; ++e) {
        int a = position_of[g.edge(e).first], b = position_of[g.edge(e).second];
        span[e] = {std::min(a, b), std::max(a, b)};
    }
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) {
            auto [a, b] = span[e];
            auto [c, d] = span[f];
            if (a == c || a == d || b == c || b == d) continue;
            bool c_in = a < c && c < b, d_in = a < d && d < b;
            if (c_in != d_in) throw NotOuterplanarError(Obstruction::crossing_chords);
        }
}

}  // namespace detail

/// Finds a convex-polygon embedding or rejects with the obstruction found.
/// Blocks are arranged around the polygon by a DFS over the block-cut
/// structure, so cut vertices and bridges stay on the outer boundary.
inline OuterplanarEmbedding outerplanar_embedding(const Graph& g) {
    const int n = g.vertex_count();
    if (n >= 2 && g.edge_count() > 2 * n - 3)
        throw NotOuterplanarError(Obstruction::too_many_edges);

    auto blocks = detail::biconnected_blocks(g);
    std::vector<std::vector<int>> blocks_of(n);
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
        for (int v : blocks[b].cycle) blocks_of[v].push_back(b);

    std::vector<int> order;
    order.reserve(n);
    std::vector<char> placed(n, 0), block_done(blocks.size(), 0);

    // emit(v), then walk each unvisited block through v from v onward
    auto emit = [&](auto&& self, int v) -> void {
        placed[v] = 1;
        order.push_back(v);
        for (int b : blocks_of[v]) {
            if (block_done[b]) continue;
            block_done[b] = 1;
            const auto& cyc = blocks[b].cycle;
            size_t at = std::find(cyc.begin(), cyc.end(), v) - cyc.begin();
            for (size_t i = 1; i < cyc.size(); ++i) self(self, cyc[(at + i) % cyc.size()]);
        }
    };
    for (int s = 0; s < n; ++s)
        if (!placed[s]) emit(emit, s);

    std::vector<int> position_of(n);
    for (int p = 0; p < n; ++p) position_of[order[p]] = p;
    detail::verify_noncrossing(g, position_of);
    return {g, std::move(order), std::move(position_of)};
}

/// A polygon with all n boundary sides plus non-crossing chords, and its
/// bounded faces. Edge ids 0..original_edge_count-1 are the input edges;
/// synthetic boundary sides (and, for triangulations, fan diagonals) are
/// appended after them.
struct FaceComplex {
    Graph graph;
    std::vector<int> polygon_order;
    std::vector<int> position_of;
    int original_edge_count = 0;
    std::vector<std::vector<int>> faces;         // vertex lists, ascending
    std::vector<std::array<int, 2>> edge_faces;  // edge -> 1 or 2 faces, -1 pad

    bool is_added(int e) const { return e >= original_edge_count; }
    bool is_boundary(int e) const {
        int d = std::abs(position_of[graph.edge(e).first] - position_of[graph.edge(e).second]);
        return d == 1 || d == static_cast<int>(polygon_order.size()) - 1;
    }
    bool face_contains(int f, int v) const {
        return std::binary_search(faces[f].begin(), faces[f].end(), v);
    }
    /// lowest-index face containing edge e
    int face_of_edge(int e) const { return edge_faces[e][0]; }
};

/// Triangulations are face complexes whose faces are all triangles.
using Triangulation = FaceComplex;

namespace detail {

// Bounded faces by interval recursion in position space: the face inside
// chord (a,b) on the arc side walks from a to b along maximal nested
// edges. Faces come out as strictly increasing position lists.
inline std::vector<std::vector<int>> walk_faces(int n, const std::set<std::pair<int, int>>& present) {
    std::vector<std::vector<int>> padj(n);
    for (auto [p, q] : present) {
        padj[p].push_back(q);
        padj[q].push_back(p);
    }
    std::vector<std::vector<int>> faces;
    std::vector<std::pair<int, int>> work{{0, n - 1}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        std::vector<int> face{a};
        int x = a;
        while (x != b) {
            int y = -1;
            for (int q : padj[x]) {
                if (q <= x || q > b) continue;
                if (x == a && q == b) continue;  // the closing edge itself
                y = std::max(y, q);
            }
            if (y < 0) throw std::logic_error("face walk stuck");
            if (y - x >= 2) work.emplace_back(x, y);
            face.push_back(y);
            x = y;
        }
        faces.push_back(std::move(face));
    }
    return faces;
}

inline FaceComplex finish_complex(Graph graph, const OuterplanarEmbedding& emb, int original,
                                  std::vector<std::vector<int>> face_vertex_lists,
                                  bool require_triangles) {
    const int n = graph.vertex_count();
    FaceComplex fc;
    fc.graph = std::move(graph);
    fc.polygon_order = emb.polygon_order;
    fc.position_of = emb.position_of;
    fc.original_edge_count = original;

    for (auto& fv : face_vertex_lists) std::sort(fv.begin(), fv.end());
    std::sort(face_vertex_lists.begin(), face_vertex_lists.end());
    fc.faces = std::move(face_vertex_lists);

    fc.edge_faces.assign(fc.graph.edge_count(), {-1, -1});
    for (int f = 0; f < static_cast<int>(fc.faces.size()); ++f) {
        // face boundary edges: every graph edge with both ends in the face
        // that is a side of the face polygon in position space
        const auto& fv = fc.faces[f];
        std::vector<int> fpos(fv.size());
        for (size_t i = 0; i < fv.size(); ++i) fpos[i] = fc.position_of[fv[i]];
        std::sort(fpos.begin(), fpos.end());
        const int t = static_cast<int>(fpos.size());
        for (int i = 0; i < t; ++i) {
            int p = fpos[i], q = fpos[(i + 1) % t];
            auto e = fc.graph.find_edge(fc.polygon_order[p], fc.polygon_order[q]);
            if (!e) throw std::logic_error("face side missing from graph");
            auto& slots = fc.edge_faces[*e];
            if (slots[1] >= 0) throw std::logic_error("edge in more than two faces");
            (slots[0] < 0 ? slots[0] : slots[1]) = f;
        }
    }

    // structural invariants of a polygon subdivision
    const int m = fc.graph.edge_count();
    if (static_cast<int>(fc.faces.size()) != m - n + 1)
        throw std::logic_error("face count != m - n + 1");
    for (int e = 0; e < m; ++e) {
        int cnt = (fc.edge_faces[e][0] >= 0) + (fc.edge_faces[e][1] >= 0);
        if (cnt != (fc.is_boundary(e) ? 1 : 2)) throw std::logic_error("edge-face incidence broken");
    }
    if (require_triangles) {
        if (static_cast<int>(fc.faces.size()) != n - 2)
            throw std::logic_error("triangulation face count != n-2");
        for (const auto& fv : fc.faces)
            if (fv.size() != 3) throw std::logic_error("non-triangular face");
    }
    return fc;
}

}  // namespace detail

/// Adds the missing polygon sides and reads off the bounded faces of the
/// resulting subdivision. This is the graph the dual-tree coloring is
/// computed on; only boundary sides are ever synthetic here.
inline FaceComplex add_boundary_sides(const OuterplanarEmbedding& emb) {
    const int n = static_cast<int>(emb.polygon_order.size());
    if (n <= 2) throw DegenerateTriangulation();

    std::vector<std::pair<int, int>> edges = emb.graph.edges();
    std::set<std::pair<int, int>> present;  // normalized position pairs
    for (auto [u, v] : edges) {
        int a = emb.position_of[u], b = emb.position_of[v];
        present.insert({std::min(a, b), std::max(a, b)});
    }
    const int original = static_cast<int>(edges.size());
    for (int p = 0; p < n; ++p) {
        int q = (p + 1) % n;
        auto key = std::make_pair(std::min(p, q), std::max(p, q));
        if (!present.count(key)) {
            present.insert(key);
            edges.emplace_back(emb.polygon_order[p], emb.polygon_order[q]);
        }
    }

    auto faces_pos = detail::walk_faces(n, present);
    std::vector<std::vector<int>> faces_v;
    faces_v.reserve(faces_pos.size());
    for (const auto& fp : faces_pos) {
        std::vector<int> fv(fp.size());
        for (size_t i = 0; i < fp.size(); ++i) fv[i] = emb.polygon_order[fp[i]];
        faces_v.push_back(std::move(fv));
    }
    return detail::finish_complex(Graph(n, std::move(edges)), emb, original, std::move(faces_v),
                                  /*require_triangles=*/false);
}

/// Full maximal-outerplanar completion: boundary sides plus fan diagonals
/// from the lowest-index vertex of every non-triangular face. The result
/// has exactly n-2 triangular faces and n-3 diagonals.
inline Triangulation complete_to_maximal(const OuterplanarEmbedding& emb) {
    const int n = static_cast<int>(emb.polygon_order.size());
    if (n <= 2) throw DegenerateTriangulation();

    FaceComplex base = add_boundary_sides(emb);
    std::vector<std::pair<int, int>> edges = base.graph.edges();
    std::set<std::pair<int, int>> present;
    for (auto [u, v] : edges) {
        int a = emb.position_of[u], b = emb.position_of[v];
        present.insert({std::min(a, b), std::max(a, b)});
    }

    std::vector<std::vector<int>> triangles;
    for (const auto& face_sorted : base.faces) {
        // recover the face cycle: ascending positions
        std::vector<int> fv = face_sorted;
        std::sort(fv.begin(), fv.end(),
                  [&](int u, int v) { return emb.position_of[u] < emb.position_of[v]; });
        const int t = static_cast<int>(fv.size());
        int s = static_cast<int>(std::min_element(fv.begin(), fv.end()) - fv.begin());
        int w = fv[s];
        for (int i = 0; i < t; ++i) {
            if (i == s || i == (s + 1) % t || i == (s - 1 + t) % t) continue;
            int a = emb.position_of[w], b = emb.position_of[fv[i]];
            auto key = std::make_pair(std::min(a, b), std::max(a, b));
            if (!present.count(key)) {
                present.insert(key);
                edges.emplace_back(std::min(w, fv[i]), std::max(w, fv[i]));
            }
        }
        for (int i = 0; i < t; ++i) {
            int u = fv[i], v = fv[(i + 1) % t];
            if (u == w || v == w) continue;
            triangles.push_back({w, u, v});
        }
    }

    auto tri = detail::finish_complex(Graph(n, std::move(edges)), emb, base.original_edge_count,
                                      std::move(triangles), /*require_triangles=*/true);
    int diagonals = 0;
    for (int e = 0; e < tri.graph.edge_count(); ++e) diagonals += !tri.is_boundary(e);
    if (diagonals != n - 3) throw std::logic_error("diagonal count != n-3");
    return tri;
}

/// Weak dual of the subdivision: bounded faces as nodes, chords as edges,
/// BFS distances from the root face.
struct DualTree {
    int root = 0;
    std::vector<std::vector<int>> adjacent;  // face -> neighbor faces
    std::vector<int> dist;
    std::vector<int> parent;
};

inline DualTree build_dual_tree(const FaceComplex& fc, int root_face = 0) {
    const int nf = static_cast<int>(fc.faces.size());
    if (root_face < 0 || root_face >= nf)
        throw std::out_of_range("root face out of range");
    DualTree dual;
    dual.root = root_face;
    dual.adjacent.assign(nf, {});
    int dual_edges = 0;
    for (const auto& slots : fc.edge_faces)
        if (slots[1] >= 0) {
            dual.adjacent[slots[0]].push_back(slots[1]);
            dual.adjacent[slots[1]].push_back(slots[0]);
            ++dual_edges;
        }
    for (auto& lst : dual.adjacent) std::sort(lst.begin(), lst.end());

    dual.dist.assign(nf, -1);
    dual.parent.assign(nf, -1);
    std::vector<int> queue{root_face};
    dual.dist[root_face] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int f = queue[head];
        for (int g2 : dual.adjacent[f])
            if (dual.dist[g2] < 0) {
                dual.dist[g2] = dual.dist[f] + 1;
                dual.parent[g2] = f;
                queue.push_back(g2);
            }
    }
    if (static_cast<int>(queue.size()) != nf || dual_edges != nf - 1)
        throw std::logic_error("weak dual is not a tree");
    return dual;
}

/// c(e) = min over incident bounded faces of d_T(f, f0).
inline EdgeColoring distance_coloring(const FaceComplex& fc, const DualTree& dual) {
    EdgeColoring c(fc.graph.edge_count(), 0);
    for (int e = 0; e < fc.graph.edge_count(); ++e) {
        auto [f0, f1] = fc.edge_faces[e];
        c[e] = f1 >= 0 ? std::min(dual.dist[f0], dual.dist[f1]) : dual.dist[f0];
    }
    return c;
}

/// The unique face of F_v closest to the root. Non-uniqueness would
/// contradict the tree-path argument, so it is an internal failure.
inline int unique_min_face(const DualTree& dual, const FaceComplex& fc, int v) {
    int best = -1;
    bool tied = false;
    for (int f = 0; f < static_cast<int>(fc.faces.size()); ++f) {
        if (!fc.face_contains(f, v)) continue;
        if (best < 0 || dual.dist[f] < dual.dist[best]) {
            best = f;
            tied = false;
        } else if (dual.dist[f] == dual.dist[best]) {
            tied = true;
        }
    }
    if (best < 0) throw std::invalid_argument("vertex has no incident bounded face");
    if (tied) throw std::logic_error("minimum-distance face not unique");
    return best;
}

struct ColorResult {
    EdgeColoring coloring;
    DefectReport report;
};

/// Full defect-2 pipeline: embed, add the missing polygon boundary,
/// color by dual-tree distance over the bounded faces, restrict to the
/// input edges. Only synthetic boundary sides are dropped by the
/// restriction, which keeps every vertex's color set gap-free. Components
/// are colored independently and translated to start at 0.
inline ColorResult color_outerplanar(const Graph& g, int root_face = -1) {
    EdgeColoring colors(g.edge_count(), 0);
    std::vector<int> comp_of(g.vertex_count(), -1);
    auto comps = g.components();
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci)
        for (int v : comps[ci]) comp_of[v] = ci;

    std::vector<std::vector<int>> comp_edges(comps.size());
    for (int e = 0; e < g.edge_count(); ++e)
        comp_edges[comp_of[g.edge(e).first]].push_back(e);

    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
        const auto& verts = comps[ci];
        if (verts.size() <= 2) continue;  // at most one edge; stays color 0
        std::vector<int> local(g.vertex_count(), -1);
        for (int i = 0; i < static_cast<int>(verts.size()); ++i) local[verts[i]] = i;
        std::vector<std::pair<int, int>> ledges;
        for (int e : comp_edges[ci])
            ledges.emplace_back(local[g.edge(e).first], local[g.edge(e).second]);

        Graph sub(static_cast<int>(verts.size()), std::move(ledges));
        auto fc = add_boundary_sides(outerplanar_embedding(sub));
        int root = (root_face >= 0 && root_face < static_cast<int>(fc.faces.size()))
                       ? root_face
                       : 0;
        auto dc = distance_coloring(fc, build_dual_tree(fc, root));

        if (!comp_edges[ci].empty()) {
            int lo = dc[0];
            for (int le = 0; le < static_cast<int>(comp_edges[ci].size()); ++le)
                lo = std::min(lo, dc[le]);
            for (int le = 0; le < static_cast<int>(comp_edges[ci].size()); ++le)
                colors[comp_edges[ci][le]] = dc[le] - lo;
        }
    }
    DefectReport rep = validate_interval(g, colors);
    return {std::move(colors), std::move(rep)};
}

}  // namespace impro

#endif
