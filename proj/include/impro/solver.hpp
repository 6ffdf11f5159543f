#ifndef IMPRO_SOLVER_HPP
#define IMPRO_SOLVER_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "impro/coloring.hpp"
#include "impro/graph.hpp"

namespace impro {

struct SearchConfig {
    enum class EdgeOrder { bfs, degeneracy, input };

    int max_defect = 1;
    int color_halfwidth = -1;  // -1: the sufficient bound 2|E| - |V|
    long long node_budget = 100'000'000;
    EdgeOrder edge_order = EdgeOrder::bfs;
};

enum class Decision { yes, no, budget_exhausted };

struct SearchOutcome {
    Decision decision = Decision::no;
    EdgeColoring witness;  // meaningful only for yes
    long long nodes = 0;
};

/// Stand-alone form of the per-vertex pruning rules: span of assigned
/// colors <= deg-1, per-color multiplicity <= max_defect, and missing
/// interior colors coverable by the still-uncolored incident edges.
inline bool vertex_partial_feasible(int degree, const std::vector<int>& assigned, int max_defect) {
    if (assigned.empty()) return true;
    if (static_cast<int>(assigned.size()) > degree) return false;
    auto [lo_it, hi_it] = std::minmax_element(assigned.begin(), assigned.end());
    int lo = *lo_it, hi = *hi_it;
    if (hi - lo > degree - 1) return false;
    int gaps = 0;
    for (int c = lo; c <= hi; ++c) {
        int mult = static_cast<int>(std::count(assigned.begin(), assigned.end(), c));
        if (mult > max_defect) return false;
        gaps += mult == 0;
    }
    return gaps <= degree - static_cast<int>(assigned.size());
}

namespace detail {

inline std::vector<int> edge_search_order(const Graph& g, SearchConfig::EdgeOrder kind) {
    const int m = g.edge_count();
    std::vector<int> order(m);
    if (kind == SearchConfig::EdgeOrder::input || m == 0) {
        for (int e = 0; e < m; ++e) order[e] = e;
        return order;
    }
    if (kind == SearchConfig::EdgeOrder::bfs) {
        // edge BFS from edge 0: keeps the colored subgraph connected
        std::vector<char> seen_e(m, 0), seen_v(g.vertex_count(), 0);
        order.clear();
        order.push_back(0);
        seen_e[0] = 1;
        for (size_t head = 0; head < order.size(); ++head) {
            for (int v : {g.edge(order[head]).first, g.edge(order[head]).second}) {
                if (seen_v[v]) continue;
                seen_v[v] = 1;
                for (int e : g.incident_edges(v))
                    if (!seen_e[e]) {
                        seen_e[e] = 1;
                        order.push_back(e);
                    }
            }
        }
        return order;
    }
    // degeneracy: color the dense core first (reverse elimination)
    std::vector<int> rank(g.vertex_count());
    {
        std::vector<int> deg(g.vertex_count());
        std::vector<char> gone(g.vertex_count(), 0);
        for (int v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
        for (int step = 0; step < g.vertex_count(); ++step) {
            int pick = -1;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (!gone[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
            gone[pick] = 1;
            rank[pick] = step;
            for (int e : g.incident_edges(pick))
                if (!gone[g.other_end(e, pick)]) --deg[g.other_end(e, pick)];
        }
    }
    for (int e = 0; e < m; ++e) order[e] = e;
    auto key = [&](int e) {
        auto [u, v] = g.edge(e);
        return std::make_pair(-std::min(rank[u], rank[v]), -std::max(rank[u], rank[v]));
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return key(a) < key(b); });
    return order;
}

class ColoringSearch {
public:
    ColoringSearch(const Graph& g, const SearchConfig& cfg) : g_(g), cfg_(cfg) {
        halfwidth_ = cfg.color_halfwidth >= 0 ? cfg.color_halfwidth
                                              : std::max(0, 2 * g.edge_count() - g.vertex_count());
        order_ = edge_search_order(g, cfg.edge_order);
        width_ = 2 * halfwidth_ + 1;
        const int n = g.vertex_count();
        minc_.assign(n, 0);
        maxc_.assign(n, 0);
        colored_.assign(n, 0);
        count_.assign(static_cast<size_t>(n) * width_, 0);
        colors_.assign(g.edge_count(), 0);
    }

    SearchOutcome run() {
        SearchOutcome out;
        if (g_.edge_count() == 0) {
            out.decision = Decision::yes;
            return out;
        }
        bool found = dfs(0);
        out.nodes = nodes_;
        if (found) {
            out.decision = Decision::yes;
            out.witness = EdgeColoring(colors_);
        } else {
            out.decision = budget_hit_ ? Decision::budget_exhausted : Decision::no;
        }
        return out;
    }

private:
    int slot(int v, int c) const { return v * width_ + c + halfwidth_; }

    bool endpoint_feasible(int v, int c) const {
        if (colored_[v] == 0) return true;
        int nm = std::min(minc_[v], c), nx = std::max(maxc_[v], c);
        int deg = g_.degree(v);
        if (nx - nm > deg - 1) return false;
        if (count_[slot(v, c)] + 1 > cfg_.max_defect) return false;
        int gaps = 0;
        for (int d = nm; d <= nx; ++d)
            if (d != c && count_[slot(v, d)] == 0) ++gaps;
        return gaps <= deg - colored_[v] - 1;
    }

    void apply(int v, int c) {
        if (colored_[v] == 0) {
            minc_[v] = maxc_[v] = c;
        } else {
            minc_[v] = std::min(minc_[v], c);
            maxc_[v] = std::max(maxc_[v], c);
        }
        ++colored_[v];
        ++count_[slot(v, c)];
    }

    void undo(int v, int c, int old_min, int old_max) {
        --colored_[v];
        --count_[slot(v, c)];
        minc_[v] = old_min;
        maxc_[v] = old_max;
    }

    bool dfs(int idx) {
        if (idx == static_cast<int>(order_.size())) return true;
        const int e = order_[idx];
        auto [u, v] = g_.edge(e);

        int lo = -halfwidth_, hi = halfwidth_;
        for (int w : {u, v})
            if (colored_[w] > 0) {
                lo = std::max(lo, maxc_[w] - (g_.degree(w) - 1));
                hi = std::min(hi, minc_[w] + (g_.degree(w) - 1));
            }
        if (idx == 0) lo = hi = 0;  // anchor: translation invariance

        // increasing absolute value, positive before negative
        const int amax = std::max(std::abs(lo), std::abs(hi));
        for (int a = 0; a <= amax; ++a) {
            for (int sign = 0; sign < (a == 0 ? 1 : 2); ++sign) {
                const int c = sign == 0 ? a : -a;
                if (c < lo || c > hi) continue;
                if (++nodes_ > cfg_.node_budget) {
                    budget_hit_ = true;
                    return false;
                }
                if (!endpoint_feasible(u, c) || !endpoint_feasible(v, c)) continue;
                int mu = minc_[u], xu = maxc_[u], mv = minc_[v], xv = maxc_[v];
                apply(u, c);
                apply(v, c);
                colors_[e] = c;
                if (dfs(idx + 1)) return true;
                undo(v, c, mv, xv);
                undo(u, c, mu, xu);
                if (budget_hit_) return false;
            }
        }
        return false;
    }

    const Graph& g_;
    SearchConfig cfg_;
    int halfwidth_ = 0, width_ = 0;
    std::vector<int> order_, minc_, maxc_, colored_, colors_;
    std::vector<int> count_;
    long long nodes_ = 0;
    bool budget_hit_ = false;
};

}  // namespace detail

/// Decision search on a connected graph: is there an improper interval
/// edge coloring with defect <= cfg.max_defect? Complete within the
/// sufficient color window; `no` is only returned after exhaustive search.
inline SearchOutcome exists_coloring(const Graph& g, const SearchConfig& cfg) {
    if (!g.connected()) throw std::invalid_argument("exists_coloring: graph must be connected");
    if (cfg.max_defect < 1) throw std::invalid_argument("exists_coloring: max_defect must be >= 1");
    auto out = detail::ColoringSearch(g, cfg).run();
    // a shrunken window forfeits completeness: no becomes budget-exhausted
    const int sufficient = std::max(0, 2 * g.edge_count() - g.vertex_count());
    if (out.decision == Decision::no && cfg.color_halfwidth >= 0 &&
        cfg.color_halfwidth < sufficient)
        out.decision = Decision::budget_exhausted;
    return out;
}

struct ImproprietyResult {
    int lower = 0, upper = 0;
    std::optional<EdgeColoring> witness;  // present when exact
    long long nodes = 0;

    bool exact() const { return lower == upper; }
};

/// Exact impropriety by climbing the defect ladder per component; the
/// answer is the max over components. Always in [1, max degree] for a
/// graph with an edge: coloring every edge 0 achieves defect Delta.
inline ImproprietyResult exact_impropriety(const Graph& g, SearchConfig cfg_template = {}) {
    ImproprietyResult total;
    if (g.edge_count() == 0) return total;

    auto comps = g.components();
    std::vector<int> comp_of(g.vertex_count());
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci)
        for (int v : comps[ci]) comp_of[v] = ci;
    std::vector<std::vector<int>> comp_edges(comps.size());
    for (int e = 0; e < g.edge_count(); ++e)
        comp_edges[comp_of[g.edge(e).first]].push_back(e);

    EdgeColoring combined(g.edge_count(), 0);
    bool all_exact = true;
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
        if (comp_edges[ci].empty()) continue;
        std::vector<int> local(g.vertex_count(), -1);
        for (int i = 0; i < static_cast<int>(comps[ci].size()); ++i) local[comps[ci][i]] = i;
        std::vector<std::pair<int, int>> ledges;
        for (int e : comp_edges[ci])
            ledges.emplace_back(local[g.edge(e).first], local[g.edge(e).second]);
        Graph sub(static_cast<int>(comps[ci].size()), std::move(ledges));

        const int delta = sub.max_degree();
        int lower = 1, upper = delta;
        std::optional<EdgeColoring> wit;
        for (int k = 1; k <= delta; ++k) {
            SearchConfig cfg = cfg_template;
            cfg.max_defect = k;
            auto out = exists_coloring(sub, cfg);
            total.nodes += out.nodes;
            if (out.decision == Decision::yes) {
                upper = k;
                wit = std::move(out.witness);
                break;
            }
            if (out.decision == Decision::no) {
                lower = k + 1;
            }
            // budget_exhausted: keep climbing, a higher k may still say yes
        }
        if (!wit) {
            upper = delta;
            wit = EdgeColoring(sub.edge_count(), 0);  // all-zero: defect exactly Delta
        }
        if (lower != upper) all_exact = false;
        total.lower = std::max(total.lower, lower);
        total.upper = std::max(total.upper, upper);
        for (int i = 0; i < static_cast<int>(comp_edges[ci].size()); ++i)
            combined[comp_edges[ci][i]] = (*wit)[i];
    }
    if (all_exact) total.witness = std::move(combined);
    return total;
}

}  // namespace impro

#endif
