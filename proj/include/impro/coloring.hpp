#ifndef IMPRO_COLORING_HPP
#define IMPRO_COLORING_HPP

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "impro/graph.hpp"

namespace impro {

/// Total map edge id -> integer color. Colors produced by the in-scope
/// algorithms are bounded by 2|E|, so machine ints never overflow.
class EdgeColoring {
public:
    EdgeColoring() = default;
    explicit EdgeColoring(std::vector<int> colors) : colors_(std::move(colors)) {}
    EdgeColoring(int edge_count, int fill) : colors_(edge_count, fill) {}

    int size() const { return static_cast<int>(colors_.size()); }
    int operator[](int e) const { return colors_[e]; }
    int& operator[](int e) { return colors_[e]; }
    const std::vector<int>& colors() const { return colors_; }

    void translate(int delta) {
        for (int& c : colors_) c += delta;
    }

private:
    std::vector<int> colors_;
};

struct TotalityError : std::runtime_error {
    explicit TotalityError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DefectWitness {
    int vertex = -1;
    int color = 0;
    std::vector<int> edges;  // incident edges carrying `color`
};

struct DefectReport {
    bool is_interval = true;
    int defect = 0;  // max over (v, color) of |c^-1(color) ∩ E_v|
    std::vector<std::pair<int, int>> violations;  // (vertex, missing color)
    DefectWitness witness;
};

/// Checks the per-vertex interval condition and computes the defect.
/// Witness ties break toward the lowest vertex index, then lowest color.
inline DefectReport validate_interval(const Graph& g, const EdgeColoring& c) {
    if (c.size() != g.edge_count())
        throw TotalityError("coloring covers " + std::to_string(c.size()) + " edges, graph has " +
                            std::to_string(g.edge_count()));
    DefectReport rep;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident_edges(v);
        if (inc.empty()) continue;  // c(E_v) = {} is vacuously an interval
        std::map<int, std::vector<int>> by_color;
        for (int e : inc) by_color[c[e]].push_back(e);
        int prev = by_color.begin()->first - 1;
        for (auto& [color, edges] : by_color) {
            for (int missing = prev + 1; missing < color; ++missing) {
                rep.is_interval = false;
                rep.violations.emplace_back(v, missing);
            }
            prev = color;
            if (static_cast<int>(edges.size()) > rep.defect) {
                rep.defect = static_cast<int>(edges.size());
                rep.witness = {v, color, edges};
            }
        }
    }
    return rep;
}

inline int impropriety_defect(const Graph& g, const EdgeColoring& c) {
    return validate_interval(g, c).defect;
}

/// Coloring file: one "edge-index color" pair per line, `#` comments.
inline std::string serialize_coloring(const EdgeColoring& c) {
    std::ostringstream out;
    for (int e = 0; e < c.size(); ++e) out << e << " " << c[e] << "\n";
    return out.str();
}

inline EdgeColoring parse_coloring(std::string_view text, const Graph& g) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    std::vector<int> colors(g.edge_count());
    std::vector<char> seen(g.edge_count(), 0);
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        long long e, col;
        if (!(ls >> e)) continue;
        if (!(ls >> col)) throw ParseError("line " + std::to_string(lineno) + ": expected color");
        if (e < 0 || e >= g.edge_count())
            throw ParseError("line " + std::to_string(lineno) + ": edge index out of range");
        colors[e] = static_cast<int>(col);
        seen[e] = 1;
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (!seen[e]) throw TotalityError("coloring missing edge " + std::to_string(e));
    return EdgeColoring(std::move(colors));
}

/// Deterministic DOT output. Colored edges get an integer label and a
/// stroke from a fixed palette keyed by color mod palette size.
inline std::string emit_dot(const Graph& g, const EdgeColoring* coloring = nullptr) {
    static constexpr std::array<const char*, 8> palette = {
        "black", "red", "blue", "forestgreen", "darkorange", "purple", "teal", "saddlebrown"};
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        out << "  " << u << " -- " << v;
        if (coloring) {
            int c = (*coloring)[e];
            int idx = ((c % static_cast<int>(palette.size())) + palette.size()) % palette.size();
            out << " [label=\"" << c << "\", color=" << palette[idx] << "]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace impro

#endif
