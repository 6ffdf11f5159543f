#ifndef IMPRO_GRAPH_HPP
#define IMPRO_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace impro {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct GraphError : std::runtime_error {
    explicit GraphError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Simple undirected graph with dense vertex indices 0..n-1 and stable
/// edge identifiers 0..m-1 in insertion order.
class Graph {
public:
    Graph() = default;

    Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
        : n_(vertex_count), edges_(std::move(edges)) {
        if (n_ < 0) throw GraphError("negative vertex count");
        adj_.assign(n_, {});
        for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
            auto [u, v] = edges_[e];
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw GraphError("edge " + std::to_string(e) + " has out-of-range endpoint");
            if (u == v)
                throw GraphError("self-loop at vertex " + std::to_string(u));
            adj_[u].push_back(e);
            adj_[v].push_back(e);
        }
        // parallel-edge check via sorted normalized pairs
        std::vector<std::pair<int, int>> norm(edges_.size());
        for (size_t e = 0; e < edges_.size(); ++e)
            norm[e] = {std::min(edges_[e].first, edges_[e].second),
                       std::max(edges_[e].first, edges_[e].second)};
        std::sort(norm.begin(), norm.end());
        if (std::adjacent_find(norm.begin(), norm.end()) != norm.end())
            throw GraphError("parallel edge");
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::pair<int, int> edge(int e) const { return edges_[e]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Edge ids incident with v.
    const std::vector<int>& incident_edges(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    int other_end(int e, int v) const {
        auto [a, b] = edges_[e];
        return a == v ? b : a;
    }

    std::optional<int> find_edge(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) return std::nullopt;
        const int a = degree(u) <= degree(v) ? u : v;
        const int b = a == u ? v : u;
        for (int e : adj_[a])
            if (other_end(e, a) == b) return e;
        return std::nullopt;
    }

    bool has_edge(int u, int v) const { return find_edge(u, v).has_value(); }

    /// Connected components as vertex lists, ordered by smallest vertex.
    std::vector<std::vector<int>> components() const {
        std::vector<std::vector<int>> comps;
        std::vector<char> seen(n_, 0);
        for (int s = 0; s < n_; ++s) {
            if (seen[s]) continue;
            std::vector<int> comp{s};
            seen[s] = 1;
            for (size_t head = 0; head < comp.size(); ++head) {
                int v = comp[head];
                for (int e : adj_[v]) {
                    int w = other_end(e, v);
                    if (!seen[w]) {
                        seen[w] = 1;
                        comp.push_back(w);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    bool connected() const { return n_ <= 1 || components().size() == 1; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

enum class GraphFormat { edge_list, graph6 };

/// Edge-list text: first non-comment line is the vertex count, then one
/// "u v" pair per line. `#` starts a comment.
inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    long long n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n)) {
                if (ls.eof()) continue;  // blank/comment line before header
                throw ParseError("line " + std::to_string(lineno) + ": expected vertex count");
            }
            if (n < 0) throw ParseError("line " + std::to_string(lineno) + ": negative vertex count");
            std::string rest;
            if (ls >> rest) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens after vertex count");
            continue;
        }
        long long u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v)) throw ParseError("line " + std::to_string(lineno) + ": expected two vertex indices");
        std::string rest;
        if (ls >> rest) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("line " + std::to_string(lineno) + ": vertex index out of range");
        if (u == v) throw ParseError("line " + std::to_string(lineno) + ": self-loop");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError("missing vertex-count header");
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const GraphError& e) {
        throw ParseError(e.what());
    }
}

/// graph6 byte encoding (standard nauty format). Supports the short form
/// (n <= 62) and the 3-byte long form (n <= 258047). Edges are emitted in
/// lexicographic pair order.
inline Graph parse_graph6(std::string_view text) {
    // strip optional header and trailing whitespace
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty()) throw ParseError("graph6: empty input");

    size_t pos = 0;
    auto need = [&](size_t k) {
        if (pos + k > text.size())
            throw ParseError("graph6: truncated at byte " + std::to_string(pos));
    };
    auto val = [&](size_t i) -> int {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: invalid byte at position " + std::to_string(i));
        return c - 63;
    };

    long long n;
    if (val(0) < 63) {
        n = val(0);
        pos = 1;
    } else {  // text[0] == '~'
        need(2);
        if (val(1) == 63) {  // 6-byte form
            need(8);
            n = 0;
            for (size_t i = 2; i < 8; ++i) n = (n << 6) | val(i);
            pos = 8;
        } else {
            need(4);
            n = 0;
            for (size_t i = 1; i < 4; ++i) n = (n << 6) | val(i);
            pos = 4;
        }
    }
    if (n > 1'000'000) throw ParseError("graph6: vertex count too large");

    const long long bits = n * (n - 1) / 2;
    const size_t bytes = static_cast<size_t>((bits + 5) / 6);
    need(bytes);
    if (pos + bytes != text.size())
        throw ParseError("graph6: trailing bytes after body");

    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int b = val(pos + bit / 6);
            if ((b >> (5 - bit % 6)) & 1) adj[i][j] = 1;
        }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (adj[u][v]) edges.emplace_back(u, v);
    return Graph(static_cast<int>(n), std::move(edges));
}

inline Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::edge_list ? parse_edge_list(text) : parse_graph6(text);
}

inline std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

}  // namespace impro

#endif
