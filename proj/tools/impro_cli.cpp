// impro: improper interval edge colorings of outerplanar graphs, k-tree
// lower-bound certificates, and an exact impropriety solver.
//
// Exit codes: 0 ok, 1 input/parameter error, 2 not outerplanar,
//             3 search budget exhausted, 4 verification failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "impro/coloring.hpp"
#include "impro/graph.hpp"
#include "impro/ktree.hpp"
#include "impro/outerplanar.hpp"
#include "impro/solver.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNotOuterplanar = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerify = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw impro::ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a_hex(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Manifest {
    std::string command;
    std::string input_digest;
    json parameters = json::object();
    std::vector<std::string> outputs;
};

class OutputWriter {
public:
    OutputWriter(fs::path dir, std::string stem, Manifest manifest)
        : dir_(std::move(dir)), stem_(std::move(stem)), manifest_(std::move(manifest)) {}

    void write(const std::string& suffix, const std::string& content) {
        fs::create_directories(dir_);
        fs::path p = dir_ / (stem_ + suffix);
        std::ofstream out(p, std::ios::binary);
        out << content;
        manifest_.outputs.push_back(p.string());
        std::cerr << "wrote " << p.string() << "\n";
    }

    ~OutputWriter() {
        if (manifest_.outputs.empty()) return;
        json j{{"command", manifest_.command},
               {"input_digest", manifest_.input_digest},
               {"parameters", manifest_.parameters},
               {"tool_version", kVersion},
               {"outputs", manifest_.outputs}};
        std::ofstream out(dir_ / (stem_ + ".manifest.json"));
        out << j.dump(2) << "\n";
    }

private:
    fs::path dir_;
    std::string stem_;
    Manifest manifest_;
};

impro::GraphFormat parse_format(const std::string& fmt) {
    if (fmt == "edge-list") return impro::GraphFormat::edge_list;
    if (fmt == "graph6") return impro::GraphFormat::graph6;
    throw impro::ParseError("unknown format: " + fmt);
}

std::string default_out_dir() {
    const char* env = std::getenv("IMPRO_OUT_DIR");
    return env ? env : ".";
}

std::string report_line(const impro::DefectReport& rep) {
    std::ostringstream out;
    out << "interval=" << (rep.is_interval ? "true" : "false") << " defect=" << rep.defect;
    return out.str();
}

int cmd_color(const std::string& input, const std::string& fmt, int root_face,
              const std::vector<std::string>& emit, const std::string& out_dir) {
    std::string text = read_file(input);
    impro::Graph g = impro::parse_graph(text, parse_format(fmt));

    impro::ColorResult res;
    try {
        res = impro::color_outerplanar(g, root_face);
    } catch (const impro::NotOuterplanarError& e) {
        std::cerr << e.what() << "\n";
        return kExitNotOuterplanar;
    }
    std::cout << report_line(res.report) << "\n";

    Manifest man{"color", fnv1a_hex(text),
                 json{{"input", input}, {"format", fmt}, {"root_face", root_face}}, {}};
    OutputWriter writer(out_dir, fs::path(input).stem().string(), std::move(man));
    for (const auto& what : emit) {
        if (what == "coloring")
            writer.write(".coloring", impro::serialize_coloring(res.coloring));
        else if (what == "dot")
            writer.write(".dot", impro::emit_dot(g, &res.coloring));
        else if (what == "report")
            writer.write(".report", report_line(res.report) + "\n");
        else
            throw impro::ParseError("unknown --emit kind: " + what);
    }
    return kExitOk;
}

int cmd_ktree(int k, int m, int n, int target, const std::vector<std::string>& emit,
              const std::string& out_dir) {
    if (target > 0) {
        auto [mm, nn] = impro::size_for_target(k, target);
        m = mm;
        n = nn;
        std::cout << "target " << target << ": m=" << m << " n=" << n << "\n";
    }
    auto wit = impro::gen_ktree(k, m, n);
    auto cert = impro::certificate(k, m, n);
    std::cout << "T_{" << m << "," << n << "}^(" << k << "): |V|=" << wit.graph.vertex_count()
              << " |E|=" << wit.graph.edge_count() << " lower_bound=" << cert.lower_bound << "\n";

    std::ostringstream stem;
    stem << "ktree_k" << k << "_m" << m << "_n" << n;
    Manifest man{"ktree", "",
                 json{{"k", k}, {"m", m}, {"n", n}, {"target", target}}, {}};
    OutputWriter writer(out_dir, stem.str(), std::move(man));
    for (const auto& what : emit) {
        if (what == "graph")
            writer.write(".edges", impro::serialize_edge_list(wit.graph));
        else if (what == "certificate") {
            writer.write(".certificate.txt", impro::certificate_report(cert));
            json j{{"k", cert.k},
                   {"m", cert.m},
                   {"n", cert.n},
                   {"color_interval_halfwidth", cert.color_interval_halfwidth},
                   {"color_count", cert.color_count},
                   {"e1_size", static_cast<long long>(cert.m) * cert.n},
                   {"lower_bound", cert.lower_bound}};
            if (cert.simplified_bound) j["simplified_bound"] = *cert.simplified_bound;
            writer.write(".certificate.json", j.dump(2) + "\n");
        } else
            throw impro::ParseError("unknown --emit kind: " + what);
    }
    return kExitOk;
}

int cmd_exact(const std::string& input, const std::string& fmt, int max_defect,
              long long budget, const std::string& order) {
    std::string text = read_file(input);
    impro::Graph g = impro::parse_graph(text, parse_format(fmt));
    if (g.edge_count() > 30)
        std::cerr << "warning: " << g.edge_count() << " edges; exact search may not finish\n";

    impro::SearchConfig cfg;
    cfg.node_budget = budget;
    if (order == "bfs")
        cfg.edge_order = impro::SearchConfig::EdgeOrder::bfs;
    else if (order == "degeneracy")
        cfg.edge_order = impro::SearchConfig::EdgeOrder::degeneracy;
    else if (order == "input")
        cfg.edge_order = impro::SearchConfig::EdgeOrder::input;
    else
        throw impro::ParseError("unknown edge order: " + order);

    if (max_defect > 0) {
        // decision form on one defect level
        cfg.max_defect = max_defect;
        if (!g.connected()) {
            std::cerr << "decision mode needs a connected graph\n";
            return kExitInput;
        }
        auto out = impro::exists_coloring(g, cfg);
        switch (out.decision) {
            case impro::Decision::yes:
                std::cout << "defect " << max_defect << ": yes\n"
                          << impro::serialize_coloring(out.witness);
                return kExitOk;
            case impro::Decision::no:
                std::cout << "defect " << max_defect << ": no\n";
                return kExitOk;
            case impro::Decision::budget_exhausted:
                std::cout << "defect " << max_defect << ": budget exhausted after " << out.nodes
                          << " nodes\n";
                return kExitBudget;
        }
    }
    auto res = impro::exact_impropriety(g, cfg);
    if (res.exact()) {
        std::cout << "impro = " << res.lower << "\n";
        if (res.witness) std::cout << impro::serialize_coloring(*res.witness);
        return kExitOk;
    }
    std::cout << "bounds [" << res.lower << ", " << res.upper << "] (budget exhausted)\n";
    return kExitBudget;
}

int cmd_verify(const std::string& graph_file, const std::string& coloring_file,
               const std::string& fmt) {
    impro::Graph g = impro::parse_graph(read_file(graph_file), parse_format(fmt));
    impro::EdgeColoring c = impro::parse_coloring(read_file(coloring_file), g);
    auto rep = impro::validate_interval(g, c);
    std::cout << report_line(rep) << "\n";
    for (auto [v, color] : rep.violations)
        std::cout << "gap: vertex " << v << " missing color " << color << "\n";
    if (rep.witness.vertex >= 0)
        std::cout << "defect witness: vertex " << rep.witness.vertex << " color "
                  << rep.witness.color << " on " << rep.witness.edges.size() << " edges\n";
    return rep.is_interval ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"improper interval edge coloring toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string input, fmt = "edge-list", out_dir = default_out_dir();
    std::vector<std::string> emit;

    auto* color = app.add_subcommand("color", "defect-2 coloring of an outerplanar graph");
    color->add_option("input", input, "graph file")->required();
    color->add_option("--format", fmt, "edge-list|graph6");
    int root_face = -1;
    color->add_option("--root-face", root_face, "root face override");
    color->add_option("--emit", emit, "dot|coloring|report (repeatable)");
    color->add_option("-o,--out-dir", out_dir, "output directory");

    auto* ktree = app.add_subcommand("ktree", "generate T_{m,n}^{(k)} and its certificate");
    int k = 0, m = 0, n = 0, target = 0;
    ktree->add_option("-k", k, "clique parameter (>= 2)")->required();
    ktree->add_option("-m", m, "star arms");
    ktree->add_option("-n", n, "path length");
    ktree->add_option("--target", target, "pick m=n for a target lower bound");
    ktree->add_option("--emit", emit, "graph|certificate (repeatable)");
    ktree->add_option("-o,--out-dir", out_dir, "output directory");

    auto* exact = app.add_subcommand("exact", "exact impropriety by bounded search");
    exact->add_option("input", input, "graph file")->required();
    exact->add_option("--format", fmt, "edge-list|graph6");
    int max_defect = 0;
    long long budget = 100'000'000;
    std::string order = "bfs";
    exact->add_option("--max-defect", max_defect, "decision mode at one defect level");
    exact->add_option("--budget", budget, "search node budget");
    exact->add_option("--order", order, "bfs|degeneracy|input");

    auto* verify = app.add_subcommand("verify", "validate a coloring file against a graph");
    std::string coloring_file;
    verify->add_option("graph", input, "graph file")->required();
    verify->add_option("coloring", coloring_file, "coloring file")->required();
    verify->add_option("--format", fmt, "edge-list|graph6");

    CLI11_PARSE(app, argc, argv);

    try {
        if (color->parsed()) return cmd_color(input, fmt, root_face, emit, out_dir);
        if (ktree->parsed()) {
            if (target <= 0 && (m <= 0 || n <= 0)) {
                std::cerr << "ktree: need -m and -n, or --target\n";
                return kExitInput;
            }
            return cmd_ktree(k, m, n, target, emit, out_dir);
        }
        if (exact->parsed()) return cmd_exact(input, fmt, max_defect, budget, order);
        if (verify->parsed()) return cmd_verify(input, coloring_file, fmt);
    } catch (const impro::TotalityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const impro::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const impro::GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
