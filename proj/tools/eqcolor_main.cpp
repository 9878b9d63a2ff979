#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqcolor/density.hpp"
#include "eqcolor/errors.hpp"
#include "eqcolor/generators.hpp"
#include "eqcolor/graph.hpp"
#include "eqcolor/io.hpp"
#include "eqcolor/params.hpp"
#include "eqcolor/solver.hpp"
#include "eqcolor/verify.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitTheorem = 3;
constexpr int kExitTooLarge = 4;

int default_oracle_cap() {
    if (const char* env = std::getenv("EQCOLOR_ORACLE_CAP")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 16;
}

json params_json(const eqcolor::SparsityParams& p) {
    return json{{"m1", p.m1},           {"m2", p.m2},
                {"beta", p.beta},       {"r0", p.r0},
                {"a0", p.a0},           {"floor_2m1", p.floor_2m1},
                {"floor_a0", p.floor_a0}, {"min_r", p.min_r}};
}

struct ColorArgs {
    std::string input = "-";
    std::string output;
    std::string trace_path;
    int r = -1;
    double m1 = -1, m2 = -1;
    int k = -1;
    bool auto_density = false;
    bool paranoid = false;
};

eqcolor::SparsityParams resolve_params(const ColorArgs& a, const eqcolor::Graph& g) {
    int modes = (a.m1 >= 0 || a.m2 >= 0 ? 1 : 0) + (a.k >= 0 ? 1 : 0) +
                (a.auto_density ? 1 : 0);
    if (modes != 1)
        throw eqcolor::PreconditionViolation(
            "choose exactly one of --m1/--m2, --k, or --auto");
    if (a.k >= 0) {
        auto [m1, m2] = eqcolor::kplanar_params(a.k);
        return eqcolor::build_params(m1, m2);
    }
    if (a.auto_density) {
        double m1 = eqcolor::max_subgraph_density(g).value();
        if (m1 <= 0) m1 = 0.5;  // edgeless; any positive bound works
        return eqcolor::build_params(m1, m1);
    }
    if (a.m1 < 0 || a.m2 < 0)
        throw eqcolor::PreconditionViolation("--m1 and --m2 must be given together");
    return eqcolor::build_params(a.m1, a.m2);
}

int run_color(const ColorArgs& a) {
    eqcolor::Graph g = eqcolor::read_graph_file(a.input);
    eqcolor::SparsityParams params = resolve_params(a, g);
    int r = a.r;
    if (r < 0) r = std::max(g.max_degree(), params.min_r);

    eqcolor::SolveOptions opts;
    opts.paranoid = a.paranoid;
    std::ofstream trace_file;
    if (!a.trace_path.empty()) {
        trace_file.open(a.trace_path);
        if (!trace_file) throw eqcolor::Error("cannot open trace file " + a.trace_path);
        opts.trace = &trace_file;
    }
    eqcolor::SolveStats stats;
    auto colors = eqcolor::equitable_color(g, r, params, opts, &stats);

    auto rep = eqcolor::verify_coloring(g, colors, r);
    if (!rep.ok())
        throw eqcolor::TheoremViolation("solver output failed verification: " + rep.detail,
                                        "");

    std::ostream* out = &std::cout;
    std::ofstream fout;
    if (!a.output.empty()) {
        fout.open(a.output);
        if (!fout) throw eqcolor::Error("cannot open output file " + a.output);
        out = &fout;
    }
    for (int v = 0; v < g.vertex_count(); ++v) *out << v << " " << colors[v] << "\n";

    json stats_json{{"n", g.vertex_count()},
                    {"m", g.edge_count()},
                    {"r", r},
                    {"conflicts", stats.conflicts},
                    {"max_a_iterations", stats.max_a_iterations()},
                    {"elapsed", stats.elapsed_seconds},
                    {"divisibility_branch", stats.divisibility_branch},
                    {"moves",
                     {{"place", stats.place_moves},
                      {"friendly", stats.friendly_moves},
                      {"claim2", stats.claim2_moves},
                      {"final", stats.final_moves}}},
                    {"params", params_json(params)}};
    std::cerr << stats_json.dump() << "\n";
    return kExitOk;
}

int run_verify(const std::string& input, const std::string& coloring_path, int r,
               bool json_out) {
    eqcolor::Graph g = eqcolor::read_graph_file(input);
    std::ifstream cf(coloring_path);
    if (!cf) throw eqcolor::Error("cannot open coloring file " + coloring_path);
    std::vector<int> colors(g.vertex_count(), 0);
    int v, c;
    while (cf >> v >> c) {
        if (v < 0 || v >= g.vertex_count())
            throw eqcolor::Error("coloring file: vertex " + std::to_string(v) +
                                 " out of range");
        colors[v] = c;
    }
    if (r < 0)
        r = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
    auto rep = eqcolor::verify_coloring(g, colors, r);
    if (json_out) {
        json j{{"proper", rep.proper},
               {"equitable", rep.equitable},
               {"class_sizes", rep.class_sizes},
               {"conflict_edges", json::array()},
               {"detail", rep.detail}};
        for (auto [x, y] : rep.conflict_edges) j["conflict_edges"].push_back({x, y});
        std::cout << j.dump() << "\n";
    } else {
        std::cout << rep.detail << "\n";
    }
    return rep.ok() ? kExitOk : kExitPrecondition;
}

int run_oracle(const std::string& input, int r, int cap, bool json_out) {
    eqcolor::Graph g = eqcolor::read_graph_file(input);
    auto res = eqcolor::oracle_equitable(g, r, cap);
    if (json_out) {
        json j{{"feasible", res.has_value()}, {"r", r}, {"n", g.vertex_count()}};
        if (res) j["colors"] = *res;
        std::cout << j.dump() << "\n";
    } else if (res) {
        std::cout << "feasible\n";
        for (int v = 0; v < g.vertex_count(); ++v)
            std::cout << v << " " << (*res)[v] << "\n";
    } else {
        std::cout << "infeasible\n";
    }
    return kExitOk;
}

int run_density(const std::string& input, int bip_cap, bool with_bipartite,
                std::optional<double> m1, std::optional<double> m2) {
    eqcolor::Graph g = eqcolor::read_graph_file(input);
    json j;
    auto ds = eqcolor::densest_subgraph(g);
    j["density"] = {{"value", ds.density.value()},
                    {"num", ds.density.num},
                    {"den", ds.density.den},
                    {"witness", ds.vertices}};
    if (with_bipartite) {
        auto bd = eqcolor::max_bipartite_subgraph_density(g, bip_cap);
        j["bipartite_density"] = {{"value", bd.density.value()},
                                  {"num", bd.density.num},
                                  {"den", bd.density.den},
                                  {"side_a", bd.side_a},
                                  {"side_b", bd.side_b}};
    }
    if (m1 && m2) {
        auto rep = eqcolor::check_membership(g, *m1, *m2, bip_cap);
        j["membership"] = {{"member", rep.member},
                           {"bipartite_checked", rep.bipartite_checked},
                           {"violating_set", rep.violating_set},
                           {"detail", rep.detail}};
    }
    std::cout << j.dump() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equitable coloring toolkit for density-bounded sparse graphs"};
    app.require_subcommand(1);

    ColorArgs ca;
    auto* color = app.add_subcommand("color", "equitably color a graph");
    color->add_option("input", ca.input, "edge list or DIMACS file, '-' for stdin");
    color->add_option("-o,--output", ca.output, "coloring output file");
    color->add_option("-r", ca.r, "number of colors (default max(Delta, ceil(r0)))");
    color->add_option("--m1", ca.m1, "overall density bound");
    color->add_option("--m2", ca.m2, "bipartite density bound");
    color->add_option("-k,--k-planar", ca.k, "use k-planar density presets");
    color->add_flag("--auto", ca.auto_density, "derive bounds from the input graph");
    color->add_flag("--paranoid", ca.paranoid, "revalidate every solver step");
    color->add_option("--trace", ca.trace_path, "write JSON step trace to file");

    std::string v_input = "-", v_coloring;
    int v_r = -1;
    bool v_json = false;
    auto* verify = app.add_subcommand("verify", "check a coloring file");
    verify->add_option("input", v_input, "graph file");
    verify->add_option("coloring", v_coloring, "file of 'vertex color' lines")
        ->required();
    verify->add_option("-r", v_r, "number of colors (default max color)");
    verify->add_flag("--json", v_json, "JSON report");

    std::string o_input = "-";
    int o_r = 0, o_cap = default_oracle_cap();
    bool o_json = false;
    auto* oracle = app.add_subcommand("oracle", "exhaustive equitable colorability");
    oracle->add_option("input", o_input, "graph file");
    oracle->add_option("-r", o_r, "number of colors")->required();
    oracle->add_option("--cap", o_cap, "vertex-count cap");
    oracle->add_flag("--json", o_json, "JSON report");

    double p_m1 = -1, p_m2 = -1;
    int p_k = -1;
    auto* params = app.add_subcommand("params", "derived parameter record");
    params->add_option("--m1", p_m1, "overall density bound");
    params->add_option("--m2", p_m2, "bipartite density bound");
    params->add_option("-k,--k-planar", p_k, "k-planar preset");

    std::string g_kind = "d-degenerate", g_out;
    int g_n = 0, g_d = 1, g_a = 0, g_b = 0;
    double g_p = 0.5;
    std::uint64_t g_seed = 1;
    auto* gen = app.add_subcommand("gen", "graph generators");
    gen->add_option("--kind", g_kind,
                    "d-degenerate | gnp | complete | complete_bipartite | cycle | "
                    "path | star | empty");
    gen->add_option("--n", g_n, "vertex count");
    gen->add_option("--d", g_d, "degeneracy bound");
    gen->add_option("--p", g_p, "edge probability for gnp");
    gen->add_option("--a", g_a, "first size for fixed families");
    gen->add_option("--b", g_b, "second size for fixed families");
    gen->add_option("--seed", g_seed, "64-bit seed");
    gen->add_option("-o,--output", g_out, "output file (default stdout)");

    std::string d_input = "-";
    int d_cap = 20;
    bool d_bip = false;
    double d_m1 = -1, d_m2 = -1;
    auto* density = app.add_subcommand("density", "exact density measurements");
    density->add_option("input", d_input, "graph file");
    density->add_flag("--bipartite", d_bip, "also compute bipartite density");
    density->add_option("--cap", d_cap, "bipartite search vertex cap");
    density->add_option("--m1", d_m1, "membership bound to check");
    density->add_option("--m2", d_m2, "bipartite membership bound to check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (*color) return run_color(ca);
        if (*verify) return run_verify(v_input, v_coloring, v_r, v_json);
        if (*oracle) return run_oracle(o_input, o_r, o_cap, o_json);
        if (*params) {
            eqcolor::SparsityParams sp;
            if (p_k >= 0) {
                auto [m1, m2] = eqcolor::kplanar_params(p_k);
                sp = eqcolor::build_params(m1, m2);
            } else if (p_m1 > 0 && p_m2 > 0) {
                sp = eqcolor::build_params(p_m1, p_m2);
            } else {
                throw eqcolor::PreconditionViolation("need --m1/--m2 or --k");
            }
            std::cout << params_json(sp).dump() << "\n";
            return kExitOk;
        }
        if (*gen) {
            eqcolor::Graph g;
            if (g_kind == "d-degenerate")
                g = eqcolor::gen_d_degenerate(g_n, g_d, g_seed);
            else if (g_kind == "gnp")
                g = eqcolor::gen_gnp(g_n, g_p, g_seed);
            else
                g = eqcolor::gen_named(g_kind, g_a > 0 ? g_a : g_n, g_b);
            std::ofstream fout;
            std::ostream* out = &std::cout;
            if (!g_out.empty()) {
                fout.open(g_out);
                if (!fout) throw eqcolor::Error("cannot open output file " + g_out);
                out = &fout;
            }
            eqcolor::write_edge_list(*out, g);
            return kExitOk;
        }
        if (*density) {
            std::optional<double> m1, m2;
            if (d_m1 > 0) m1 = d_m1;
            if (d_m2 > 0) m2 = d_m2;
            return run_density(d_input, d_cap, d_bip || (m1 && m2), m1, m2);
        }
    } catch (const eqcolor::TheoremViolation& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        if (!e.state_dump.empty()) std::cerr << e.state_dump << "\n";
        return kExitTheorem;
    } catch (const eqcolor::InstanceTooLarge& e) {
        std::cerr << "instance too large: " << e.what() << "\n";
        return kExitTooLarge;
    } catch (const eqcolor::RatioOutOfRange& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const eqcolor::ConditionViolation& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const eqcolor::PreconditionViolation& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const eqcolor::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
