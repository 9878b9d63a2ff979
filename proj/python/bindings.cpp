#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "eqcolor/density.hpp"
#include "eqcolor/errors.hpp"
#include "eqcolor/generators.hpp"
#include "eqcolor/graph.hpp"
#include "eqcolor/io.hpp"
#include "eqcolor/params.hpp"
#include "eqcolor/solver.hpp"
#include "eqcolor/verify.hpp"

namespace py = pybind11;
using namespace eqcolor;

namespace {

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

py::dict stats_dict(const SolveStats& st) {
    py::dict d;
    d["divisibility_branch"] = st.divisibility_branch;
    d["conflicts"] = st.conflicts;
    d["place_moves"] = st.place_moves;
    d["friendly_moves"] = st.friendly_moves;
    d["claim2_moves"] = st.claim2_moves;
    d["final_moves"] = st.final_moves;
    d["max_a_iterations"] = st.max_a_iterations();
    d["a_histories"] = st.a_histories;
    d["elapsed_seconds"] = st.elapsed_seconds;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "equitable coloring of density-bounded sparse graphs";

    py::register_exception<PreconditionViolation>(m, "PreconditionViolation",
                                                  PyExc_ValueError);
    py::register_exception<ConditionViolation>(m, "ConditionViolation",
                                               PyExc_ValueError);
    py::register_exception<RatioOutOfRange>(m, "RatioOutOfRange", PyExc_ValueError);
    py::register_exception<InstanceTooLarge>(m, "InstanceTooLarge", PyExc_ValueError);
    py::register_exception<TheoremViolation>(m, "TheoremViolation",
                                             PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def(py::init<int>(), py::arg("n"))
        .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("add_vertex", &Graph::add_vertex)
        .def("add_edge", &Graph::add_edge)
        .def("remove_edge", &Graph::remove_edge)
        .def("has_edge", &Graph::has_edge)
        .def("degree", &Graph::degree)
        .def("max_degree", &Graph::max_degree)
        .def("neighbors",
             [](const Graph& g, int v) {
                 const auto& s = g.neighbors(v);
                 return std::vector<int>(s.begin(), s.end());
             })
        .def("edges", &Graph::edges)
        .def("induced", &Graph::induced)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("parse_edge_list", [](const std::string& text) {
        std::istringstream in(text);
        return read_edge_list(in);
    });
    m.def("format_edge_list", [](const Graph& g) {
        std::ostringstream out;
        write_edge_list(out, g);
        return out.str();
    });
    m.def("load_graph", &read_graph_file, py::arg("path"));

    py::class_<DegeneracyResult>(m, "DegeneracyResult")
        .def_readonly("order", &DegeneracyResult::order)
        .def_readonly("degeneracy", &DegeneracyResult::degeneracy)
        .def_readonly("back_degrees", &DegeneracyResult::back_degrees);
    m.def("degeneracy_order", &degeneracy_order);

    py::class_<Rational>(m, "Rational")
        .def_readonly("num", &Rational::num)
        .def_readonly("den", &Rational::den)
        .def("__float__", &Rational::value)
        .def("__repr__", [](const Rational& r) { return r.str(); });

    m.def("max_subgraph_density", &max_subgraph_density);
    m.def("max_subgraph_density_exhaustive", &max_subgraph_density_exhaustive,
          py::arg("g"), py::arg("cap") = 20);
    m.def(
        "max_bipartite_subgraph_density",
        [](const Graph& g, int cap) {
            auto r = max_bipartite_subgraph_density(g, cap);
            return py::make_tuple(r.density, r.side_a, r.side_b);
        },
        py::arg("g"), py::arg("cap") = 20);
    m.def(
        "check_membership",
        [](const Graph& g, double m1, double m2, int cap) {
            auto r = check_membership(g, m1, m2, cap);
            py::dict d;
            d["member"] = r.member;
            d["density"] = r.density;
            d["bipartite_checked"] = r.bipartite_checked;
            d["violating_set"] = r.violating_set;
            d["detail"] = r.detail;
            return d;
        },
        py::arg("g"), py::arg("m1"), py::arg("m2"), py::arg("cap") = 20);

    py::class_<SparsityParams>(m, "SparsityParams")
        .def_readonly("m1", &SparsityParams::m1)
        .def_readonly("m2", &SparsityParams::m2)
        .def_readonly("beta", &SparsityParams::beta)
        .def_readonly("r0", &SparsityParams::r0)
        .def_readonly("a0", &SparsityParams::a0)
        .def_readonly("floor_2m1", &SparsityParams::floor_2m1)
        .def_readonly("floor_a0", &SparsityParams::floor_a0)
        .def_readonly("min_r", &SparsityParams::min_r)
        .def("__repr__", [](const SparsityParams& p) {
            return "SparsityParams(m1=" + std::to_string(p.m1) +
                   ", m2=" + std::to_string(p.m2) + ", min_r=" +
                   std::to_string(p.min_r) + ")";
        });
    m.def("solve_beta", &solve_beta);
    m.def("build_params", &build_params, py::arg("m1"), py::arg("m2"));
    m.def("kplanar_params", &kplanar_params);
    m.def("kplanar_threshold", &kplanar_threshold);

    m.def(
        "equitable_color",
        [](const Graph& g, int r, double m1, double m2, bool paranoid) {
            auto params = build_params(m1, m2);
            SolveOptions opts;
            opts.paranoid = paranoid;
            SolveStats stats;
            auto colors = equitable_color(g, r, params, opts, &stats);
            return py::make_tuple(colors, stats_dict(stats));
        },
        py::arg("g"), py::arg("r"), py::arg("m1"), py::arg("m2"),
        py::arg("paranoid") = false);

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("proper", &VerifyReport::proper)
        .def_readonly("equitable", &VerifyReport::equitable)
        .def_readonly("conflict_edges", &VerifyReport::conflict_edges)
        .def_readonly("class_sizes", &VerifyReport::class_sizes)
        .def_readonly("detail", &VerifyReport::detail)
        .def("ok", &VerifyReport::ok);
    m.def("verify_coloring", &verify_coloring, py::arg("g"), py::arg("colors"),
          py::arg("r"));
    m.def("oracle_equitable", &oracle_equitable, py::arg("g"), py::arg("r"),
          py::arg("cap") = 16);

    m.def("gen_d_degenerate", &gen_d_degenerate, py::arg("n"), py::arg("d"),
          py::arg("seed"));
    m.def("gen_gnp", &gen_gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("gen_named", &gen_named, py::arg("kind"), py::arg("a"), py::arg("b") = 0);
}
