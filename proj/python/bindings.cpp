#include "unidom/bounds.hpp"
#include "unidom/cli.hpp"
#include "unidom/constructions.hpp"
#include "unidom/domination.hpp"
#include "unidom/graph.hpp"
#include "unidom/graph_io.hpp"
#include "unidom/json_output.hpp"
#include "unidom/search.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace unidom;

namespace {

// nlohmann json -> Python object through the json module; avoids a second
// conversion layer.
py::object to_python(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<std::vector<int>> set_list(const std::vector<VertexSet>& sets) {
    std::vector<std::vector<int>> out;
    for (const auto& s : sets) out.push_back(s.to_vector());
    return out;
}

VertexSet set_of(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
}

py::tuple rational(const Rational& r) { return py::make_tuple(r.numerator(), r.denominator()); }

Family family_of(const std::string& name) {
    if (name == "bipartite") return Family::bipartite;
    if (name == "fischermann") return Family::fischermann;
    if (name == "star") return Family::star;
    throw py::value_error("family must be bipartite, fischermann or star");
}

}  // namespace

PYBIND11_MODULE(_unidom, m) {
    m.doc() = "Unique minimum dominating sets: bounds, constructions, verification, search.";

    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<BoundDomainError>(m, "BoundDomainError", PyExc_ValueError);
    py::register_exception<SearchError>(m, "SearchError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<Edge>& edges) {
                 return Graph::from_edge_list(n, edges);
             }),
             py::arg("n"), py::arg("edges") = std::vector<Edge>{})
        .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
        .def_static("from_edge_list_text", [](const std::string& s) { return parse_edge_list(s); })
        .def("graph6", [](const Graph& g) { return emit_graph6(g); })
        .def("edge_list_text", [](const Graph& g) { return emit_edge_list(g); })
        .def("dot", [](const Graph& g, const std::vector<std::string>& labels) { return emit_dot(g, labels); },
             py::arg("labels") = std::vector<std::string>{})
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("edges", &Graph::edges)
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def("neighbors", [](const Graph& g, Vertex v) { return g.neighbors(v).to_vector(); })
        .def("has_isolated_vertex", &Graph::has_isolated_vertex)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) +
                   ")";
        });

    m.def("find_bipartition", [](const Graph& g) -> std::optional<py::tuple> {
        const auto p = find_bipartition(g);
        if (!p) return std::nullopt;
        return py::make_tuple(p->a.to_vector(), p->b.to_vector());
    });
    m.def("bipartite_complement",
          [](const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
              return bipartite_complement(g, Bipartition{set_of(a), set_of(b)});
          });
    m.def("degree_sequence", &degree_sequence);
    m.def("are_isomorphic", py::overload_cast<const Graph&, const Graph&>(&are_isomorphic));

    m.def("domination_number", &domination_number);
    m.def("is_dominating", [](const Graph& g, const std::vector<int>& s) { return is_dominating(g, set_of(s)); });
    m.def("minimum_dominating_sets",
          [](const Graph& g, std::optional<std::size_t> cap) {
              return set_list(enumerate_minimum_dominating_sets(g, cap.value_or(kNoCap)));
          },
          py::arg("g"), py::arg("cap") = py::none());
    m.def("is_umd", [](const Graph& g) { return to_python(to_json(is_umd(g))); },
          "Domination report as a dict (same layout as the CLI JSON).");
    m.def("exterior_private_neighbors", [](const Graph& g, Vertex v, const std::vector<int>& s) {
        return exterior_private_neighbors(g, v, set_of(s)).to_vector();
    });
    m.def("umd_instances_checked", &audit::umd_instances_checked);

    m.def("phi", &phi);
    m.def("bipartite_bound", &bipartite_bound);
    m.def("bipartite_bound_gamma2", &bipartite_bound_gamma2);
    m.def("n3g_bound", &n3g_bound);
    m.def("fischermann_bound", &fischermann_bound);
    m.def("vizing_bound", [](std::int64_t n, std::int64_t g) { return rational(vizing_bound(n, g)); },
          "Exact value as (numerator, denominator).");
    m.def("star_bound", &star_bound);
    m.def("tau", &tau);
    m.def("min_forest_edges", &min_forest_edges);
    m.def("bound_row", [](std::int64_t n, std::int64_t g) { return to_python(bound_row(n, g)); });

    m.def("construct",
          [](const std::string& family, int n, int gamma) {
              const Construction c = construct(family_of(family), n, gamma);
              std::vector<std::string> roles;
              for (Role r : c.layout.role_of) roles.emplace_back(role_name(r));
              py::dict layout;
              layout["names"] = c.layout.name_of;
              layout["roles"] = roles;
              layout["dominators"] = c.layout.intended_dominators.to_vector();
              return py::make_tuple(c.graph, layout);
          },
          py::arg("family"), py::arg("n"), py::arg("gamma") = 0);
    m.def("verify_construction",
          [](const std::string& family, int n, int gamma) {
              const Construction c = construct(family_of(family), n, gamma);
              const auto expected = family == "bipartite"     ? bipartite_bound(n, gamma)
                                    : family == "fischermann" ? fischermann_bound(n, gamma)
                                                              : star_bound(n);
              return to_python(to_json(verify_construction(c.graph, c.layout, static_cast<int>(expected))));
          },
          py::arg("family"), py::arg("n"), py::arg("gamma") = 0);

    m.def("max_umd_bipartite_size",
          [](int n, int gamma, std::optional<double> budget, unsigned threads) {
              SearchOptions o;
              if (budget) o.budget = std::chrono::duration<double>(*budget);
              o.threads = threads;
              SearchResult r;
              {
                  py::gil_scoped_release release;
                  r = max_umd_bipartite_size(n, gamma, o);
              }
              return to_python(to_json(r));
          },
          py::arg("n"), py::arg("gamma"), py::arg("budget") = py::none(), py::arg("threads") = 0);
    m.def("count_extremal_witnesses",
          [](int n, int gamma, int size, std::optional<double> budget, unsigned threads) {
              SearchOptions o;
              if (budget) o.budget = std::chrono::duration<double>(*budget);
              o.threads = threads;
              SearchResult r;
              {
                  py::gil_scoped_release release;
                  r = count_extremal_witnesses(n, gamma, size, o);
              }
              return to_python(to_json(r));
          },
          py::arg("n"), py::arg("gamma"), py::arg("size"), py::arg("budget") = py::none(),
          py::arg("threads") = 0);
    m.def("verify_forest_lemma", &verify_forest_lemma);

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::vector<const char*> argv{"unidom"};
              for (const auto& a : args) argv.push_back(a.c_str());
              std::ostringstream out, err;
              const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          "Run the command line front end in-process; returns (exit_code, stdout, stderr).");
}
