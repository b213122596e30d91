#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lampack/constructive.hpp"
#include "lampack/families.hpp"
#include "lampack/graph6.hpp"
#include "lampack/harness.hpp"
#include "lampack/solver.hpp"
#include "lampack/structure.hpp"

namespace py = pybind11;
using namespace lampack;

namespace {

// python-side path representation: (end, center, end)
py::tuple path_tuple(const VertexPath3& p) {
    return py::make_tuple(p.ends[0], p.center, p.ends[1]);
}

VertexPath3 path_from(const std::tuple<int, int, int>& t) {
    return VertexPath3(std::get<1>(t), std::get<0>(t), std::get<2>(t));
}

PackingConstraints build_constraints(
    const std::optional<std::pair<int, int>>& required_edge,
    const std::optional<std::tuple<int, int, int>>& required_path,
    const std::vector<std::pair<int, int>>& forbidden_edges,
    const std::vector<int>& deleted_vertices) {
    PackingConstraints c;
    if (required_edge)
        c.required_edge = make_edge(required_edge->first, required_edge->second);
    if (required_path) c.required_path = path_from(*required_path);
    for (const auto& [u, v] : forbidden_edges)
        c.forbidden_edges.push_back(make_edge(u, v));
    c.deleted_vertices = deleted_vertices;
    return c;
}

py::object packing_or_none(const SolveResult& r) {
    if (r.status == SolveStatus::kBudgetExceeded)
        throw std::runtime_error("node budget exhausted after " +
                                 std::to_string(r.nodes) + " nodes");
    if (r.status == SolveStatus::kInfeasible) return py::none();
    py::list out;
    for (const auto& p : r.packing.paths) out.append(path_tuple(p));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "packings of 3-vertex paths in small graphs";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init<int, const std::vector<Edge>&>(), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def("edge_count", &Graph::edge_count)
        .def("has_edge", &Graph::has_edge)
        .def("degree", &Graph::degree)
        .def("neighbors", &Graph::neighbor_list)
        .def("edges", &Graph::edges)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream os;
            os << "Graph(n=" << g.vertex_count() << ", m=" << g.edge_count()
               << ")";
            return os.str();
        });

    m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); },
          py::arg("record"));
    m.def("emit_graph6", &emit_graph6, py::arg("graph"));
    m.def("read_graph6_file", &read_graph6_file, py::arg("path"));

    m.def("is_connected", &is_connected);
    m.def("is_claw_free", &is_claw_free);
    m.def("is_cubic", &is_cubic);
    m.def("vertex_connectivity", &vertex_connectivity);
    m.def("blocks", [](const Graph& g) {
        auto bd = block_decomposition(g);
        return py::make_tuple(bd.blocks, bd.cut_vertices, bd.end_block_count);
    }, "block vertex sets, cut vertices, and the end-block count");
    m.def("triangles", [](const Graph& g) { return triangle_profile(g).triangles; });

    m.def(
        "max_packing",
        [](const Graph& g, const std::optional<std::pair<int, int>>& required_edge,
           const std::optional<std::tuple<int, int, int>>& required_path,
           const std::vector<std::pair<int, int>>& forbidden_edges,
           const std::vector<int>& deleted_vertices, std::uint64_t budget) {
            return packing_or_none(max_packing(
                g,
                build_constraints(required_edge, required_path, forbidden_edges,
                                  deleted_vertices),
                budget));
        },
        py::arg("graph"), py::kw_only(), py::arg("required_edge") = py::none(),
        py::arg("required_path") = py::none(),
        py::arg("forbidden_edges") = std::vector<std::pair<int, int>>{},
        py::arg("deleted_vertices") = std::vector<int>{},
        py::arg("budget") = kDefaultNodeBudget,
        "list of (end, center, end) triples, or None if the constraints "
        "admit no packing");

    m.def(
        "has_factor",
        [](const Graph& g, const std::optional<std::pair<int, int>>& required_edge,
           const std::optional<std::tuple<int, int, int>>& required_path,
           const std::vector<std::pair<int, int>>& forbidden_edges,
           const std::vector<int>& deleted_vertices, std::uint64_t budget) {
            auto r = has_factor(
                g,
                build_constraints(required_edge, required_path, forbidden_edges,
                                  deleted_vertices),
                budget);
            if (r.status == SolveStatus::kBudgetExceeded)
                throw std::runtime_error("node budget exhausted");
            return r.status == SolveStatus::kSolved;
        },
        py::arg("graph"), py::kw_only(), py::arg("required_edge") = py::none(),
        py::arg("required_path") = py::none(),
        py::arg("forbidden_edges") = std::vector<std::pair<int, int>>{},
        py::arg("deleted_vertices") = std::vector<int>{},
        py::arg("budget") = kDefaultNodeBudget);

    m.def("lambda_number", [](const Graph& g) { return lambda_number(g); },
          py::arg("graph"));

    m.def("gen_net", &gen_net);
    m.def("gen_class_A", &gen_class_A, py::arg("steps"));
    m.def("is_class_A", &is_class_A);
    m.def("gen_H", [] {
        auto h = gen_H();
        return py::make_tuple(h.graph, h.t);
    });
    m.def("gen_R", [](int la, int lb) {
        auto r = gen_R(la, lb);
        return py::make_tuple(r.graph, r.a, r.b);
    }, py::arg("la"), py::arg("lb"));
    m.def("gen_Q", [](int la, int lb) {
        auto q = gen_Q(la, lb);
        return py::make_tuple(q.graph, q.e);
    }, py::arg("la"), py::arg("lb"));
    m.def("sample_cubic", &sample_cubic, py::arg("n"), py::arg("seed"));

    m.def("triangle_blowup", [](const Graph& g) { return triangle_blowup(g).blown; },
          py::arg("base"));
    m.def("recognize_blowup", [](const Graph& g) -> py::object {
        auto m2 = recognize_blowup(g);
        if (!m2) return py::none();
        return py::cast(m2->base);
    }, py::arg("graph"), "the cubic base graph, or None");

    m.def("all_theorem_ids", [] { return all_theorem_ids(); });
    m.def(
        "check_theorem",
        [](const std::string& id, const Graph& g, std::uint64_t budget,
           std::size_t cap, std::uint64_t seed) {
            CheckOptions opt;
            opt.node_budget = budget;
            opt.universal_cap = cap;
            opt.seed = seed;
            auto v = check_theorem(id, g, opt);
            py::dict out;
            out["theorem"] = v.theorem;
            out["outcome"] = to_string(v.outcome);
            out["detail"] = v.detail;
            out["nodes"] = v.nodes;
            return out;
        },
        py::arg("theorem"), py::arg("graph"), py::kw_only(),
        py::arg("budget") = kDefaultNodeBudget, py::arg("cap") = 0,
        py::arg("seed") = 0);

    py::register_exception<Graph6Error>(m, "Graph6Error", PyExc_ValueError);
}
