#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "factorkit/connectivity.hpp"
#include "factorkit/criticality.hpp"
#include "factorkit/enumerate.hpp"
#include "factorkit/graph6.hpp"
#include "factorkit/harness.hpp"
#include "factorkit/matching.hpp"
#include "factorkit/planarity.hpp"

namespace py = pybind11;
using namespace factorkit;

namespace {

std::vector<int> set_to_list(const VertexSet& s) { return s.members(); }

std::vector<std::vector<int>> sets_to_lists(const std::vector<VertexSet>& sets) {
    std::vector<std::vector<int>> out;
    out.reserve(sets.size());
    for (const VertexSet& s : sets) out.push_back(s.members());
    return out;
}

VertexSet list_to_set(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
}

MinorTarget target_of(const std::string& name) {
    if (name == "K5") return MinorTarget::K5;
    if (name == "K33" || name == "K3,3") return MinorTarget::K33;
    throw InputError("minor target must be K5 or K33");
}

py::dict embedding_to_dict(const MinorEmbedding& emb) {
    py::dict d;
    d["target"] = emb.target == MinorTarget::K5 ? "K5" : "K3,3";
    d["branch_sets"] = sets_to_lists(emb.branch_sets);
    return d;
}

}  // namespace

PYBIND11_MODULE(factorkit, m) {
    m.doc() = "matching-theory toolkit for small graphs: matchings, Tutte barriers, "
              "connectivity, Kuratowski minors and factor-criticality";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_RuntimeError);
    py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return Graph::from_edges(n, edges);
             }),
             py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_static("from_graph6", [](const std::string& s) { return decode_graph6(s); })
        .def("to_graph6", [](const Graph& g) { return encode_graph6(g); })
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("degree", [](const Graph& g, int v) { return g.degree(v); })
        .def("has_edge", &Graph::has_edge)
        .def("neighbors", [](const Graph& g, int v) { return g.neighbor_list(v); })
        .def("edges", &Graph::edges)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" +
                   std::to_string(g.edge_count()) + " g6=" + encode_graph6(g) + ">";
        });

    m.def("min_degree", &min_degree);
    m.def("neighborhood",
          [](const Graph& g, const std::vector<int>& x) { return set_to_list(neighborhood(g, list_to_set(x))); });
    m.def("components", [](const Graph& g) {
        ComponentDecomposition d = components_of(g);
        return py::make_tuple(sets_to_lists(d.components), d.odd_count);
    });
    m.def("enumerate_graphs", [](int n) { return enumerate_graphs(n); },
          "one canonical representative per isomorphism class, n <= 8");

    m.def("max_matching", [](const Graph& g) { return max_matching(g).pairs; });
    m.def("has_perfect_matching", &has_perfect_matching);
    m.def("find_barrier", [](const Graph& g) -> py::object {
        auto b = find_barrier(g);
        if (!b) return py::none();
        py::dict d;
        d["set"] = set_to_list(b->set);
        d["odd_components"] = sets_to_lists(b->odd_components);
        d["deficiency"] = b->deficiency;
        return d;
    });
    m.def("tutte_cross_check", &tutte_cross_check);

    m.def("vertex_connectivity", &vertex_connectivity);
    m.def("edge_connectivity", &edge_connectivity);

    m.def("is_planar", [](const Graph& g) {
        PlanarityResult r = is_planar(g);
        return py::make_tuple(r.planar, r.kuratowski ? py::object(embedding_to_dict(*r.kuratowski))
                                                     : py::object(py::none()));
    });
    m.def("find_minor", [](const Graph& g, const std::string& target) -> py::object {
        auto emb = find_minor(g, target_of(target));
        return emb ? py::object(embedding_to_dict(*emb)) : py::object(py::none());
    });

    m.def("is_k_factor_critical", &is_k_factor_critical);
    m.def("is_minimal_k_factor_critical", &is_minimal_k_factor_critical);

    m.def("describe_json", [](const std::string& g6) {
        return render_record_json(describe_graph(g6), true);
    });
    m.def("run_suite_json",
          [](const std::string& suite, py::object n, py::object input, int k, int jobs) {
              SuiteOptions opts;
              opts.k = k;
              opts.jobs = jobs;
              GraphSource source = n.is_none() ? GraphSource{input.cast<std::string>()}
                                               : GraphSource{n.cast<int>()};
              return render_json(run_suite(source, parse_suite(suite), opts), false);
          },
          py::arg("suite"), py::arg("n") = py::none(), py::arg("input") = py::none(),
          py::arg("k") = 3, py::arg("jobs") = 1);
}
