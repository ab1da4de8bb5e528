#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>
#include <optional>

#include "chorded/canonical.hpp"
#include "chorded/cycles.hpp"
#include "chorded/enumerate.hpp"
#include "chorded/families.hpp"
#include "chorded/graph.hpp"
#include "chorded/graph6.hpp"
#include "chorded/spectral.hpp"
#include "chorded/verify.hpp"

namespace py = pybind11;
using namespace chorded;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null:
            return py::none();
        case nlohmann::json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::json::value_t::number_float:
            return py::float_(j.get<double>());
        case nlohmann::json::value_t::string:
            return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items())
                out[py::str(key)] = json_to_py(value);
            return out;
        }
        default:
            throw std::runtime_error("unsupported JSON value");
    }
}

py::object witness_to_py(const std::optional<CycleWitness>& w) {
    if (!w) return py::none();
    return py::make_tuple(w->cycle, w->chords);
}

}  // namespace

PYBIND11_MODULE(chorded_spectra, m) {
    m.doc() = "spectral thresholds and chorded-cycle detection for fixed-size graphs";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("has_edge", &Graph::has_edge)
        .def("add_edge", &Graph::add_edge)
        .def("remove_edge", &Graph::remove_edge)
        .def("degree", &Graph::degree)
        .def("edges", &Graph::edges)
        .def("is_connected", &Graph::is_connected)
        .def("min_degree", &Graph::min_degree)
        .def("max_degree", &Graph::max_degree)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.order()) +
                   " m=" + std::to_string(g.size()) + ">";
        });

    m.def("build_graph", &build_graph, py::arg("n"), py::arg("edges"));
    m.def("family", [](const std::string& spec) { return family(parse_family_spec(spec)); },
          py::arg("spec"), "construct a named family, e.g. family('book_star:2,3')");

    m.def("graph6_encode", &graph6_encode);
    m.def("graph6_decode", [](const std::string& s) { return graph6_decode(s); });
    m.def("canonical_form", [](const Graph& g) { return py::bytes(canonical_form(g)); });
    m.def("isomorphic", &isomorphic);

    m.def("spectral_radius", [](const Graph& g) { return spectral_radius(g).rho; });
    m.def("perron_vector", &perron_vector);
    m.def("theta", &theta, py::arg("m"));
    m.def("threshold_chorded",
          [](long long m) { return threshold(ThresholdKind::chorded, m); }, py::arg("m"));
    m.def("threshold_k_chorded",
          [](long long m, int k) { return threshold(ThresholdKind::k_chorded, m, k); },
          py::arg("m"), py::arg("k"));

    m.def("has_chorded_cycle",
          [](const Graph& g) { return witness_to_py(has_chorded_cycle(g)); },
          "returns (cycle, chords) or None");
    m.def("find_s_chorded_cycle",
          [](const Graph& g, int s) { return witness_to_py(find_s_chorded_cycle(g, s)); },
          py::arg("g"), py::arg("s"));
    m.def("find_s_chorded_k_cycle",
          [](const Graph& g, int s, int k) {
              return witness_to_py(find_s_chorded_k_cycle(g, s, k));
          },
          py::arg("g"), py::arg("s"), py::arg("k"));

    m.def("count_graphs",
          [](int m) {
              long long count = 0;
              enumerate_graphs(m, nullptr, true, [&](const Graph&) { ++count; });
              return count;
          },
          py::arg("m"), "number of isolate-free graphs with m edges, up to isomorphism");

    m.def("extremal_spectral",
          [](int m, const std::string& cls, int jobs) {
              return json_to_py(extremal_spectral(m, cls, jobs).to_json());
          },
          py::arg("m"), py::arg("cls") = "chorded_cycle_free", py::arg("jobs") = 1);
    m.def("verify_theorem_chorded",
          [](int m, int jobs) { return json_to_py(verify_theorem_chorded(m, jobs).to_json()); },
          py::arg("m"), py::arg("jobs") = 1);
    m.def("check_k_chorded_extremal",
          [](int k, long long m, unsigned seed) {
              return json_to_py(check_k_chorded_extremal(k, m, seed).to_json());
          },
          py::arg("k"), py::arg("m"), py::arg("seed") = 1);
    m.def("verify_lemma",
          [](const std::string& claim, int n, int k) {
              LemmaClaim c;
              if (claim == "eg_path") c = LemmaClaim::eg_path;
              else if (claim == "cycle_bound") c = LemmaClaim::cycle_bound;
              else if (claim == "ore_bound") c = LemmaClaim::ore_bound;
              else if (claim == "prop_doubly_chorded") c = LemmaClaim::prop_doubly_chorded;
              else throw std::invalid_argument("unknown lemma claim: " + claim);
              return json_to_py(verify_lemma(c, n, k).to_json());
          },
          py::arg("claim"), py::arg("n"), py::arg("k") = 0);
}
