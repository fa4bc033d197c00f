// Copyright 2026 The hampen developers
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "hampen/analysis.hpp"
#include "hampen/builders.hpp"
#include "hampen/certify.hpp"
#include "hampen/io.hpp"
#include "hampen/profile.hpp"

namespace py = pybind11;
using namespace hampen;

namespace {

// Rationals cross the boundary as lowest-terms "p/q" strings so python can
// hand them to fractions.Fraction without loss.
Rational rat(const std::string& text) { return parse_rational(text); }

Bitstring bits(const std::string& text) { return Bitstring::from_string(text); }

py::dict report_dict(const PenaltyReport& report) {
    py::dict out;
    out["r"] = report.target_weight;
    out["ground_energy"] = format_rational(report.ground_energy);
    out["ground_set_size"] = report.ground_set_size;
    out["gap"] = format_rational(report.gap);
    out["witness"] = report.witness.str();
    out["exact_penalty"] = report.exact_penalty;
    return out;
}

py::dict scale_dict(const ScaleResult& scale) {
    py::dict out;
    out["E"] = format_rational(scale.scale);
    out["gap"] = format_rational(scale.gap);
    out["binding"] = std::string(to_string(scale.binding));
    return out;
}

py::dict certificate_dict(const OptimalityCertificate& cert) {
    py::dict out;
    out["n"] = cert.n;
    out["r"] = cert.r;
    out["kind"] = std::string(to_string(cert.bounds.kind));
    out["lp_gap"] = cert.lp_gap;
    out["closed_form"] = format_rational(cert.closed_form);
    out["abs_diff"] = cert.abs_diff;
    out["verdict"] = cert.verdict ? "pass" : "fail";
    out["builder_feasible"] = cert.builder_feasible;
    out["builder_attains"] = cert.builder_attains;
    return out;
}

PermutationGroup make_group(int n, const py::object& spec) {
    if (py::isinstance<py::str>(spec)) {
        return group_from_json(nlohmann::json(spec.cast<std::string>()), n);
    }
    return PermutationGroup(n, spec.cast<std::vector<std::vector<int>>>());
}

template <class M>
std::string to_json_string(const M& model) {
    return model_to_json(Model{model}).dump();
}

Model parse_model(const std::string& text) {
    return model_from_json(nlohmann::json::parse(text));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact penalty models for fixed Hamming weight";

    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
    py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

    py::class_<Qubo>(m, "Qubo")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &Qubo::size)
        .def("set_offset", [](Qubo& q, const std::string& v) { q.set_offset(rat(v)); })
        .def("set_linear",
             [](Qubo& q, int j, const std::string& v) { q.set_linear(j, rat(v)); })
        .def("set_quadratic", [](Qubo& q, int j, int k, const std::string& v) {
            q.set_quadratic(j, k, rat(v));
        })
        .def("offset", [](const Qubo& q) { return format_rational(q.offset()); })
        .def("linear", [](const Qubo& q, int j) {
            return format_rational(q.linear().at(static_cast<std::size_t>(j)));
        })
        .def("quadratic", [](const Qubo& q, int j, int k) {
            return format_rational(q.quadratic_at(j, k));
        })
        .def("value", [](const Qubo& q, const std::string& x) {
            return format_rational(q.value(bits(x)));
        })
        .def("to_json", &to_json_string<Qubo>)
        .def("__eq__", [](const Qubo& a, const Qubo& b) { return a == b; });

    py::class_<IsingModel>(m, "IsingModel")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &IsingModel::size)
        .def("set_offset",
             [](IsingModel& q, const std::string& v) { q.set_offset(rat(v)); })
        .def("set_bias",
             [](IsingModel& q, int j, const std::string& v) { q.set_bias(j, rat(v)); })
        .def("set_coupling", [](IsingModel& q, int j, int k, const std::string& v) {
            q.set_coupling(j, k, rat(v));
        })
        .def("offset",
             [](const IsingModel& q) { return format_rational(q.offset()); })
        .def("bias", [](const IsingModel& q, int j) {
            return format_rational(q.biases().at(static_cast<std::size_t>(j)));
        })
        .def("coupling", [](const IsingModel& q, int j, int k) {
            return format_rational(q.coupling_at(j, k));
        })
        .def("value", [](const IsingModel& q, const std::string& x) {
            return format_rational(q.value(bits(x)));
        })
        .def("to_json", &to_json_string<IsingModel>)
        .def("__eq__",
             [](const IsingModel& a, const IsingModel& b) { return a == b; });

    m.def("model_from_json", [](const std::string& text) -> py::object {
        Model model = parse_model(text);
        if (auto* q = std::get_if<Qubo>(&model)) return py::cast(*q);
        return py::cast(std::get<IsingModel>(model));
    });

    m.def("build_qubo_hamming", [](int n, int r, const std::string& scale) {
        return build_qubo_hamming(n, r, rat(scale));
    });
    m.def("build_ising_hamming", [](int n, int r, const std::string& scale) {
        return build_ising_hamming(n, r, rat(scale));
    });
    m.def("qubo_to_ising", &qubo_to_ising);
    m.def("ising_to_qubo", &ising_to_qubo);

    m.def("optimal_qubo_scale",
          [](int n, int r, const std::string& B, const std::string& C) {
              return scale_dict(
                  optimal_qubo_scale(n, r, CoefficientBounds::for_qubo(rat(B), rat(C))));
          });
    m.def("optimal_ising_scale",
          [](int n, int r, const std::string& h_min, const std::string& h_max,
             const std::string& J_max) {
              return scale_dict(optimal_ising_scale(
                  n, r,
                  CoefficientBounds::for_ising(rat(h_min), rat(h_max), rat(J_max))));
          });

    m.def("min_penalty",
          [](const py::object& model, int r, int workers) {
              if (py::isinstance<Qubo>(model))
                  return report_dict(min_penalty(Model{model.cast<Qubo>()}, r, workers));
              return report_dict(
                  min_penalty(Model{model.cast<IsingModel>()}, r, workers));
          },
          py::arg("model"), py::arg("r"), py::arg("workers") = 0);

    m.def("spectral_gap", [](const py::object& model) {
        if (py::isinstance<Qubo>(model))
            return format_rational(spectral_gap(Model{model.cast<Qubo>()}));
        return format_rational(spectral_gap(Model{model.cast<IsingModel>()}));
    });

    m.def("weight_profile", [](const py::object& model) {
        const WeightProfile profile =
            py::isinstance<Qubo>(model)
                ? weight_profile(Model{model.cast<Qubo>()})
                : weight_profile(Model{model.cast<IsingModel>()});
        py::dict out;
        py::list minima, witnesses, counts;
        for (int w = 0; w <= profile.n; ++w) {
            minima.append(format_rational(profile.minima[static_cast<std::size_t>(w)]));
            witnesses.append(profile.witnesses[static_cast<std::size_t>(w)].str());
            counts.append(profile.counts[static_cast<std::size_t>(w)]);
        }
        out["minima"] = minima;
        out["witnesses"] = witnesses;
        out["counts"] = counts;
        return out;
    });

    m.def("certify_qubo",
          [](int n, int r, const std::string& B, const std::string& C,
             bool two_sided) {
              return certificate_dict(certify_optimality(
                  n, r, CoefficientBounds::for_qubo(rat(B), rat(C)), two_sided));
          },
          py::arg("n"), py::arg("r"), py::arg("B"), py::arg("C"),
          py::arg("two_sided") = false);
    m.def("certify_ising",
          [](int n, int r, const std::string& h_min, const std::string& h_max,
             const std::string& J_max) {
              return certificate_dict(certify_optimality(
                  n, r,
                  CoefficientBounds::for_ising(rat(h_min), rat(h_max), rat(J_max))));
          });

    m.def("interaction_edges", [](const py::object& model) {
        const InteractionGraph graph =
            py::isinstance<Qubo>(model)
                ? interaction_graph(Model{model.cast<Qubo>()})
                : interaction_graph(Model{model.cast<IsingModel>()});
        std::vector<std::pair<int, int>> edges(graph.edges.begin(),
                                               graph.edges.end());
        return edges;
    });

    m.def("sparse_zero_witness", [](const Qubo& model, int r) {
        const ZeroWitness witness = sparse_zero_witness(model, r);
        py::dict out;
        out["witness"] = witness.witness.str();
        out["value"] = format_rational(witness.value);
        return out;
    });

    m.def("symmetrize", [](const py::object& model, const py::object& group)
              -> py::object {
        if (py::isinstance<Qubo>(model)) {
            const Qubo q = model.cast<Qubo>();
            return py::cast(symmetrize(q, make_group(q.size(), group)));
        }
        const IsingModel q = model.cast<IsingModel>();
        return py::cast(symmetrize(q, make_group(q.size(), group)));
    });

    m.def("check_ground_invariance",
          [](const py::object& model, const py::object& group) {
              if (py::isinstance<Qubo>(model)) {
                  const Qubo q = model.cast<Qubo>();
                  return check_ground_invariance(Model{q},
                                                 make_group(q.size(), group));
              }
              const IsingModel q = model.cast<IsingModel>();
              return check_ground_invariance(Model{q}, make_group(q.size(), group));
          });
}
