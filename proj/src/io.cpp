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

#include "hampen/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <tuple>

namespace hampen {

using nlohmann::json;

namespace {

Rational rational_field(const json& j, const char* name) {
    if (!j.contains(name) || !j[name].is_string())
        throw FormatError(std::string("missing rational field '") + name + "'");
    return parse_rational(j[name].get<std::string>());
}

int int_field(const json& j, const char* name) {
    if (!j.contains(name) || !j[name].is_number_integer())
        throw FormatError(std::string("missing integer field '") + name + "'");
    return j[name].get<int>();
}

struct ModelParts {
    int n;
    Rational offset;
    std::vector<Rational> linear;
    std::vector<std::tuple<int, int, Rational>> quadratic;
};

ModelParts parse_parts(const json& j) {
    ModelParts parts;
    parts.n = int_field(j, "n");
    if (parts.n < 1) throw FormatError("model size must be positive");
    parts.offset = rational_field(j, "offset");

    if (!j.contains("linear") || !j["linear"].is_array() ||
        static_cast<int>(j["linear"].size()) != parts.n)
        throw FormatError("'linear' must be an array of n rationals");
    for (const auto& entry : j["linear"]) {
        if (!entry.is_string())
            throw FormatError("linear coefficients must be rational strings");
        parts.linear.push_back(parse_rational(entry.get<std::string>()));
    }

    if (!j.contains("quadratic") || !j["quadratic"].is_array())
        throw FormatError("'quadratic' must be an array");
    std::set<PairKey> seen;
    for (const auto& entry : j["quadratic"]) {
        if (!entry.is_object())
            throw FormatError("quadratic entries must be objects");
        const int i = int_field(entry, "i");
        const int k = int_field(entry, "j");
        if (i >= k || i < 0 || k >= parts.n)
            throw FormatError("quadratic entry needs 0 <= i < j < n");
        if (!seen.insert({i, k}).second)
            throw FormatError("duplicate quadratic entry");
        parts.quadratic.emplace_back(i, k, rational_field(entry, "value"));
    }
    return parts;
}

}  // namespace

json model_to_json(const Model& model) {
    json out;
    const bool qubo = std::holds_alternative<Qubo>(model);
    out["kind"] = qubo ? "qubo" : "ising";
    out["n"] = model_size(model);

    const Rational& offset = qubo ? std::get<Qubo>(model).offset()
                                  : std::get<IsingModel>(model).offset();
    const std::vector<Rational>& linear =
        qubo ? std::get<Qubo>(model).linear()
             : std::get<IsingModel>(model).biases();
    const QuadraticMap& quadratic = qubo
                                        ? std::get<Qubo>(model).quadratic()
                                        : std::get<IsingModel>(model).couplings();

    out["offset"] = format_rational(offset);
    out["linear"] = json::array();
    for (const auto& b : linear) out["linear"].push_back(format_rational(b));
    out["quadratic"] = json::array();
    for (const auto& [key, c] : quadratic)
        out["quadratic"].push_back({{"i", key.first},
                                    {"j", key.second},
                                    {"value", format_rational(c)}});
    return out;
}

Model model_from_json(const json& j) {
    if (!j.is_object()) throw FormatError("model document must be an object");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw FormatError("missing model 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    ModelParts parts = parse_parts(j);

    if (kind == "qubo") {
        Qubo q(parts.n);
        q.set_offset(std::move(parts.offset));
        for (int i = 0; i < parts.n; ++i)
            q.set_linear(i, std::move(parts.linear[static_cast<std::size_t>(i)]));
        for (auto& [i, k, value] : parts.quadratic)
            q.set_quadratic(i, k, std::move(value));
        return q;
    }
    if (kind == "ising") {
        IsingModel m(parts.n);
        m.set_offset(std::move(parts.offset));
        for (int i = 0; i < parts.n; ++i)
            m.set_bias(i, std::move(parts.linear[static_cast<std::size_t>(i)]));
        for (auto& [i, k, value] : parts.quadratic)
            m.set_coupling(i, k, std::move(value));
        return m;
    }
    throw FormatError("model kind must be 'qubo' or 'ising'");
}

namespace {

bool is_symmetric_shorthand(const std::string& text, int expected_degree) {
    if (text == "S_n") return true;
    if (text.rfind("S_", 0) == 0) {
        try {
            return std::stoi(text.substr(2)) == expected_degree;
        } catch (const std::exception&) {
            return false;
        }
    }
    return false;
}

}  // namespace

PermutationGroup group_from_json(const json& j, int expected_degree) {
    if (j.is_string()) {
        if (is_symmetric_shorthand(j.get<std::string>(), expected_degree))
            return PermutationGroup::full_symmetric(expected_degree);
        throw FormatError("unrecognized group shorthand '" +
                          j.get<std::string>() + "'");
    }
    if (!j.is_object()) throw FormatError("group document must be an object");
    const int n = int_field(j, "n");
    if (n != expected_degree)
        throw FormatError("group degree does not match the model");
    if (!j.contains("generators"))
        throw FormatError("missing 'generators'");
    if (j["generators"].is_string()) {
        if (is_symmetric_shorthand(j["generators"].get<std::string>(), n))
            return PermutationGroup::full_symmetric(n);
        throw FormatError("unrecognized group shorthand");
    }
    if (!j["generators"].is_array())
        throw FormatError("'generators' must be an array of permutations");
    std::vector<std::vector<int>> generators;
    for (const auto& gen : j["generators"]) {
        if (!gen.is_array())
            throw FormatError("each generator must be an integer array");
        std::vector<int> perm;
        for (const auto& v : gen) {
            if (!v.is_number_integer())
                throw FormatError("generator entries must be integers");
            perm.push_back(v.get<int>());
        }
        generators.push_back(std::move(perm));
    }
    try {
        return PermutationGroup(n, std::move(generators));
    } catch (const DomainError& e) {
        throw FormatError(e.what());
    }
}

json bounds_to_json(const CoefficientBounds& bounds) {
    json out;
    out["kind"] = to_string(bounds.kind);
    if (bounds.kind == ModelKind::qubo) {
        out["B"] = format_rational(bounds.B);
        out["C"] = format_rational(bounds.C);
    } else {
        out["h_min"] = format_rational(bounds.h_min);
        out["h_max"] = format_rational(bounds.h_max);
        out["J_max"] = format_rational(bounds.J_max);
    }
    return out;
}

CoefficientBounds bounds_from_json(const json& j) {
    if (!j.is_object()) throw FormatError("bounds document must be an object");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw FormatError("missing bounds 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    try {
        if (kind == "qubo")
            return CoefficientBounds::for_qubo(rational_field(j, "B"),
                                               rational_field(j, "C"));
        if (kind == "ising")
            return CoefficientBounds::for_ising(rational_field(j, "h_min"),
                                                rational_field(j, "h_max"),
                                                rational_field(j, "J_max"));
    } catch (const DomainError& e) {
        throw FormatError(e.what());
    }
    throw FormatError("bounds kind must be 'qubo' or 'ising'");
}

json certificate_to_json(const OptimalityCertificate& cert) {
    json out;
    out["n"] = cert.n;
    out["r"] = cert.r;
    out["kind"] = to_string(cert.bounds.kind);
    out["bounds"] = bounds_to_json(cert.bounds);
    out["lp_gap"] = cert.lp_gap;
    out["closed_form"] = format_rational(cert.closed_form);
    out["abs_diff"] = cert.abs_diff;
    out["verdict"] = cert.verdict ? "pass" : "fail";
    return out;
}

json report_to_json(const PenaltyReport& report) {
    json out;
    out["r"] = report.target_weight;
    out["ground_energy"] = format_rational(report.ground_energy);
    out["ground_set_size"] = report.ground_set_size;
    out["gap"] = format_rational(report.gap);
    out["witness"] = report.witness.str();
    out["exact_penalty"] = report.exact_penalty;
    return out;
}

json scale_to_json(const ScaleResult& scale) {
    json out;
    out["E"] = format_rational(scale.scale);
    out["gap"] = format_rational(scale.gap);
    out["binding"] = to_string(scale.binding);
    return out;
}

Model read_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open model file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw FormatError("invalid JSON in '" + path + "': " + e.what());
    }
    return model_from_json(j);
}

void write_model_file(const std::string& path, const Model& model) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write model file '" + path + "'");
    out << model_to_json(model).dump(2) << "\n";
}

}  // namespace hampen
