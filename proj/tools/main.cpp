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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <thread>

#include "hampen/analysis.hpp"
#include "hampen/builders.hpp"
#include "hampen/certify.hpp"
#include "hampen/io.hpp"
#include "hampen/profile.hpp"

namespace {

using hampen::Model;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailedCheck = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;

struct Options {
    std::string kind = "qubo";
    int n = 0;
    int r = 0;
    std::string scale;
    std::string bounds_path;
    std::string output;
    std::string input;
    std::string group;
    std::string spin_convention = "plus";
    bool grid = false;
    bool two_sided = false;
    int jobs = 0;
};

hampen::CoefficientBounds load_bounds(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw hampen::FormatError("cannot open bounds file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw hampen::FormatError("invalid JSON in '" + path + "': " + e.what());
    }
    return hampen::bounds_from_json(j);
}

// The convention flag flips only the stored sign of the biases on import
// and export; internally bit 1 always maps to spin +1.
Model apply_convention(Model model, const std::string& convention) {
    if (convention == "plus") return model;
    if (auto* ising = std::get_if<hampen::IsingModel>(&model)) {
        hampen::IsingModel flipped(ising->size());
        flipped.set_offset(ising->offset());
        for (int j = 0; j < ising->size(); ++j)
            flipped.set_bias(j, -ising->biases()[static_cast<std::size_t>(j)]);
        for (const auto& [key, c] : ising->couplings())
            flipped.set_coupling(key.first, key.second, c);
        return flipped;
    }
    return model;
}

Model read_model(const Options& opt) {
    return apply_convention(hampen::read_model_file(opt.input),
                            opt.spin_convention);
}

void emit_model(const Options& opt, const Model& model) {
    const Model out = apply_convention(model, opt.spin_convention);
    if (opt.output.empty())
        std::cout << hampen::model_to_json(out).dump(2) << "\n";
    else
        hampen::write_model_file(opt.output, out);
}

int run_build(const Options& opt) {
    if (opt.scale.empty() == opt.bounds_path.empty())
        throw hampen::FormatError("build needs exactly one of --scale/--bounds");
    hampen::Rational scale;
    if (!opt.scale.empty()) {
        scale = hampen::parse_rational(opt.scale);
    } else {
        const auto bounds = load_bounds(opt.bounds_path);
        const auto result =
            opt.kind == "qubo"
                ? hampen::optimal_qubo_scale(opt.n, opt.r, bounds)
                : hampen::optimal_ising_scale(opt.n, opt.r, bounds);
        scale = result.scale;
        std::cout << hampen::scale_to_json(result).dump(2) << "\n";
    }
    Model model = opt.kind == "qubo"
                      ? Model{hampen::build_qubo_hamming(opt.n, opt.r, scale)}
                      : Model{hampen::build_ising_hamming(opt.n, opt.r, scale)};
    emit_model(opt, model);
    return kExitOk;
}

int run_verify(const Options& opt) {
    const Model model = read_model(opt);
    const auto report = hampen::min_penalty(model, opt.r, opt.jobs);
    std::cout << hampen::report_to_json(report).dump(2) << "\n";
    return report.exact_penalty ? kExitOk : kExitFailedCheck;
}

int run_certify(const Options& opt) {
    const auto bounds = load_bounds(opt.bounds_path);
    std::vector<std::pair<int, int>> instances;
    if (opt.grid) {
        for (int n = 3; n <= 7; ++n)
            for (int r = 1; r <= n - 1; ++r) instances.emplace_back(n, r);
    } else {
        instances.emplace_back(opt.n, opt.r);
    }

    std::vector<hampen::OptimalityCertificate> certs(instances.size());
    std::vector<std::string> failures(instances.size());
    int jobs = opt.jobs > 0
                   ? opt.jobs
                   : static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    if (jobs > static_cast<int>(instances.size()))
        jobs = static_cast<int>(instances.size());

    std::vector<std::thread> pool;
    std::atomic<std::size_t> cursor{0};
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= instances.size()) return;
                try {
                    certs[i] = hampen::certify_optimality(
                        instances[i].first, instances[i].second, bounds,
                        opt.two_sided);
                } catch (const std::exception& e) {
                    failures[i] = e.what();
                }
            }
        });
    for (auto& t : pool) t.join();

    for (const auto& message : failures)
        if (!message.empty()) throw hampen::SolverError(message);

    json out = json::array();
    bool all_pass = true;
    for (const auto& cert : certs) {
        out.push_back(hampen::certificate_to_json(cert));
        all_pass = all_pass && cert.verdict && cert.builder_feasible &&
                   cert.builder_attains;
    }
    std::cout << (opt.grid ? out : out.front()).dump(2) << "\n";
    return all_pass ? kExitOk : kExitFailedCheck;
}

int run_convert(const Options& opt) {
    const Model model = read_model(opt);
    Model converted =
        std::holds_alternative<hampen::Qubo>(model)
            ? Model{hampen::qubo_to_ising(std::get<hampen::Qubo>(model))}
            : Model{hampen::ising_to_qubo(std::get<hampen::IsingModel>(model))};
    emit_model(opt, converted);
    return kExitOk;
}

int run_symmetrize(const Options& opt) {
    const Model model = read_model(opt);
    const int n = hampen::model_size(model);
    json group_doc;
    if (opt.group.rfind("S_", 0) == 0) {
        group_doc = opt.group;
    } else {
        std::ifstream in(opt.group);
        if (!in)
            throw hampen::FormatError("cannot open group file '" + opt.group +
                                      "'");
        try {
            in >> group_doc;
        } catch (const json::exception& e) {
            throw hampen::FormatError(std::string("invalid group JSON: ") +
                                      e.what());
        }
    }
    const auto group = hampen::group_from_json(group_doc, n);
    emit_model(opt, hampen::symmetrize(model, group));
    return kExitOk;
}

int run_analyze(const Options& opt) {
    const Model model = read_model(opt);
    const auto graph = hampen::interaction_graph(model);
    json out;
    out["n"] = graph.n;
    out["edge_count"] = graph.edges.size();
    out["complete"] = graph.complete();
    out["edges"] = json::array();
    for (const auto& [i, j] : graph.edges) out["edges"].push_back({i, j});

    if (!graph.complete() && opt.r >= 1 && opt.r <= graph.n - 1) {
        const hampen::Qubo q = hampen::as_qubo(model);
        const auto scan = hampen::scan_weight_class(Model{q}, opt.r);
        if (scan.minimum == 0 && scan.maximum == 0) {
            const auto witness = hampen::sparse_zero_witness(q, opt.r);
            out["zero_witness"] = {
                {"bitstring", witness.witness.str()},
                {"value", hampen::format_rational(witness.value)}};
        }
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal Hamming-weight penalty models: construction, exact "
                 "verification and LP certification"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--jobs", opt.jobs, "Worker threads (0 = auto)");
    app.add_option("--spin-convention", opt.spin_convention,
                   "Spin sign convention for Ising import/export")
        ->check(CLI::IsMember({"plus", "minus"}));

    auto* build = app.add_subcommand("build", "Construct a penalty model");
    build->add_option("--kind", opt.kind)->check(CLI::IsMember({"qubo", "ising"}));
    build->add_option("--n", opt.n)->required();
    build->add_option("--r", opt.r)->required();
    build->add_option("--scale", opt.scale, "Energy scale E as p/q");
    build->add_option("--bounds", opt.bounds_path, "Bounds file (optimal scale)");
    build->add_option("-o,--output", opt.output);

    auto* verify = app.add_subcommand("verify", "Exhaustive penalty report");
    verify->add_option("model", opt.input)->required();
    verify->add_option("--r", opt.r)->required();

    auto* certify = app.add_subcommand("certify", "LP optimality certificates");
    certify->add_option("--kind", opt.kind)
        ->check(CLI::IsMember({"qubo", "ising"}));
    certify->add_option("--n", opt.n);
    certify->add_option("--r", opt.r);
    certify->add_option("--bounds", opt.bounds_path)->required();
    certify->add_flag("--grid", opt.grid, "Certify n in 3..7, r in 1..n-1");
    certify->add_flag("--two-sided", opt.two_sided,
                      "Impose both bound sides on QUBO coefficients");

    auto* convert = app.add_subcommand("convert", "QUBO <-> Ising, bit exact");
    convert->add_option("model", opt.input)->required();
    convert->add_option("-o,--output", opt.output);

    auto* symmetrize = app.add_subcommand("symmetrize", "Group-average a model");
    symmetrize->add_option("model", opt.input)->required();
    symmetrize->add_option("--group", opt.group, "Group file or S_n")->required();
    symmetrize->add_option("-o,--output", opt.output);

    auto* analyze = app.add_subcommand("analyze", "Interaction graph summary");
    analyze->add_option("model", opt.input)->required();
    analyze->add_option("--r", opt.r)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (build->parsed()) return run_build(opt);
        if (verify->parsed()) return run_verify(opt);
        if (certify->parsed()) {
            if (!opt.grid && (opt.n == 0))
                throw hampen::FormatError("certify needs --n/--r or --grid");
            return run_certify(opt);
        }
        if (convert->parsed()) return run_convert(opt);
        if (symmetrize->parsed()) return run_symmetrize(opt);
        if (analyze->parsed()) return run_analyze(opt);
    } catch (const hampen::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
