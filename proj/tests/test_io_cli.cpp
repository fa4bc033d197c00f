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

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "hampen/builders.hpp"
#include "hampen/io.hpp"
#include "testutil.hpp"

namespace hampen {
namespace {

using nlohmann::json;
using testing::Rng;

TEST_CASE("model JSON round trip") {
    Rng rng(1);
    for (int trial = 0; trial < 60; ++trial) {
        const Model model = trial % 2 == 0
                                ? Model{testing::random_qubo(rng, 5)}
                                : Model{testing::random_ising(rng, 5)};
        CHECK(model_from_json(model_to_json(model)) == model);
    }
}

TEST_CASE("model JSON shape") {
    const json j = model_to_json(Model{build_qubo_hamming(3, 1, 1)});
    CHECK(j["kind"] == "qubo");
    CHECK(j["n"] == 3);
    CHECK(j["offset"] == "1");
    CHECK(j["linear"] == json::array({"-1", "-1", "-1"}));
    CHECK(j["quadratic"].size() == 3);
    CHECK(j["quadratic"][0]["i"] == 0);
    CHECK(j["quadratic"][0]["j"] == 1);
    CHECK(j["quadratic"][0]["value"] == "2");
}

TEST_CASE("model reader rejections") {
    json good = model_to_json(Model{build_qubo_hamming(3, 1, 1)});
    CHECK_NOTHROW(model_from_json(good));

    auto rejects = [&](auto&& mutate) {
        json j = good;
        mutate(j);
        CHECK_THROWS_AS(model_from_json(j), FormatError);
    };
    rejects([](json& j) { j.erase("kind"); });
    rejects([](json& j) { j["kind"] = "spin"; });
    rejects([](json& j) { j["n"] = 0; });
    rejects([](json& j) { j["linear"] = json::array({"1", "2"}); });
    rejects([](json& j) { j["offset"] = "1/0"; });
    rejects([](json& j) { j["quadratic"][0]["j"] = 0; });   // needs i < j
    rejects([](json& j) { j["quadratic"][0]["j"] = 3; });   // out of range
    rejects([](json& j) { j["quadratic"][0]["i"] = -1; });
    rejects([](json& j) { j["quadratic"].push_back(j["quadratic"][0]); });
    rejects([](json& j) { j["quadratic"][0]["value"] = 2; });  // not a string
}

TEST_CASE("group JSON parsing") {
    CHECK(group_from_json(json("S_n"), 4).is_full_symmetric());
    CHECK(group_from_json(json("S_4"), 4).is_full_symmetric());
    CHECK_THROWS_AS(group_from_json(json("S_5"), 4), FormatError);

    const json doc = {{"n", 3}, {"generators", json::array({{1, 0, 2}})}};
    const auto group = group_from_json(doc, 3);
    CHECK(group.degree() == 3);
    CHECK(group.closure().size() == 2);

    CHECK_THROWS_AS(group_from_json(json{{"n", 3}}, 3), FormatError);
    CHECK_THROWS_AS(group_from_json(doc, 4), FormatError);
    const json bad = {{"n", 3}, {"generators", json::array({{0, 0, 1}})}};
    CHECK_THROWS_AS(group_from_json(bad, 3), FormatError);
}

TEST_CASE("bounds JSON round trip") {
    for (const auto& bounds :
         {CoefficientBounds::for_qubo(Rational(3, 2), 2),
          CoefficientBounds::for_ising(1, 2, Rational(5, 7))}) {
        const auto parsed = bounds_from_json(bounds_to_json(bounds));
        CHECK(parsed.kind == bounds.kind);
        CHECK(parsed.B == bounds.B);
        CHECK(parsed.C == bounds.C);
        CHECK(parsed.h_min == bounds.h_min);
        CHECK(parsed.h_max == bounds.h_max);
        CHECK(parsed.J_max == bounds.J_max);
    }
    CHECK_THROWS_AS(bounds_from_json(json{{"kind", "qubo"}, {"B", "1"}}),
                    FormatError);
    CHECK_THROWS_AS(
        bounds_from_json(json{{"kind", "qubo"}, {"B", "0"}, {"C", "1"}}),
        FormatError);  // bounds must be positive
}

TEST_CASE("model files") {
    const auto dir = std::filesystem::temp_directory_path();
    const std::string path = (dir / "hampen_io_test_model.json").string();
    const Model model{build_ising_hamming(4, 2, Rational(1, 3))};
    write_model_file(path, model);
    CHECK(read_model_file(path) == model);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_model_file(path), FormatError);

    std::ofstream(path) << "{not json";
    CHECK_THROWS_AS(read_model_file(path), FormatError);
    std::filesystem::remove(path);
}

#ifdef HAMPEN_CLI_PATH

struct CommandResult {
    int exit_code;
    json output;
    std::string raw;
};

CommandResult run_cli(const std::string& args) {
    const std::string command =
        std::string(HAMPEN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string raw;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe))
        raw.append(buffer, got);
    const int status = pclose(pipe);
    CommandResult result{WEXITSTATUS(status), json(), raw};
    if (!raw.empty())
        result.output = json::parse(raw, nullptr, /*allow_exceptions=*/false);
    return result;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

TEST_CASE("cli build emits the penalty model") {
    const auto result = run_cli("build --kind qubo --n 3 --r 1 --scale 1");
    REQUIRE(result.exit_code == 0);
    CHECK(model_from_json(result.output) == Model{build_qubo_hamming(3, 1, 1)});
}

TEST_CASE("cli build with a bounds file reports the chosen scale") {
    const std::string bounds = temp_path("hampen_cli_bounds.json");
    std::ofstream(bounds) << bounds_to_json(CoefficientBounds::for_qubo(1, 4));
    const auto result =
        run_cli("build --kind qubo --n 3 --r 1 --bounds " + bounds +
                " -o " + temp_path("hampen_cli_built.json"));
    REQUIRE(result.exit_code == 0);
    CHECK(result.output["E"] == "1");
    CHECK(result.output["binding"] == "linear");
    CHECK(read_model_file(temp_path("hampen_cli_built.json")) ==
          Model{build_qubo_hamming(3, 1, 1)});
    std::filesystem::remove(bounds);
    std::filesystem::remove(temp_path("hampen_cli_built.json"));
}

TEST_CASE("cli verify round trip and exit codes") {
    const std::string path = temp_path("hampen_cli_model.json");
    write_model_file(path, Model{build_qubo_hamming(4, 2, 1)});

    SUBCASE("valid penalty exits 0") {
        const auto result = run_cli("verify " + path + " --r 2");
        CHECK(result.exit_code == 0);
        CHECK(result.output["gap"] == "1");
        CHECK(result.output["exact_penalty"] == true);
    }
    SUBCASE("wrong target weight exits 1") {
        const auto result = run_cli("verify " + path + " --r 1");
        CHECK(result.exit_code == 1);
        CHECK(result.output["exact_penalty"] == false);
    }
    SUBCASE("missing file exits 2") {
        CHECK(run_cli("verify /nonexistent.json --r 1").exit_code == 2);
    }
    SUBCASE("malformed model exits 2") {
        const std::string bad = temp_path("hampen_cli_bad.json");
        std::ofstream(bad) << "{\"kind\": \"qubo\"}";
        CHECK(run_cli("verify " + bad + " --r 1").exit_code == 2);
        std::filesystem::remove(bad);
    }
    std::filesystem::remove(path);
}

TEST_CASE("cli convert is an exact involution") {
    const std::string path = temp_path("hampen_cli_convert.json");
    const std::string once = temp_path("hampen_cli_convert1.json");
    const Model model{build_qubo_hamming(3, 1, Rational(7, 3))};
    write_model_file(path, model);
    REQUIRE(run_cli("convert " + path + " -o " + once).exit_code == 0);
    const auto back = run_cli("convert " + once);
    REQUIRE(back.exit_code == 0);
    CHECK(model_from_json(back.output) == model);
    std::filesystem::remove(path);
    std::filesystem::remove(once);
}

TEST_CASE("cli symmetrize with the S_n shorthand") {
    const std::string path = temp_path("hampen_cli_sym.json");
    IsingModel m(3);
    m.set_bias(0, 3);
    m.set_bias(1, 1);
    m.set_bias(2, 2);
    write_model_file(path, Model{m});
    const auto result = run_cli("symmetrize " + path + " --group S_n");
    REQUIRE(result.exit_code == 0);
    CHECK(result.output["linear"] == json::array({"2", "2", "2"}));
    std::filesystem::remove(path);
}

TEST_CASE("cli analyze reports the missing-edge witness") {
    const std::string path = temp_path("hampen_cli_analyze.json");
    Qubo q(3);
    for (int j = 0; j < 3; ++j)
        for (int k = j + 1; k < 3; ++k)
            if (!(j == 0 && k == 1)) q.set_quadratic(j, k, 2);
    write_model_file(path, Model{q});
    const auto result = run_cli("analyze " + path + " --r 1");
    REQUIRE(result.exit_code == 0);
    CHECK(result.output["complete"] == false);
    CHECK(result.output["edge_count"] == 2);
    CHECK(result.output["zero_witness"]["value"] == "0");
    std::filesystem::remove(path);
}

TEST_CASE("cli certify single instance") {
    const std::string bounds = temp_path("hampen_cli_cert_bounds.json");
    std::ofstream(bounds) << bounds_to_json(CoefficientBounds::for_qubo(1, 1));
    const auto result =
        run_cli("certify --kind qubo --n 5 --r 2 --bounds " + bounds);
    REQUIRE(result.exit_code == 0);
    CHECK(result.output["closed_form"] == "1/3");
    CHECK(result.output["verdict"] == "pass");
    std::filesystem::remove(bounds);
}

TEST_CASE("cli spin convention flips bias signs on Ising export") {
    const auto plus = run_cli("build --kind ising --n 4 --r 1 --scale 1");
    const auto minus = run_cli(
        "--spin-convention minus build --kind ising --n 4 --r 1 --scale 1");
    REQUIRE(plus.exit_code == 0);
    REQUIRE(minus.exit_code == 0);
    CHECK(plus.output["linear"] == json::array({"2", "2", "2", "2"}));
    CHECK(minus.output["linear"] == json::array({"-2", "-2", "-2", "-2"}));
    CHECK(plus.output["quadratic"] == minus.output["quadratic"]);
    CHECK(plus.output["offset"] == minus.output["offset"]);
}

#endif  // HAMPEN_CLI_PATH

}  // namespace
}  // namespace hampen
