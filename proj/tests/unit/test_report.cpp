#include <doctest.h>

#include "polyhodge/analytic/path.hpp"
#include "polyhodge/errors.hpp"
#include "polyhodge/report/path_json.hpp"
#include "polyhodge/report/report.hpp"

using namespace polyhodge;
using namespace polyhodge::report;

TEST_CASE("run report: field order and null timing") {
    RunReport r;
    r.command = "li";
    r.params["n"] = 2;
    r.result["value"] = encode(analytic::Complex(Real("0.5"), Real(0)));
    r.verdict = "ok";
    const Json j = to_json(r);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"command", "params", "result", "verdict", "elapsed_ms"});
    CHECK(j["elapsed_ms"].is_null());
    CHECK(j["result"]["value"][1] == "0");
    CHECK(j["result"]["value"][0].get<std::string>().rfind("5.0000", 0) == 0);
    r.elapsed_ms = 1.5;
    CHECK(to_json(r)["elapsed_ms"] == 1.5);
}

TEST_CASE("run report: rationals and csv flattening") {
    exact::RationalMatrix m({{1, exact::Rational(-1, 2)}, {0, 1}});
    RunReport r;
    r.command = "monodromy";
    r.result["matrix"] = encode(m);
    r.result["note"] = "a,b";
    r.verdict = "pass";
    CHECK(to_json(r)["result"]["matrix"][0][1] == "-1/2");
    const std::string csv = render_csv(r);
    CHECK(csv.rfind("key,value\n", 0) == 0);
    CHECK(csv.find("command,monodromy\n") != std::string::npos);
    CHECK(csv.find("result.matrix[0][1],-1/2\n") != std::string::npos);
    CHECK(csv.find("result.note,\"a,b\"\n") != std::string::npos);
    CHECK(csv.find("elapsed_ms,\n") != std::string::npos);
    CHECK(render_json(r) == render_json(r));
}

TEST_CASE("path json: parse, round trip and named loops") {
    const Json doc = Json::parse(R"({"base": [0.5, 0], "segments": [{"line": ["0.25", "0"]},
        {"arc": {"center": [0, 0], "sweep": 6.283185307179586}}, {"line": [0.5, 0]}], "closed": true})");
    const auto path = path_from_json(doc);
    CHECK(path.segments.size() == 3);
    CHECK(path.closed);
    CHECK(analytic::winding_numbers(path) == std::pair{1, 0});
    const auto again = path_from_json(path_to_json(path));
    CHECK(analytic::winding_numbers(again) == std::pair{1, 0});
    CHECK(analytic::winding_numbers(load_path("loop1")) == std::pair{0, 1});
}

TEST_CASE("path json: malformed input") {
    CHECK_THROWS_AS(path_from_json(Json::parse(R"({"segments": []})")), DomainError);
    CHECK_THROWS_AS(path_from_json(Json::parse(R"({"base": [0.5], "segments": []})")), DomainError);
    CHECK_THROWS_AS(path_from_json(Json::parse(R"({"base": [0.5, 0], "segments": [{"curve": 1}]})")), DomainError);
    CHECK_THROWS_AS(path_from_json(Json::parse(R"({"base": ["x", 0], "segments": []})")), DomainError);
    CHECK_THROWS_AS(load_path("/nonexistent/path.json"), DomainError);
}
