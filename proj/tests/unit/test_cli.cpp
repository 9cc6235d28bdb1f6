#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string command = std::string(POLYHODGE_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("cli: li value") {
    const auto r = run("li --n 2 --z 0.5 --tol 1e-12");
    REQUIRE(r.code == 0);
    const auto j = parse(r);
    CHECK(j["command"] == "li");
    CHECK(j["result"]["value"][0].get<std::string>().rfind("5.822405264", 0) == 0);
    CHECK(j["elapsed_ms"].is_null());
}

TEST_CASE("cli: monodromy around 1") {
    const auto r = run("monodromy --n 1 --loop loop1");
    REQUIRE(r.code == 0);
    const auto j = parse(r);
    CHECK(j["result"]["matrix"] == nlohmann::json::parse(R"([["1","-1"],["0","1"]])"));
    CHECK(j["verdict"] == "pass");
}

TEST_CASE("cli: postnikov table") {
    const auto r = run("postnikov --n 4");
    REQUIRE(r.code == 0);
    const auto j = parse(r);
    CHECK(j["verdict"] == "pass");
    CHECK(j["result"]["rows"][2]["graded_dimension"] == "11");
    CHECK(j["result"]["rows"][2]["stirling"] == "11");
}

TEST_CASE("cli: path file") {
    const std::string file = "cli_test_path.json";
    std::ofstream(file) << R"({"base": ["0.5", "0"], "segments": [{"arc": {"center": [1, 0], "sweep": "6.283185307179586476925286766559"}}], "closed": true})";
    const auto r = run("monodromy --n 2 --loop " + file);
    REQUIRE(r.code == 0);
    CHECK(parse(r)["result"]["matrix"][0][1] == "-1");
    std::remove(file.c_str());
}

TEST_CASE("cli: csv format") {
    const auto r = run("arnold --n 4 --format csv");
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("key,value\n", 0) == 0);
    CHECK(r.out.find("result.dimension,6\n") != std::string::npos);
}

TEST_CASE("cli: exit codes") {
    CHECK(run("").code == 2);
    CHECK(run("nonsense").code == 2);
    CHECK(run("li --n 2").code == 2);
    CHECK(run("li --n 2 --z 0.5 --tol -1").code == 2);
    CHECK(run("li --n 2 --z 0.5 --tol nan").code == 2);
    CHECK(run("li --n 2 --z 0.5 --precision 16").code == 2);
    CHECK(run("li --n 2 --z 0.5 --format xml").code == 2);
    CHECK(run("li --n 2 --z 1,2,3").code == 2);
    CHECK(run("monodromy --n 1 --loop /nonexistent.json").code == 2);
    CHECK(run("paving --n 2 --samples 0").code == 2);
    CHECK(run("li --n 2 --z 0.9").code == 3);
    CHECK(run("lambda --n 2 --z 1.5").code == 3);
    CHECK(run("arnold --n 9").code == 3);
    CHECK(run("poset-homology --n 2").code == 3);
    CHECK(run("omega --n 2 --k 3").code == 3);
    CHECK(run("monodromy --n 3 --loop loop0 --max-den 1").code == 4);
}

TEST_CASE("cli: timing is opt-in") {
    const auto r = run("gauge-check --timing");
    REQUIRE(r.code == 0);
    CHECK(parse(r)["elapsed_ms"].is_number());
}

TEST_CASE("cli: repeated runs are byte-identical") {
    const auto a = run("paving --n 3 --samples 2000 --seed 9");
    const auto b = run("paving --n 3 --samples 2000 --seed 9");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
}
