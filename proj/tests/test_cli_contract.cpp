#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

/// Run the CLI through /bin/sh, capturing stdout (stderr discarded).
RunResult run(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + std::string(FLAGCAV_CLI_PATH) + " " + args +
                            " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

json run_json(const std::string& args) {
    const RunResult res = run(args);
    REQUIRE(res.exit_code == 0);
    return json::parse(res.out);
}

}  // namespace

TEST_CASE("ampleness json record", "[cli]") {
    const json j = run_json("ampleness so-odd-odd --p 3 --q 4 --cycle 2,5,6 --format json");
    CHECK(j["case"] == "so-odd-odd");
    CHECK(j["params"]["p"] == 3);
    CHECK(j["params"]["q"] == 4);
    CHECK(j["cycle"] == json::array({2, 5, 6}));
    CHECK(j["primed"] == false);
    CHECK(j["method"] == "both");
    CHECK(j["ind"] == 6);
    CHECK(j["dim_cycle"] == 25);
    CHECK(j["codim"] == 31);
    CHECK(j["ampleness"] == 19);
    CHECK(j["concavity_degree"] == 51);
    CHECK(j["extremal_count"] == 24);
    CHECK(j["witness"].is_array());
    CHECK(j["witness"].size() == 7);
}

TEST_CASE("ampleness methods", "[cli]") {
    const json closed = run_json("ampleness sl-quat --m 3 --method closed --format json");
    CHECK(closed["ind"] == 3);
    CHECK(closed["concavity_degree"] == 13);
    CHECK(closed["extremal_count"].is_null());
    CHECK(closed["witness"].is_null());

    const json engine = run_json("ampleness sl-real --m 8 --primed --method engine --format json");
    CHECK(engine["ind"] == 3);
    CHECK(engine["primed"] == true);
}

TEST_CASE("enumerate rows", "[cli]") {
    const json rows = run_json("enumerate su --p 1 --q 3 --format json");
    REQUIRE(rows.is_array());
    REQUIRE(rows.size() == 4);
    std::vector<long long> inds;
    for (const json& r : rows) inds.push_back(r["ind"].get<long long>());
    CHECK(inds == std::vector<long long>{0, 1, 1, 0});

    const RunResult csv = run("enumerate su --p 1 --q 3 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.find("case,params,cycle,primed,method,ind") == 0);

    const RunResult table = run("enumerate sp-real --r 3");
    CHECK(table.exit_code == 0);
    CHECK(table.out.find("concavity_degree") != std::string::npos);
}

TEST_CASE("period subcommand", "[cli]") {
    const json k3 = run_json("period --weight 2 --hodge 1,20 --dim --format json");
    CHECK(k3["case"] == "so-even-even");
    CHECK(k3["params"]["p"] == 1);
    CHECK(k3["params"]["q"] == 10);
    CHECK(k3["cycle"] == json::array({1}));
    CHECK(k3["ind"] == 0);
    CHECK(k3["dim_GQ"] == 0);
    CHECK(k3["weight"] == 2);
    CHECK(k3["hodge"] == json::array({1, 20, 1}));
    CHECK(k3["marked"] == json::array({1}));

    const json w5 = run_json("period --weight 5 --hodge 1,1,0 --dim --format json");
    CHECK(w5["case"] == "sp-real");
    CHECK(w5["ind"] == 1);
    CHECK(w5["dim_GQ"] == 1);

    const json w4 = run_json("period --weight 4 --hodge 1,2,3 --format json");
    CHECK(w4["ind"] == 2);
    CHECK(!w4.contains("dim_GQ"));
}

TEST_CASE("hook subcommand", "[cli]") {
    const json h = run_json("hook --p 3 --q 4 --cycle 2,5,6 --format json");
    CHECK(h["h_plus"] == 4);
    CHECK(h["h_minus"] == 4);
    CHECK(h["i_plus"] == 6);
    CHECK(h["i_minus"] == 6);
    CHECK(h["plus_present"] == true);

    // Table mode renders the diagram: a colored-box marker must appear for
    // this cycle (it has colored boxes), and the smallest starred entry is 4.
    const RunResult table = run("hook --p 3 --q 4 --cycle 2,5,6");
    CHECK(table.exit_code == 0);
    CHECK(table.out.find("diagram") != std::string::npos);
    CHECK(table.out.find('*') != std::string::npos);
}

TEST_CASE("verify subcommand", "[cli]") {
    const RunResult one = run("verify su --p 2 --q 2");
    CHECK(one.exit_code == 0);
    CHECK(one.out.find("all methods agree") != std::string::npos);
    CHECK(one.out.find("weight walk") != std::string::npos);

    const RunResult grid = run("verify --max-rank 4");
    CHECK(grid.exit_code == 0);
    CHECK(grid.out.find("hook subset") != std::string::npos);
    CHECK(grid.out.find("Hodge structure") != std::string::npos);
    CHECK(grid.out.find("all methods agree") != std::string::npos);
}

TEST_CASE("input errors exit 2", "[cli]") {
    CHECK(run("ampleness su --p 0 --q 3 --cycle 1").exit_code == 2);
    CHECK(run("ampleness su --p 2 --q 2").exit_code == 2);  // missing --cycle
    CHECK(run("ampleness so-odd-odd --p 0 --q 0 --cycle 1").exit_code == 2);
    CHECK(run("ampleness no-such-case --p 1 --q 1 --cycle 1").exit_code == 2);
    CHECK(run("ampleness su --p 1 --q 1 --m 3 --cycle 1").exit_code == 2);
    CHECK(run("period --weight 2 --hodge 0,5").exit_code == 2);
    CHECK(run("period --weight 3 --hodge 1,2,3").exit_code == 2);
    CHECK(run("hook --p 3 --q 4 --cycle 1,2").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("rank guard on sweeps", "[cli]") {
    CHECK(run("enumerate su --p 4 --q 9 --format json").exit_code == 2);
    CHECK(run("enumerate su --p 4 --q 9 --max-rank 13 --format json").exit_code == 0);
    CHECK(run("enumerate su --p 4 --q 9 --format json", "FLAGCAV_MAX_RANK=13 ").exit_code == 0);
    CHECK(run("enumerate su --p 2 --q 2 --format json", "FLAGCAV_MAX_RANK=bogus ").exit_code == 2);
    // Single-cycle paths are not rank-guarded.
    const json big = run_json("period --weight 3 --hodge 1,30 --format json");
    CHECK(big["ind"] == 1);
}

TEST_CASE("help exits zero", "[cli]") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("ampleness --help").exit_code == 0);
}
