#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string cli() {
    const char* p = std::getenv("QPATH_CLI");
    REQUIRE_MESSAGE(p != nullptr, "QPATH_CLI must point at the binary");
    return p;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = cli() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int st = pclose(pipe);
    r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

} // namespace

TEST_CASE("solve emits outcome JSON with stable exit codes") {
    auto ok = run("solve --n 4 --fault 0000,1111 --pairs \"0001-0010;0100-1000\"");
    CHECK(ok.exit_code == 0);
    json j = json::parse(ok.out);
    CHECK(j.at("status") == "solved");
    CHECK(j.at("covering").size() == 2);

    // a catalog counterexample: certified infeasible
    auto bad = run("solve --n 4 --fault \"\" --pairs \"0000-0111;0101-0010;0110-0001\"");
    CHECK(bad.exit_code == 1);
    CHECK(json::parse(bad.out).at("status") == "infeasible");

    // below the proven dimension, outside the oracle range
    auto below = run(
        "solve --n 5 --fault 00001,00010,00100 "
        "--pairs \"00011-00101;00110-01010;01100-01001\"");
    CHECK(below.exit_code == 3);
    CHECK(json::parse(below.out).at("status") == "below_threshold");

    // malformed input
    CHECK(run("solve --n 70 --fault \"\" --pairs \"\"").exit_code == 2);
    CHECK(run("solve --n 3 --fault 00 --pairs 000-001").exit_code == 2);
}

TEST_CASE("solve output round-trips through verify") {
    std::string inst = "--n 4 --fault 0001,0010 --pairs \"0000-0011;0101-1010\"";
    auto solved = run("solve " + inst);
    REQUIRE(solved.exit_code == 0);
    std::string tmp = "cli_cover.json";
    {
        std::ofstream f(tmp);
        f << solved.out;
    }
    auto ver = run("verify " + inst + " --covering " + tmp);
    CHECK(ver.exit_code == 0);
    CHECK(json::parse(ver.out).at("ok") == true);

    // verifying against the wrong instance fails
    auto bad = run("verify --n 4 --fault 0001,0100 --pairs \"0000-0011;0101-1010\" "
                   "--covering " +
                   tmp);
    CHECK(bad.exit_code == 1);
    std::remove(tmp.c_str());
}

TEST_CASE("cycle requests and sweeps") {
    std::string fault = "00001,00010,00100,00011,00101,00110";
    auto cyc = run("solve --cycle --n 5 --fault " + fault);
    REQUIRE(cyc.exit_code == 0);
    std::string tmp = "cli_cycle.json";
    {
        std::ofstream f(tmp);
        f << cyc.out;
    }
    CHECK(run("verify --cycle --n 5 --fault " + fault + " --covering " + tmp)
              .exit_code == 0);
    std::remove(tmp.c_str());

    auto sw = run("sweep --sig 2,0,1,0 --n 3 --mode exhaustive --jobs 2");
    CHECK(sw.exit_code == 0);
    json j = json::parse(sw.out);
    // Q3 has blocked configurations, found by the oracle below threshold
    CHECK(j.at("checked").get<long long>() == 16 * 9);
    CHECK(j.at("infeasible").get<long long>() > 0);
    CHECK(j.at("failures").get<long long>() == 0);

    auto sw2 = run("sweep --sig 8-cycle --n 6 --mode sample --count 200 --seed 4");
    CHECK(sw2.exit_code == 0);
    json j2 = json::parse(sw2.out);
    CHECK(j2.at("solved").get<long long>() == 200);
}

TEST_CASE("sweeps are reproducible under a fixed seed") {
    std::string cmd = "sweep --sig 4,2,0,2 --n 5 --mode sample --count 50 --seed 77";
    auto a = run(cmd), b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("table renders both formats") {
    auto md = run("table");
    CHECK(md.exit_code == 0);
    CHECK(md.out.find("| M,C \\ N,O |") != std::string::npos);
    CHECK(md.out.find(">=5") != std::string::npos);
    CHECK(md.out.find("<=6") != std::string::npos);
    auto csv = run("table --csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.find("44,*,*,*,*,*,*,*,*,*") != std::string::npos);
}

TEST_CASE("counterexample certificates") {
    auto ls = run("counterexample --list");
    CHECK(ls.exit_code == 0);
    CHECK(ls.out.find("q4-three-neutral-pairs") != std::string::npos);

    auto cx = run("counterexample --name q4-three-neutral-pairs");
    CHECK(cx.exit_code == 0);
    CHECK(json::parse(cx.out).at("verdict") == "infeasible");

    auto cj = run("counterexample --conjecture 3 --k 1");
    CHECK(cj.exit_code == 0);
    CHECK(json::parse(cj.out).at("verdict") == "infeasible");
}
