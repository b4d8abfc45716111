// End-to-end CLI tests; the binary path is provided via $SEMIEQ_CLI.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

std::string cli() {
    const char* p = std::getenv("SEMIEQ_CLI");
    REQUIRE_MESSAGE(p != nullptr, "SEMIEQ_CLI must point at the binary");
    return p;
}

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = cli() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
    int rc = pclose(pipe);
    r.status = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string tmp_path(const std::string& name) {
    return "/tmp/semieq_cli_test_" + name;
}

}  // namespace

TEST_CASE("build prints the element counts and surface invariants") {
    RunResult r = run("build --type 3.6 --rep planar:7,4,1");
    CHECK(r.status == 0);
    CHECK(r.out == "n=28 E=84 F=56 chi=0 orientable=false\n");

    RunResult m = run("build --type 3.6 --rep mobius:plain,5,2");
    CHECK(m.status == 0);
    CHECK(m.out == "n=10 E=30 F=20 chi=0 orientable=false\n");
}

TEST_CASE("build rejects inadmissible parameters with exit code 2") {
    RunResult r = run("build --type 3.6 --rep planar:2,5,0");
    CHECK(r.status == 2);
    RunResult m = run("build --type 3.4.6.4 --rep mobius:m34,9,3");
    CHECK(m.status == 2);
    RunResult t = run("build --type 3.4.6 --rep planar:7,3,0");
    CHECK(t.status == 2);
}

TEST_CASE("type aliases and bad type names") {
    RunResult r = run("count --type 3-4.6 --n 48");
    CHECK(r.status == 0);
    CHECK(r.out == "0\n");
    RunResult bad = run("count --type 5.5 --n 10");
    CHECK(bad.status == 2);
}

TEST_CASE("count reproduces the worked formula examples") {
    CHECK(run("count --type 3.6 --n 8").out == "0\n");
    CHECK(run("count --type 3.6 --n 12").out == "3\n");
    CHECK(run("count --type 6.3 --n 24").out == "3\n");
    CHECK(run("count --type 3.4.6 --n 120").out == "0\n");
}

TEST_CASE("verify accepts built maps and rejects mangled ones") {
    std::string path = tmp_path("verify.json");
    RunResult b = run("build --type 4.4 --rep planar:6,3,0 --out " + path);
    REQUIRE(b.status == 0);
    RunResult v = run("verify " + path);
    CHECK(v.status == 0);
    CHECK(json::parse(v.out)["ok"] == true);

    // Drop one face: edges become one-sided.
    json doc = json::parse(std::ifstream(path));
    doc["faces"].erase(0);
    std::ofstream(path) << doc.dump();
    RunResult v2 = run("verify " + path);
    CHECK(v2.status == 2);
    CHECK(json::parse(v2.out)["ok"] == false);

    RunResult missing = run("verify /tmp/semieq_no_such_file.json");
    CHECK(missing.status == 1);
}

TEST_CASE("iso: digests and witnessed verdicts") {
    std::string p1 = tmp_path("iso1.json"), p2 = tmp_path("iso2.json");
    REQUIRE(run("build --type 3.6 --rep planar:7,4,1 --out " + p1).status == 0);
    REQUIRE(run("build --type 3.6 --rep planar:7,4,3 --out " + p2).status == 0);
    RunResult d = run("iso --digest " + p1 + " " + p2);
    CHECK(d.status == 0);
    std::istringstream lines(d.out);
    std::string d1, d2;
    std::getline(lines, d1);
    std::getline(lines, d2);
    CHECK(d1 == d2);
    CHECK(d1.size() == 16);

    RunResult v = run("iso " + p1 + " " + p2);
    CHECK(v.status == 0);
    json j = json::parse(v.out);
    CHECK(j["isomorphic"] == true);
    CHECK(j["witness_verified"] == true);
    CHECK(j["witness"].size() == 28);

    std::string p3 = tmp_path("iso3.json");
    REQUIRE(run("build --type 4.4 --rep planar:4,7,0 --out " + p3).status == 0);
    json nj = json::parse(run("iso " + p1 + " " + p3).out);
    CHECK(nj["isomorphic"] == false);
}

TEST_CASE("round trip: build, dual, dual again, compare") {
    std::string p = tmp_path("rt.json"), d1 = tmp_path("rt_d1.json"),
                d2 = tmp_path("rt_d2.json");
    REQUIRE(run("build --type 3.6 --rep planar:4,3,0 --out " + p).status == 0);
    REQUIRE(run("dual " + p + " --out " + d1).status == 0);
    json dd = json::parse(std::ifstream(d1));
    CHECK(dd["type"] == "6.3");
    CHECK(dd["n"] == 24);
    CHECK(run("verify " + d1).status == 0);
    REQUIRE(run("dual " + d1 + " --out " + d2).status == 0);
    json verdict = json::parse(run("iso " + p + " " + d2).out);
    CHECK(verdict["isomorphic"] == true);
}

TEST_CASE("decompose classifies rows and explicit cycles") {
    std::string p = tmp_path("dc.json");
    REQUIRE(run("build --type 3.6 --rep planar:7,4,0 --out " + p).status == 0);
    json j = json::parse(run("decompose " + p + " row:1").out);
    CHECK(j["kind"] == "cylinder");
    CHECK(j["boundary"].size() == 2);
    CHECK(j["faces"]["3"] == 28);

    std::string m = tmp_path("dc_m.json");
    REQUIRE(run("build --type 3.6 --rep mobius:plain,7,3 --out " + m).status ==
            0);
    json mj = json::parse(run("decompose " + m + " row:0").out);
    CHECK(mj["kind"] == "mobius");

    // Explicit comma-separated cycles work too; garbage is a domain error.
    std::string spec;
    for (const json& v : j["boundary"][0])
        spec += (spec.empty() ? "" : ",") + v.dump();
    json ej = json::parse(run("decompose " + p + " " + spec).out);
    CHECK(ej["kind"] == "cylinder");
    CHECK(run("decompose " + p + " 0,2,4").status == 2);
}

TEST_CASE("census: file output and mismatch reporting") {
    std::string out = tmp_path("census.json");
    RunResult r = run("census --type 3.6 --n 9..15 --out " + out);
    CHECK(r.status == 0);
    json j = json::parse(std::ifstream(out));
    // A single-type census is written unwrapped.
    if (!j.is_array()) j = json::array({j});
    bool saw12 = false;
    for (const json& e : j) {
        CHECK(e["format"] == "semieq-census/1");
        CHECK(e["type"] == "3.6");
        for (const json& row : e["entries"]) {
            if (row["n"] == 12) {
                saw12 = true;
                CHECK(row["formula"] == 3);
                CHECK(row["classes"] == 2);
                CHECK(row["verdict"] == "mismatch");
                CHECK(row["witnesses"].size() > 0);
            }
            if (row["n"] == 9) {
                CHECK(row["formula"] == 1);
                CHECK(row["classes"] == 1);
                CHECK(row["verdict"] == "match");
            }
        }
    }
    CHECK(saw12);
}

TEST_CASE("census respects the exploration budget") {
    RunResult r = run("census --type 3.6 --n 9..200 --budget 50");
    CHECK(r.status == 2);
    RunResult ok = run("census --type 3.6 --n 9..20 --budget 50");
    CHECK(ok.status == 0);
}
