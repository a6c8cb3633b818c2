#include <doctest.h>

#include <sstream>

#include "twyang/cli.hpp"
#include "twyang/irreducibility.hpp"
#include "twyang/report_json.hpp"

using namespace twyang;

namespace {

struct Outcome {
    int code = 0;
    std::string out, err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    Outcome o;
    o.code = run(args, out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

}  // namespace

TEST_CASE("check-ybe passes") {
    auto o = call({"check-ybe", "--n", "2", "--samples", "5"});
    CHECK(o.code == kExitPass);
    CHECK(o.out.find("5/5 pass") != std::string::npos);
    CHECK(call({"check-ybe", "--n", "3", "--samples", "2", "--json"}).code == kExitPass);
}

TEST_CASE("irreducible emits a report that round-trips") {
    auto o = call({"irreducible", "--n", "2", "--form", "sp", "--modules", "1:1/3;1:7/5", "--k", "6", "--json"});
    CHECK(o.code == kExitPass);
    auto j = json::parse(o.out);
    CHECK(j["verdict"] == "irreducible");
    auto rep = report_from_json(j);
    CHECK(rep.phi_rank == 16);
    CHECK(report_to_json(rep).dump(2) + "\n" == o.out);
    CHECK(report_from_json(report_to_json(rep)) == rep);
}

TEST_CASE("irreducible exits 1 unless the verdict is irreducible") {
    auto o = call({"irreducible", "--n", "2", "--form", "sp", "--modules", "1:1/2;1:-1/2", "--json"});
    CHECK(o.code == kExitFail);
    CHECK(json::parse(o.out)["verdict"] == "reducible");
}

TEST_CASE("fusion report") {
    auto o = call({"fusion", "--diagram", "2,2", "--n", "2", "--json"});
    CHECK(o.code == kExitPass);
    auto j = json::parse(o.out);
    CHECK(j["dim"] == 1);
    CHECK(j["t_invariant"] == true);
    CHECK(j["sharp_conjugation"] == true);
}

TEST_CASE("relations and duality") {
    CHECK(call({"check-relations", "--n", "2", "--form", "sp", "--modules", "1:1/3;1:7/5"}).code == kExitPass);
    CHECK(call({"duality", "--n", "2", "--diagram", "1,1", "--z", "2/5"}).code == kExitPass);
    CHECK(call({"duality", "--n", "2", "--diagram", "1", "--z", "1/3", "--form", "sp"}).code == kExitPass);
}

TEST_CASE("scan flags walls and summarizes") {
    auto o = call({"scan", "--n", "2", "--form", "sp", "--modules", "1:0", "--points", "1/3;1/2;2/3;1", "--json"});
    CHECK(o.code == kExitPass);
    auto j = json::parse(o.out);
    REQUIRE(j["points"].size() == 4);
    CHECK(j["points"][0]["on_wall"].empty());
    CHECK(j["points"][1]["on_wall"] == json::array({"z1 in 1/2Z"}));
    CHECK(j["points"][2]["on_wall"].empty());
    CHECK(j["points"][3]["on_wall"] == json::array({"z1 in 1/2Z"}));
    CHECK(j["points"][0]["report"]["verdict"] == "irreducible");
    CHECK(j["points"][2]["report"]["verdict"] == "irreducible");
    CHECK(j["summary"]["points"] == 4);
    CHECK(j["summary"]["on_wall"] == 2);
    CHECK(j["summary"]["soundness_violations"] == 0);
}

TEST_CASE("empty scan") {
    auto o = call({"scan", "--n", "2", "--form", "sp", "--modules", "1:0", "--points", "", "--json"});
    CHECK(o.code == kExitPass);
    auto j = json::parse(o.out);
    CHECK(j["points"].empty());
    CHECK(j["summary"]["points"] == 0);
}

TEST_CASE("scan output is deterministic across thread counts and runs") {
    std::vector<std::string> base{"scan", "--n", "2", "--form", "sp", "--modules", "1:0;1:0", "--random", "4", "--seed", "5", "--json"};
    auto a = call(base);
    auto b = call(base);
    auto threaded = base;
    threaded.insert(threaded.end(), {"--jobs", "4"});
    auto c = call(threaded);
    CHECK(a.code == kExitPass);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    auto grid = call({"scan", "--n", "2", "--form", "sp", "--modules", "1:0;1:0", "--grid", "1/2,-1/2", "--json"});
    auto j = json::parse(grid.out);
    CHECK(j["points"].size() == 4);
    CHECK(j["summary"]["reducible"] == 1);
}

TEST_CASE("usage errors exit 2") {
    CHECK(call({}).code == kExitUsage);
    CHECK(call({"bogus"}).code == kExitUsage);
    CHECK(call({"fusion", "--diagram", "2,3", "--n", "2"}).code == kExitUsage);
    CHECK(call({"fusion", "--n", "2"}).code == kExitUsage);
    CHECK(call({"irreducible", "--n", "3", "--form", "sp", "--modules", "1:0"}).code == kExitUsage);
    CHECK(call({"irreducible", "--n", "2", "--modules", "1:abc"}).code == kExitUsage);
    CHECK(call({"scan", "--n", "2", "--modules", "1:0", "--points", "1/3,1/2"}).code == kExitUsage);
    CHECK(call({"check-ybe", "--n", "2", "--form", "gl"}).code == kExitUsage);
}
