#include "mexp/cli/app.hpp"
#include "mexp/cli/atlas.hpp"
#include "mexp/cli/format.hpp"
#include "mexp/cli/verify.hpp"

#include <doctest.h>

#include <sstream>

using namespace mexp;
using namespace mexp::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    args.insert(args.begin(), {"--format", "json"});
    const Run r = run_cli(std::move(args));
    REQUIRE(r.code == kOk);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("exp") {
    const json a = run_json({"exp", "-p", "3", "--mu", "41,52,31"});
    CHECK(a["delta"] == 8);
    CHECK(a["exp"] == json::array({58, 66}));
    CHECK(a["center"] == json::array({54, 54, 27}));
    CHECK(a["k"] == 3);
    CHECK(a["p"] == 3);
    CHECK(a["mu"] == json::array({41, 52, 31}));
    const json b = run_json({"exp", "-p", "2", "--mu", "0,0,5"});
    CHECK(b["delta"] == 5);
    CHECK(b["exp"] == json::array({0, 5}));
    CHECK(b["tag"] == "Unbalanced");
    CHECK(b["center"].is_null());
    const json c = run_json({"exp", "-p", "5", "--mu", "3,3,4"});
    CHECK(c["delta"] == 0);
    CHECK(c["exp"] == json::array({5, 5}));
}

TEST_CASE("basis text") {
    const Run r = run_cli({"basis", "-p", "3", "--mu", "3,3,4", "--strategy", "psi"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("(x^4 + x^3*y) dx + (x*y^3 + y^4) dy") != std::string::npos);
    CHECK(r.out.find("(2*x^3*y^3) dx + (x^3*y^3) dy") != std::string::npos);
    const Run t = run_cli({"basis", "-p", "3", "--mu", "41,52,31"});
    CHECK(t.code == kOk);
    CHECK(t.out.find("PeriodShift(3)") != std::string::npos);
}

TEST_CASE("basis JSON round-trips through saito_check") {
    for (const auto& [p, mu] : std::vector<std::pair<std::string, std::string>>{
             {"3", "3,3,4"}, {"2", "3,3,4"}, {"3", "41,52,31"}, {"5", "8,8,4"}, {"2", "0,0,0"}, {"3", "7,2,9"}}) {
        for (const std::string strategy : {"plan", "oracle"}) {
            const json j = run_json({"basis", "-p", p, "--mu", mu, "--strategy", strategy});
            const Prime pr(std::stoul(p));
            const VectorField low = field_from_json(j["low"], pr);
            const VectorField high = field_from_json(j["high"], pr);
            CHECK(saito_check(low, high, parse_multiplicity(mu)));
            CHECK(field_json(low) == j["low"]);
        }
    }
    const json z = run_json({"basis", "-p", "2", "--mu", "0,0,0", "--strategy", "oracle"});
    const Prime p2(2);
    CHECK(field_from_json(z["low"], p2).degree() == 0);
    CHECK(field_from_json(z["high"], p2).degree() == 0);
    CHECK_THROWS_AS(field_from_json(json::parse(R"({"degree":1,"dx":[[1,1,1]],"dy":[]})"), p2), std::invalid_argument);
}

TEST_CASE("oracle subcommand") {
    const json j = run_json({"oracle", "-p", "2", "--mu", "3,3,4"});
    CHECK(j["exp"] == json::array({4, 6}));
}

TEST_CASE("table") {
    const Run r = run_cli({"--format", "csv", "table", "-p", "2", "--mode", "m3", "--level", "1", "--max1", "2", "--max2", "2"});
    CHECK(r.code == kOk);
    CHECK(r.out.rfind("mu1\\mu2,0,1,2\n0,1,0,1\n", 0) == 0);
    const Run again =
        run_cli({"--format", "csv", "table", "-p", "2", "--mode", "m3", "--level", "1", "--max1", "2", "--max2", "2"});
    CHECK(again.out == r.out);
    const Run many = run_cli({"--format", "csv", "--workers", "4", "table", "-p", "3", "--mode", "sum", "--level",
                              "30", "--max1", "30", "--max2", "30"});
    const Run one = run_cli({"--format", "csv", "--workers", "1", "table", "-p", "3", "--mode", "sum", "--level", "30",
                             "--max1", "30", "--max2", "30"});
    CHECK(many.out == one.out);
    // Out of domain cells are blank.
    CHECK(one.out.find(",,") != std::string::npos);
    for (const std::string fmt : {"text", "json", "svg"}) {
        const Run x = run_cli({"--format", fmt, "table", "-p", "3", "--level", "16", "--max1", "20", "--max2", "20"});
        CHECK(x.code == kOk);
        CHECK_FALSE(x.out.empty());
    }
    CHECK(run_cli({"table", "-p", "2", "--level", "1", "--max1", "2000", "--max2", "2000"}).code == kUsage);
}

TEST_CASE("low-degree atlas on Gamma(16)") {
    AtlasSpec spec;
    spec.p = Prime(3);
    spec.level = 16;
    spec.max1 = 24;
    spec.max2 = 24;
    spec.cell = AtlasCell::LowDegree;
    const AtlasGrid g = compute_atlas(spec);
    for (std::uint64_t a = 0; a <= 24; ++a) {
        for (std::uint64_t b = 0; b <= 24; ++b) {
            if (gamma_membership({a, b, 16}, Prime(3))) CHECK(g.cells[a][b] == std::min<std::uint64_t>(16, a + b));
        }
    }
    CHECK(g.centers[9][9] == false);
}

TEST_CASE("centers") {
    const json a = run_json({"centers", "-p", "3", "--k", "3", "--box", "60,60,60"});
    CHECK(std::find(a["centers"].begin(), a["centers"].end(), json::array({54, 54, 27})) != a["centers"].end());
    const json b = run_json({"centers", "-p", "2", "--k", "0", "--box", "3,3,3"});
    CHECK(std::find(b["centers"].begin(), b["centers"].end(), json::array({1, 1, 1})) != b["centers"].end());
    const json c = run_json({"centers", "-p", "2", "--k", "1", "--box", "0,0,0"});
    CHECK(c["centers"].empty());
}

TEST_CASE("gamma") {
    const json j = run_json({"gamma", "-p", "3", "--m", "16"});
    CHECK(j["G"] == json::array({0, 1, 3, 4, 6, 7, 9, 10, 12, 13, 15, 16}));
    CHECK(j["B"].size() == 12);
    CHECK(j["S"].size() == 11);
}

TEST_CASE("verify") {
    CHECK(run_cli({"verify", "-p", "2", "--box", "8,8,8", "--suite", "differential"}).code == kOk);
    CHECK(run_cli({"verify", "-p", "3", "--box", "6,6,6", "--suite", "adjacency"}).code == kOk);
    const Run g = run_cli({"verify", "-p", "3", "--suite", "golden"});
    CHECK(g.code == kOk);
    CHECK(g.out.find("PASS golden") != std::string::npos);
    VerifyOptions o;
    o.box = {8, 8, 8};
    const SuiteResult r = run_suite("differential", o);
    CHECK(r.checked == 729);
    CHECK(r.passed());
    CHECK_THROWS_AS(run_suite("nope", o), std::invalid_argument);
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"exp", "-p", "4", "--mu", "1,1,1"}).code == kUsage);
    CHECK(run_cli({"exp", "-p", "2", "--mu", "1,1"}).code == kUsage);
    CHECK(run_cli({"frobnicate"}).code == kUsage);
    CHECK(run_cli({"basis", "-p", "2", "--mu", "1,1,0", "--strategy", "psi"}).code == kStrategy);
    CHECK(run_cli({"basis", "-p", "5", "--mu", "3,3,4", "--strategy", "psi"}).code == kStrategy);
    CHECK(run_cli({"centers", "-p", "2", "--k", "0", "--box", "1000,1000,1000"}).code == kUsage);
}
