#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "shufflelab/cli.hpp"
#include "shufflelab/parallel.hpp"

using namespace shufflelab;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempCsv {
    std::string name;
    explicit TempCsv(const std::string& text) : name("cli_test_path.csv") {
        std::ofstream f(name);
        f << text;
    }
    ~TempCsv() { std::remove(name.c_str()); }
};

const char* kCornerCsv = "0,0\n1,0\n1,1\n";

}  // namespace

TEST_CASE("verify subcommand exit codes") {
    CHECK(run({"verify", "main", "--d", "2"}).code == 0);
    CHECK(run({"verify", "main", "--d", "2"}).out.find("result: verified") != std::string::npos);

    CHECK(run({"verify", "main"}).code == 2);                      // missing --d
    CHECK(run({"verify", "main", "--d", "5"}).code == 2);          // needs --slow
    CHECK(run({"verify", "main", "--d", "9"}).code == 2);          // out of range
    CHECK(run({"verify", "debruijn-even", "--d", "3"}).code == 2); // wrong parity
    CHECK(run({"verify", "debruijn-odd", "--d", "2"}).code == 2);
    CHECK(run({"verify", "no-such-identity", "--d", "2"}).code == 2);
    CHECK(run({"verify", "no-such-identity", "--d", "2"}).err.find("error:") == 0);
}

TEST_CASE("all identities verify at small sizes") {
    CHECK(run({"verify", "andreief", "--d", "2"}).code == 0);
    CHECK(run({"verify", "halfshuffle-expansion", "--d", "2"}).code == 0);
    CHECK(run({"verify", "h-action", "--d", "2"}).code == 0);
    CHECK(run({"verify", "debruijn-even", "--d", "2"}).code == 0);
    CHECK(run({"verify", "debruijn-odd", "--d", "3"}).code == 0);
    CHECK(run({"verify", "det-pf", "--seed", "5"}).code == 0);
    CHECK(run({"verify", "det-skew-rank1", "--seed", "5"}).code == 0);
    CHECK(run({"verify", "sym-w", "--d", "3"}).code == 0);
    CHECK(run({"verify", "cgm", "--d", "2", "--paths", "5"}).code == 0);
}

TEST_CASE("verification failure is distinguishable from usage errors") {
    // --tol 0 demands bit-exact floating-point agreement (no absolute floor),
    // which rounding genuinely denies on almost every path.
    CliResult r = run({"verify", "cgm", "--d", "4", "--paths", "200", "--seed", "1",
                       "--tol", "0"});
    CHECK(r.code == 1);
    CHECK(r.out.find("result: FAILED") != std::string::npos);
}

TEST_CASE("verify reports are valid JSON with a stable schema") {
    CliResult r = run({"verify", "main", "--d", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "verify");
    CHECK(j["identity"] == "main");
    CHECK(j["status"] == "verified");
    CHECK(j["params"]["d"] == 1);
    CHECK(j["counterexample"].is_null());
    REQUIRE(j["checks"].is_array());
    REQUIRE(j["checks"].size() >= 2);
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c["pass"] == true);
    }
}

TEST_CASE("expand prints shuffle products") {
    CliResult r = run({"expand", "shuffle", "12", "34"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1234 + 1324 + 1342 + 3124 + 3142 + 3412") != std::string::npos);

    CliResult h = run({"expand", "halfshuffle", "12", "34"});
    CHECK(h.code == 0);
    CHECK(h.out.find("1234 + 1324 + 3124") != std::string::npos);

    CHECK(run({"expand", "shuffle", "12"}).code == 2);        // needs two operands
    CHECK(run({"expand", "shuffle", "12", "3x"}).code == 2);  // bad word
}

TEST_CASE("expand prints invariants and determinants") {
    CliResult inv1 = run({"expand", "inv", "--tableau", "1;2"});
    CHECK(inv1.code == 0);
    CHECK(inv1.out.find("12 - 21") != std::string::npos);

    CliResult inv2 = run({"expand", "inv", "--tableau", "1,2;3,4"});
    CHECK(inv2.out.find("1122 - 1221 - 2112 + 2211") != std::string::npos);
    CHECK(run({"expand", "inv"}).code == 2);  // --tableau required

    CliResult dw = run({"expand", "detW", "--d", "1"});
    CHECK(dw.code == 0);
    CHECK(dw.out.find("11") != std::string::npos);

    CliResult pf = run({"expand", "pf-anti-W", "--d", "2"});
    CHECK(pf.code == 0);
    CHECK(pf.out.find("1/2*12 - 1/2*21") != std::string::npos);
    CHECK(run({"expand", "pf-anti-W", "--d", "3"}).code == 2);  // must be even

    CliResult z = run({"expand", "Z", "--d", "1"});
    CHECK(z.code == 0);
    CHECK(z.out.find("Z[1][2] = 1") != std::string::npos);
    CHECK(z.out.find("Z[2][1] = -1") != std::string::npos);

    CHECK(run({"expand", "detW", "--d", "1", "12"}).code == 2);  // stray operand
}

TEST_CASE("expand emits machine-readable terms") {
    CliResult r = run({"expand", "shuffle", "1", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "expand");
    CHECK(j["alphabet"] == 2);
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["word"] == nlohmann::json::array({1, 2}));
    // Coefficients ride as decimal strings so arbitrary precision survives.
    CHECK(j["terms"][0]["num"] == "1");
    CHECK(j["terms"][0]["den"] == "1");
}

TEST_CASE("signature subcommand reads CSV paths") {
    TempCsv csv(kCornerCsv);
    CliResult r = run({"signature", csv.name, "--level", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["dim"] == 2);
    CHECK(j["level"] == 2);
    double c12 = -1.0;
    for (const auto& e : j["coefficients"]) {
        if (e["word"] == nlohmann::json::array({1, 2})) c12 = e["value"].get<double>();
    }
    CHECK(c12 == 1.0);

    CliResult text = run({"signature", csv.name, "--level", "1"});
    CHECK(text.code == 0);
    CHECK(text.out.find("e 1") != std::string::npos);

    CHECK(run({"signature", "no_such_file.csv", "--level", "2"}).code == 2);
    CHECK(run({"signature", csv.name, "--level", "-1"}).code == 2);
}

TEST_CASE("pair subcommand pairs expressions with path signatures") {
    TempCsv csv(kCornerCsv);
    CliResult r = run({"pair", "inv(t1,2)", csv.name});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");

    CliResult j = run({"pair", "12 - 21", csv.name, "--format", "json"});
    REQUIRE(j.code == 0);
    CHECK(nlohmann::json::parse(j.out)["value"] == 1.0);

    CliResult t2 = run({"pair", "inv(t2,2)", csv.name});
    CHECK(t2.code == 0);

    CHECK(run({"pair", "inv(t1,0)", csv.name}).code == 2);
    CHECK(run({"pair", "12 ++ 21", csv.name}).code == 2);
}

TEST_CASE("help and global usage behaviour") {
    CliResult top = run({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("shuffle-lab") != std::string::npos);

    CliResult sub = run({"verify", "--help"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("identity") != std::string::npos);

    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "main", "--d", "2", "--bogus"}).code == 2);
}

TEST_CASE("reports are byte-identical across thread counts") {
    std::vector<std::string> args = {"verify", "cgm", "--d", "3", "--paths", "40",
                                     "--seed", "7", "--format", "json"};
    CliResult wide = run(args);
    par::set_thread_cap(1);
    CliResult narrow = run(args);
    par::set_thread_cap(0);
    CHECK(wide.code == 0);
    CHECK(wide.out == narrow.out);

    std::vector<std::string> main2 = {"verify", "main", "--d", "2", "--format", "json"};
    CliResult a = run(main2);
    CliResult b = run(main2);
    CHECK(a.out == b.out);
}
