// End-to-end checks of the installed CLI binary (path in $LIECON_CLI).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    const char* cli = std::getenv("LIECON_CLI");
    REQUIRE(cli != nullptr);
    std::string cmd = std::string(cli) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("check") {
    auto ok = run("check a:5");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("\"is_lie_algebra\": true") != std::string::npos);

    std::ofstream bad("/tmp/liecon_bad.json");
    bad << R"({"name":"bad","dim":3,"brackets":[{"i":1,"j":2,"out":{"1":"1"}},{"i":1,"j":3,"out":{"3":"1"}}]})";
    bad.close();
    auto defect = run("check /tmp/liecon_bad.json");
    CHECK(defect.exit_code == 1);
    CHECK(defect.output.find("defect") != std::string::npos);

    std::ofstream mal("/tmp/liecon_malformed.json");
    mal << "{oops";
    mal.close();
    CHECK(run("check /tmp/liecon_malformed.json").exit_code == 2);
}

TEST_CASE("verify") {
    auto ok = run("verify a:5 a0:5 builtin:paper");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("Realizes") != std::string::npos);
    CHECK(ok.output.find("unbounded_entries") != std::string::npos);
    CHECK(ok.output.find("\"bounded\": false") != std::string::npos);

    std::ofstream id("/tmp/liecon_idfam.json");
    id << R"({"dim":5,"entries":[["1","0","0","0","0"],["0","1","0","0","0"],["0","0","1","0","0"],["0","0","0","1","0"],["0","0","0","0","1"]]})";
    id.close();
    CHECK(run("verify a:5 a0:5 /tmp/liecon_idfam.json").exit_code == 1);

    std::ofstream sing("/tmp/liecon_singfam.json");
    sing << R"({"dim":2,"entries":[["1","1"],["1","1"]]})";
    sing.close();
    CHECK(run("verify abelian:2 abelian:2 /tmp/liecon_singfam.json").exit_code == 2);
}

TEST_CASE("giw") {
    auto ok = run("giw a:5 a0:5");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("\"feasible\": true") != std::string::npos);

    auto forced = run("giw a:5 a0:5 --require \"a5>=0\"");
    CHECK(forced.exit_code == 1);
    CHECK(forced.output.find("Forced: a5 <= -1") != std::string::npos);

    auto infeasible = run("giw abelian:3 heisenberg");
    CHECK(infeasible.exit_code == 1);
    CHECK(infeasible.output.find("infeasible_reason") != std::string::npos);
}

TEST_CASE("certify") {
    auto csv = run("certify builtin:paper --dim 5 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.find("eps,u_norm,l55_abs") != std::string::npos);
    CHECK(csv.output.find(",1000000,") != std::string::npos);

    CHECK(run("certify builtin:paper --dim 4").exit_code == 2);

    std::ofstream id("/tmp/liecon_idfam5.json");
    id << R"({"dim":5,"entries":[["1","0","0","0","0"],["0","1","0","0","0"],["0","0","1","0","0"],["0","0","0","1","0"],["0","0","0","0","1"]]})";
    id.close();
    CHECK(run("certify /tmp/liecon_idfam5.json --dim 5").exit_code == 1);
}

TEST_CASE("invariants") {
    auto out = run("invariants a:5");
    CHECK(out.exit_code == 0);
    CHECK(out.output.find("\"derivation_dimension\": 6") != std::string::npos);
    CHECK(out.output.find("\"center_dimension\": 1") != std::string::npos);
}

TEST_CASE("experiment") {
    std::ofstream cfg("/tmp/liecon_expcfg.json");
    cfg << R"({"radii":[5,10],"restarts":8,"eval_budget":20000,"seed":1})";
    cfg.close();
    auto out = run("experiment a0:5 abelian:5 /tmp/liecon_expcfg.json");
    CHECK(out.exit_code == 0);
    CHECK(out.output.find("slope_meaningful") != std::string::npos);

    std::ofstream one("/tmp/liecon_expcfg1.json");
    one << R"({"radii":[5],"restarts":8,"eval_budget":20000,"seed":1})";
    one.close();
    CHECK(run("experiment a:5 a0:5 /tmp/liecon_expcfg1.json").exit_code == 2);
}

TEST_CASE("out file and format flags") {
    auto rc = run("check a:5 --out /tmp/liecon_check_out.json");
    CHECK(rc.exit_code == 0);
    std::ifstream f("/tmp/liecon_check_out.json");
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(text.find("is_lie_algebra") != std::string::npos);

    // csv is only defined for report-producing commands
    CHECK(run("check a:5 --format csv").exit_code == 2);
}
