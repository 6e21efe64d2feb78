#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "delab/profile.hpp"
#include "delab/suites.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

namespace fs = std::filesystem;
using namespace delab;

namespace {

const fs::path& workdir() {
    static const fs::path d = [] {
        auto p = fs::temp_directory_path() / ("delab_cli_" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return d;
}

int run(const std::string& args) {
    const std::string cmd = "cd '" + workdir().string() + "' && DELAB_THREADS=1 '" DELAB_CLI_PATH "' " + args +
                            " > cli.log 2>&1";
    const int s = std::system(cmd.c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

const char* kHeader = "check_id,parameters,value,bound,order_estimate,pass";

}  // namespace

TEST_CASE("resolution parsing") {
    CHECK(parse_resolution("400x64") == std::pair<std::size_t, std::size_t>{400, 64});
    CHECK_THROWS(parse_resolution("400"));
    CHECK_THROWS(parse_resolution("1x64"));
    CHECK_THROWS(parse_resolution("10x2"));
    CHECK_THROWS(parse_resolution("axb"));
}

TEST_CASE("JSON config") {
    RunConfig c;
    apply_json_config(c, R"({"a": 0.3, "n": 12, "res": "101x32", "alpha": 0.25, "field": {"A": "zero"}})");
    CHECK(c.a == 0.3);
    REQUIRE(c.n);
    CHECK(*c.n == 12);
    CHECK(c.nt == 101);
    CHECK(c.nth == 32);
    CHECK(c.alpha == 0.25);
    CHECK(c.field.find("zero") != std::string::npos);
    CHECK_FALSE(c.eps);
    CHECK(std::abs(c.epsilon() * 12 * DelaunayProfile(0.3).h() - std::numbers::pi) < 1e-12);
    c.eps = 5e-3;
    CHECK(c.epsilon() == 5e-3);
    CHECK_THROWS(apply_json_config(c, "[1, 2]"));
    CHECK_THROWS(apply_json_config(c, "{not json"));
}

TEST_CASE("CSV writer") {
    std::vector<CheckRow> rows(3);
    rows[0] = {"b.check", "a=1", 1.5, 2.0, std::nan(""), true};
    rows[1] = {"a.check", "x=1,y=2", 0.25, 1.0, 2.0, false};
    rows[2] = {"a.check", "say \"hi\"", 0.0, 0.0, 1.0, true};
    std::ostringstream os;
    write_csv(os, rows);
    const auto L = lines(os.str());
    REQUIRE(L.size() == 4);
    CHECK(L[0] == kHeader);
    CHECK(L[1].rfind("a.check,\"say \"\"hi\"\"\",", 0) == 0);
    CHECK(L[2].rfind("a.check,\"x=1,y=2\",", 0) == 0);
    CHECK(L[2].substr(L[2].size() - 5) == ",fail");
    CHECK(L[3].rfind("b.check,a=1,", 0) == 0);
    CHECK(L[3].find(",,pass") != std::string::npos);  // NaN order is empty
    CHECK_FALSE(all_pass(rows));
    rows.erase(rows.begin() + 1);
    CHECK(all_pass(rows));
}

TEST_CASE("probe writes the obstruction integrals") {
    REQUIRE(run("probe --out probe.csv") == 0);
    const auto L = lines(slurp(workdir() / "probe.csv"));
    REQUIRE_FALSE(L.empty());
    CHECK(L[0] == kHeader);
    bool found = false;
    for (const auto& l : L)
        if (l.rfind("probe.I1,", 0) == 0) {
            found = true;
            CHECK(l.substr(l.size() - 5) == ",pass");
        }
    CHECK(found);
    // Rows are sorted.
    CHECK(std::is_sorted(L.begin() + 1, L.end()));
}

TEST_CASE("kernel is deterministic and all-pass") {
    REQUIRE(run("kernel --a 0.2 --res 101x32 --out k1.csv") == 0);
    REQUIRE(run("kernel --a 0.2 --res 101x32 --out k2.csv --serial") == 0);
    const auto a = slurp(workdir() / "k1.csv"), b = slurp(workdir() / "k2.csv");
    CHECK(!a.empty());
    CHECK(a == b);
    CHECK(a.find(",fail") == std::string::npos);
}

TEST_CASE("mesh of a closed torus") {
    REQUIRE(run("mesh --a -0.1 --n 20 --res 400x64 --out torus.obj") == 0);
    std::size_t v = 0, f = 0;
    for (const auto& l : lines(slurp(workdir() / "torus.obj"))) {
        if (l.rfind("v ", 0) == 0) ++v;
        if (l.rfind("f ", 0) == 0) ++f;
    }
    CHECK(v == 400 * 64);
    CHECK(f == 2 * 400 * 64);  // both directions wrap
    REQUIRE(run("mesh --a 0.3 --res 50x16 --out cyl.obj") == 0);
    CHECK(slurp(workdir() / "cli.log").find("800 vertices, 1568 faces") != std::string::npos);
}

TEST_CASE("errors exit with status 2 and a failure row") {
    CHECK(run("probe --a 0 --out bad.csv") == 2);
    const auto L = lines(slurp(workdir() / "bad.csv"));
    REQUIRE(L.size() == 2);
    CHECK(L[1].rfind("cli.error,", 0) == 0);
    CHECK(L[1].substr(L[1].size() - 5) == ",fail");
    CHECK(run("kernel --res 10x2 --out bad2.csv") == 2);
    CHECK(run("mesh --a -0.7 --out bad.obj") == 2);
    CHECK(run("verify --config missing.json --out bad3.csv") == 2);
    CHECK(run("nonsense") != 0);
}

TEST_CASE("config file with flag override") {
    {
        std::ofstream cfg(workdir() / "cfg.json");
        cfg << R"({"a": -0.7, "res": "101x32", "out": "from_config.csv"})";
    }
    CHECK(run("kernel --config cfg.json") == 2);  // a = -0.7 is out of range
    REQUIRE(run("kernel --config cfg.json --a 0.2") == 0);
    CHECK(slurp(workdir() / "from_config.csv") == slurp(workdir() / "k1.csv"));
}
