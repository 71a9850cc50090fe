#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string cli = ESUSY_CLI_PATH;

int run(const std::string& args) {
    const int rc = std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path workdir() {
    fs::path d = fs::temp_directory_path() / "esusy_cli_test";
    fs::create_directories(d);
    return d;
}

} // namespace

TEST_CASE("generate: hyperbolic curves, header and closed-form value") {
    fs::path d = workdir();
    const std::string out = (d / "hyp").string();
    const int rc = run("generate --family hyperbolic "
                       "--params '{\"kappa\":1,\"lambda\":0.45}' "
                       "--grid \"-10,10,401\" --out " + out);
    CHECK(rc == 0);
    REQUIRE(fs::exists(out + "_potential.csv"));
    REQUIRE(fs::exists(out + "_missing_state.csv"));

    std::ifstream in(out + "_potential.csv");
    std::string header, row;
    std::getline(in, header);
    CHECK(header == "x,re_V,im_V");
    // row 200 is x = 0 where V = -kappa^2(1 + theta)/(1 + theta)^2
    for (int i = 0; i <= 200; ++i) std::getline(in, row);
    double x, re, im;
    REQUIRE(std::sscanf(row.c_str(), "%lf,%lf,%lf", &x, &re, &im) == 3);
    const double theta = std::sqrt(1.0 - 4 * 0.45 * 0.45);
    CHECK(std::abs(x) < 1e-12);
    CHECK(std::abs(re + (1.0 + theta) / ((1 + theta) * (1 + theta))) < 1e-12);
    CHECK(std::abs(im) < 1e-12);
}

TEST_CASE("generate: identical config gives byte-identical output") {
    fs::path d = workdir();
    const std::string a = (d / "run_a").string();
    const std::string b = (d / "run_b").string();
    const std::string args = "generate --family periodic "
                             "--params '{\"k\":1,\"lambda\":0.5}' "
                             "--grid \"-6,6,301\" --out ";
    CHECK(run(args + a) == 0);
    CHECK(run(args + b) == 0);
    CHECK(slurp(a + "_potential.csv") == slurp(b + "_potential.csv"));
    CHECK(!slurp(a + "_potential.csv").empty());
}

TEST_CASE("generate: oscillator emits missing state and partner states") {
    fs::path d = workdir();
    const std::string out = (d / "osc").string();
    const int rc = run("generate --family oscillator "
                       "--params '{\"a\":0.785398163397448,\"b\":0.886226925452758,\"c\":1}' "
                       "--grid \"-5,5,201\" --states 0..2 --out " + out);
    CHECK(rc == 0);
    CHECK(fs::exists(out + "_potential.csv"));
    CHECK(fs::exists(out + "_missing_state.csv"));
    CHECK(fs::exists(out + "_state_0.csv"));
    CHECK(fs::exists(out + "_state_2.csv"));
    CHECK(!fs::exists(out + "_state_3.csv"));
}

TEST_CASE("generate: json format") {
    fs::path d = workdir();
    const std::string out = (d / "jd").string();
    CHECK(run("generate --family hyperbolic "
              "--params '{\"kappa\":1,\"lambda\":0.2}' "
              "--grid \"-4,4,41\" --format json --out " + out) == 0);
    json j = json::parse(slurp(out + "_potential.json"));
    CHECK(j["schema_version"] == 1);
    CHECK(j["columns"].size() == 3);
    CHECK(j["rows"].size() == 41);
}

TEST_CASE("config errors exit with code 2") {
    fs::path d = workdir();
    // out-of-range lambda
    CHECK(run("generate --family hyperbolic "
              "--params '{\"kappa\":1,\"lambda\":0.8}' "
              "--grid \"-4,4,41\" --out " + (d / "x").string()) == 2);
    // unknown family
    CHECK(run("generate --family scarf --params '{}' --grid \"-4,4,41\" "
              "--out " + (d / "x").string()) == 2);
    // malformed grid
    CHECK(run("generate --family hyperbolic "
              "--params '{\"kappa\":1,\"lambda\":0.2}' --grid \"oops\" "
              "--out " + (d / "x").string()) == 2);
    // missing parameter
    CHECK(run("generate --family hyperbolic --params '{\"kappa\":1}' "
              "--grid \"-4,4,41\" --out " + (d / "x").string()) == 2);
}

TEST_CASE("verify: hyperbolic defaults pass") {
    fs::path d = workdir();
    const std::string rep = (d / "hyp_verify.json").string();
    CHECK(run("verify --family hyperbolic "
              "--params '{\"kappa\":1,\"lambda\":0.45}' --out " + rep) == 0);
    json j = json::parse(slurp(rep));
    CHECK(j["schema_version"] == 1);
    CHECK(j["pass"] == true);
    CHECK(j["checks"].size() >= 10);
}

TEST_CASE("verify: oscillator passes, negative/zero lambda0 refused") {
    fs::path d = workdir();
    CHECK(run("verify --family oscillator "
              "--params '{\"a\":0.785398163397448,\"b\":0.886226925452758,\"c\":1}'") == 0);

    // c < b^2/(4a): excluded branch
    const std::string rep = (d / "excluded.json").string();
    CHECK(run("verify --family oscillator "
              "--params '{\"a\":1,\"b\":3,\"c\":1}' --out " + rep) == 2);
    json j = json::parse(slurp(rep));
    CHECK(j["branch"] == "excluded");

    // b^2 = 4ac exactly: conventional branch
    const std::string rep2 = (d / "conventional.json").string();
    CHECK(run("verify --family oscillator "
              "--params '{\"a\":1,\"b\":2,\"c\":1}' --out " + rep2) == 2);
    json j2 = json::parse(slurp(rep2));
    CHECK(j2["branch"] == "conventional");
}

TEST_CASE("verify: sin-variant periodic family passes") {
    CHECK(run("verify --family periodic "
              "--params '{\"k\":1,\"lambda\":0.5,\"variant\":\"sin\"}'") == 0);
}

TEST_CASE("spectrum: oscillator ladder and report-only periodic") {
    fs::path d = workdir();
    const std::string rep = (d / "osc_spec.json").string();
    CHECK(run("spectrum --family oscillator "
              "--params '{\"a\":0.785398163397448,\"b\":0.886226925452758,\"c\":1}' "
              "--grid \"-8,8,301\" --states 0..4 --out " + rep) == 0);
    json j = json::parse(slurp(rep));
    REQUIRE(j["matched"].size() == 5);
    for (int k = 0; k < 5; ++k) {
        CHECK(j["matched"][k]["expected"].get<double>() ==
              doctest::Approx(2.0 * k - 1.0));
        CHECK(j["matched"][k]["abs_error"].get<double>() < 0.2);
    }

    const std::string rep2 = (d / "per_spec.json").string();
    CHECK(run("spectrum --family periodic --params '{\"k\":1,\"lambda\":0.5}' "
              "--grid \"-9,9,301\" --states 0..3 --out " + rep2) == 0);
    json j2 = json::parse(slurp(rep2));
    CHECK(j2["matched"].empty()); // no bound-state assertion for this family
    CHECK(j2["lowest"].size() == 4);
}

TEST_CASE("spectrum: hyperbolic bound state on a coarse grid") {
    fs::path d = workdir();
    const std::string rep = (d / "spec.json").string();
    CHECK(run("spectrum --family hyperbolic "
              "--params '{\"kappa\":1,\"lambda\":0.5}' "
              "--grid \"-25,25,501\" --states 0..0 --out " + rep) == 0);
    json j = json::parse(slurp(rep));
    CHECK(j["schema_version"] == 1);
    CHECK(j["eigenvalue_count"] == 499);
    const double e0 = j["lowest"][0]["re"].get<double>();
    CHECK(std::abs(e0 + 0.25) < 1e-3);
    CHECK(std::abs(j["lowest"][0]["im"].get<double>()) < 1e-6);
    REQUIRE(j["matched"].size() == 1);
    CHECK(j["matched"][0]["expected"] == -0.25);
}

TEST_CASE("params file wins; conflicts are errors") {
    fs::path d = workdir();
    const std::string cfgfile = (d / "family.json").string();
    {
        std::ofstream o(cfgfile);
        o << R"({"family":"hyperbolic","params":{"kappa":1,"lambda":0.3}})";
    }
    CHECK(run("generate --params " + cfgfile + " --grid \"-4,4,41\" --out " +
              (d / "pf").string()) == 0);
    // agreeing --family is fine
    CHECK(run("generate --family hyperbolic --params " + cfgfile +
              " --grid \"-4,4,41\" --out " + (d / "pf2").string()) == 0);
    // conflicting --family is an error, not a merge
    CHECK(run("generate --family periodic --params " + cfgfile +
              " --grid \"-4,4,41\" --out " + (d / "pf3").string()) == 2);
}
