#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

using Json = nlohmann::json;

struct Run {
    int code;
    std::string out;
};

std::filesystem::path scratch() {
    auto dir = std::filesystem::temp_directory_path() / ("fricke_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

Run run(const std::string& args) {
    static int counter = 0;
    const auto out = scratch() / ("out" + std::to_string(counter++));
    const std::string cmd = std::string(FRICKE_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream f(out);
    std::stringstream ss;
    ss << f.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

}  // namespace

TEST(Cli, ZerosLevel2Weight12) {
    const auto r = run("zeros --level 2 --weight 12");
    ASSERT_EQ(r.code, 0);
    const auto j = Json::parse(r.out);
    for (const char* key : {"config", "results", "certificates", "verdict"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    const auto& res = j["results"][0];
    EXPECT_EQ(res["zeros"].size(), 1u);
    EXPECT_EQ(res["orders"]["i"], 0);
    EXPECT_EQ(res["orders"]["rho"], 2);
    EXPECT_EQ(j["verdict"]["pass"], true);
}

TEST(Cli, ZerosLevel3Weight4) {
    const auto r = run("zeros --level 3 --weight 4");
    ASSERT_EQ(r.code, 0);
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["results"][0]["zeros"].size(), 0u);
    EXPECT_EQ(j["results"][0]["orders"]["rho"], 4);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("zeros --level 2 --weight 7").code, 64);
    EXPECT_EQ(run("zeros --level 2 --weight 2").code, 64);
    EXPECT_EQ(run("zeros --level 4 --weight 8").code, 64);
    EXPECT_EQ(run("zeros --level 2 --weight 8 --tol 1e-2").code, 64);
    EXPECT_EQ(run("zeros --level 2 --weight 8 --format csv").code, 64);
    EXPECT_EQ(run("zeros --level 2").code, 64);
    EXPECT_EQ(run("zeros --level 2 --weights 8..5").code, 64);
    EXPECT_EQ(run("zeros --level 2 --weight 8 --precision 60").code, 64);
    EXPECT_EQ(run("frobnicate").code, 64);
}

TEST(Cli, BoundsInformationalBelowEight) {
    const auto r = run("bounds --level 3 --weights 4..6");
    ASSERT_EQ(r.code, 0);
    const auto j = Json::parse(r.out);
    ASSERT_EQ(j["certificates"].size(), 2u);
    for (const auto& c : j["certificates"]) {
        EXPECT_EQ(c["informational"], true);
        EXPECT_EQ(c["name"], "r3star-raw");
    }
}

TEST(Cli, BoundsLevel1) {
    const auto r = run("bounds --level 1 --weights 8..400");
    ASSERT_EQ(r.code, 0);
    const auto j = Json::parse(r.out);
    bool found = false;
    for (const auto& c : j["certificates"]) {
        found = found || c["name"] == "r1-lt-2";
        EXPECT_EQ(c["verdict"], "pass");
    }
    EXPECT_TRUE(found);
}

TEST(Cli, Valence) {
    const auto r = run("valence --level 3 --weight 10");
    ASSERT_EQ(r.code, 0);
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["results"][0]["lhs"], "5/3");
    EXPECT_EQ(j["results"][0]["residual"], "0/1");

    const auto r1 = run("valence --level 1 --weight 4");
    ASSERT_EQ(r1.code, 0);
    EXPECT_EQ(Json::parse(r1.out)["results"][0]["lhs"], "1/3");
}

TEST(Cli, Spaces) {
    const auto r8 = run("spaces --level 2 --weight 8");
    ASSERT_EQ(r8.code, 0);
    const auto j8 = Json::parse(r8.out);
    const auto& basis = j8["results"][0]["basis"];
    ASSERT_EQ(basis.size(), 2u);
    EXPECT_EQ(basis[0]["label"], "E*8,2");
    EXPECT_EQ(basis[1]["label"], "delta2");
    EXPECT_EQ(basis[1]["coefficients"][1], "1/1");

    const auto r2 = run("spaces --level 2 --weight 2");
    ASSERT_EQ(r2.code, 0);
    EXPECT_EQ(Json::parse(r2.out)["results"][0]["dimension"], 0);
}

TEST(Cli, SpacesLevel3WithTable) {
    const auto r = run("spaces --level 3 --weight 12");
    ASSERT_EQ(r.code, 0);
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["results"][0]["dimension"], 3);
    EXPECT_GE(j["certificates"].size(), 44u);
}

TEST(Cli, Plot) {
    const auto r = run("plot --level 2 --weight 16");
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "theta,f_value");
    int rows = 0;
    while (std::getline(in, line) && !line.empty()) {
        ++rows;
    }
    EXPECT_EQ(rows, 2000);
    std::getline(in, line);
    EXPECT_EQ(line, "zero_index,theta,theta_lo,theta_hi");
    int zeros = 0;
    while (std::getline(in, line) && !line.empty()) {
        ++zeros;
    }
    EXPECT_EQ(zeros, 2);
    EXPECT_EQ(run("plot --level 2 --weight 16 --format json").code, 64);
}

TEST(Cli, Deterministic) {
    const auto a = run("zeros --level 3 --weights 8..12");
    const auto b = run("zeros --level 3 --weights 8..12");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, OutFlag) {
    const auto path = scratch() / "report.json";
    ASSERT_EQ(run("zeros --level 2 --weight 8 --out " + path.string()).code, 0);
    std::ifstream f(path);
    ASSERT_TRUE(f.good());
    const auto j = Json::parse(f);
    EXPECT_EQ(j["config"]["weights"][0], 8);
}

TEST(Cli, FailureExitCodes) {
    // two coprime pairs are far from modular, so the measured elliptic orders drift
    const auto r = run("zeros --level 2 --weight 1000 --max-norm 2");
    EXPECT_EQ(r.code, 2);
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["verdict"]["pass"], false);
    EXPECT_EQ(j["verdict"]["exit_code"], 2);
}
