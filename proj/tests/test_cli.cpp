#include "enumpw_cli/app.hpp"
#include "enumpw/rational.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using enumpw::cli::run;
using json = nlohmann::json;

namespace {

json report(const std::vector<std::string>& args, int expect_exit = 0) {
    auto r = run(args);
    EXPECT_EQ(r.exit_code, expect_exit) << r.error;
    return json::parse(r.output);
}

bool all_pass(const json& j) {
    for (const auto& c : j["checks"])
        if (c["status"] != "pass") return false;
    return true;
}

void collect_strings(const json& j, std::vector<std::string>& out) {
    if (j.is_string()) out.push_back(j.get<std::string>());
    else if (j.is_structured())
        for (const auto& x : j) collect_strings(x, out);
}

}  // namespace

TEST(Cli, SolveLowestDefect) {
    auto r = run({"solve", "--g", "4", "--k", "1", "--h", "0"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("beta + (2/9)*alpha*eta"), std::string::npos);
    EXPECT_TRUE(all_pass(json::parse(r.output)));
}

TEST(Cli, SolveReportsNonUniqueness) {
    auto j = report({"solve", "--g", "4", "--k", "3", "--h", "3"});
    EXPECT_EQ(j["checks"][0]["status"], "skipped");
    bool found = false;
    for (const auto& x : j["results"])
        if (x["name"] == "kernel_dim") found = x["value"].get<int>() > 1;
    EXPECT_TRUE(found);
}

TEST(Cli, HeatChecksPass) {
    auto j = report({"heat", "--k-max", "6"});
    EXPECT_TRUE(all_pass(j));
    EXPECT_GT(j["checks"].size(), 30u);
}

TEST(Cli, WdetScanCsv) {
    auto r = run({"wdet-scan", "--h", "1", "--k-max", "5", "--g-max", "12", "--jobs", "3"});
    EXPECT_EQ(r.exit_code, 0) << r.error;
    std::istringstream in(r.output);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "k,h,g,value,sign");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        EXPECT_EQ(line.substr(line.rfind(',') + 1), "1") << line;
    }
    EXPECT_EQ(rows, 11 + 10 + 9 + 8 + 7);
}

TEST(Cli, DeterministicAndRoundTrip) {
    std::vector<std::string> args{"matrix", "--g", "5", "--k", "3", "--which", "Qinv"};
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.output, b.output);
    std::vector<std::string> strings;
    collect_strings(json::parse(a.output)["results"][0]["value"]["entries"], strings);
    ASSERT_FALSE(strings.empty());
    for (const auto& s : strings) EXPECT_EQ(enumpw::Rational::parse(s).str(), s);
}

TEST(Cli, IntersectCommands) {
    auto n = report({"intersect-n", "--g", "2", "--i", "3"});
    EXPECT_EQ(n["results"][0]["value"], "1/4");
    EXPECT_TRUE(all_pass(report({"intersect-z", "--g", "3", "--k", "2", "--ty", "1", "--tu", "1"})));
    auto z = report({"intersect-z", "--g", "2", "--k", "1", "--i", "2", "--m", "1"});
    EXPECT_EQ(z["results"][0]["value"], "1");
    EXPECT_TRUE(all_pass(report({"equiv-m", "--g", "2", "--ty", "1"})));
}

TEST(Cli, KernelAndMatrixChecks) {
    EXPECT_TRUE(all_pass(report({"kernel", "--g", "6", "--k", "3"})));
    EXPECT_TRUE(all_pass(report({"matrix", "--g", "6", "--k", "3"})));
    auto s = report({"matrix", "--k", "2", "--which", "S"});
    EXPECT_EQ(s["results"][0]["value"]["entries"].size(), 4u);
}

TEST(Cli, UsageErrors) {
    auto r = run({"solve", "--g", "2", "--k", "3"});
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.error.find("g >= k + 1"), std::string::npos);
    EXPECT_EQ(run({"nonsense"}).exit_code, 2);
    EXPECT_EQ(run({}).exit_code, 2);
    EXPECT_EQ(run({"solve", "--g", "4", "--k", "1", "--format", "csv"}).exit_code, 2);
    EXPECT_EQ(run({"matrix", "--g", "4", "--k", "1", "--which", "X"}).exit_code, 2);
    EXPECT_EQ(run({"--help"}).exit_code, 0);
}

TEST(Cli, VerifyAllExitStatus) {
    EXPECT_TRUE(all_pass(report({"verify-all", "--criteria", "1,5"})));
    auto j = report({"verify-all", "--criteria", "2"}, 1);
    EXPECT_EQ(j["checks"][0]["status"], "fail");
}

TEST(Cli, OutputDirectoryFromEnvironment) {
    auto dir = std::filesystem::temp_directory_path() / "enumpw_cli_test";
    std::filesystem::create_directories(dir);
    setenv("ENUMPW_OUTPUT_DIR", dir.c_str(), 1);
    auto r = run({"heat", "--k-max", "2", "--output", "heat.json"});
    unsetenv("ENUMPW_OUTPUT_DIR");
    EXPECT_EQ(r.exit_code, 0);
    std::ifstream f(dir / "heat.json");
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_EQ(ss.str(), r.output);
    std::filesystem::remove_all(dir);
}

TEST(Cli, TimingIsOptIn) {
    EXPECT_FALSE(report({"heat", "--k-max", "1"}).contains("timing_ms"));
    EXPECT_TRUE(report({"heat", "--k-max", "1", "--timing"}).contains("timing_ms"));
}
