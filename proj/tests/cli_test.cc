#include "cli.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "qid");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = qid::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(cli, verify_d3) {
    Result r = run({"verify", "--d", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["p_succ"].get<double>(), 1.0 / 36, 1e-12);
    EXPECT_NEAR(j["p_succ"].get<double>(), j["p_succ_closed_form"].get<double>(), 1e-12);
    EXPECT_TRUE(j["gram_ok"].get<bool>());
    EXPECT_TRUE(j["failed"].empty());
}

TEST(cli, simulate_json) {
    Result r = run({"simulate", "--d", "2", "--trials", "100000", "--seed", "7"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["error_rate"].get<double>(), 0.0);
    EXPECT_EQ(j["seed"], 7);
    EXPECT_EQ(j["trials"], 100000);
    EXPECT_NEAR(j["success_rate"].get<double>(), 1.0 / 6, 0.0036);
}

TEST(cli, simulate_is_deterministic) {
    Result a = run({"simulate", "--d", "3", "--trials", "5000", "--seed", "3"});
    Result b = run({"simulate", "--d", "3", "--trials", "5000", "--seed", "3"});
    auto ja = nlohmann::json::parse(a.out);
    auto jb = nlohmann::json::parse(b.out);
    ja.erase("wall_time_s");
    jb.erase("wall_time_s");
    EXPECT_EQ(ja, jb);
}

TEST(cli, simulate_csv) {
    Result r = run({"simulate", "--d", "2", "--trials", "20", "--seed", "1", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "trial,truth,outcome,p_success,p_inconclusive");
}

TEST(cli, optimize_eigen) {
    Result r = run({"optimize", "--d", "2", "--mode", "eigen"});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["alpha_opt"].get<double>(), 2.0 / 3, 1e-12);
    EXPECT_EQ(j["spectrum"].size(), 2u);
}

TEST(cli, optimize_grid) {
    Result r = run({"optimize", "--d", "2", "--mode", "grid", "--resolution", "0.01"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["S_opt"].get<double>(), 4.0 / 3, 0.02);
}

TEST(cli, build_writes_out_file) {
    std::string path = ::testing::TempDir() + "qid_povm.json";
    Result r = run({"build", "--d", "2", "--out", path});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    auto j = nlohmann::json::parse(f);
    EXPECT_EQ(j["d"], 2);
    EXPECT_NEAR(j["scale"].get<double>(), 2.0 / 3, 1e-15);
    std::remove(path.c_str());
}

TEST(cli, usage_errors) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"verify", "--d", "7"}).code, 1);
    EXPECT_EQ(run({"verify", "--d", "1"}).code, 1);
    EXPECT_EQ(run({"verify", "--d", "3", "--bogus"}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"simulate", "--d", "2", "--format", "xml"}).code, 1);
    EXPECT_EQ(run({"simulate", "--d", "2", "--trials", "0"}).code, 1);
    EXPECT_EQ(run({"optimize", "--d", "4", "--mode", "grid"}).code, 1);
    EXPECT_EQ(run({"optimize", "--d", "2", "--mode", "grid", "--resolution", "0.5"}).code, 1);
    Result d5 = run({"verify", "--d", "5"});
    EXPECT_EQ(d5.code, 1);
    EXPECT_NE(d5.err.find("d <= 4"), std::string::npos);
}

TEST(cli, d5_low_rank_subcommands) {
    Result r = run({"simulate", "--d", "5", "--trials", "200", "--seed", "2"});
    EXPECT_EQ(r.code, 0) << r.err;
    Result o = run({"optimize", "--d", "5"});
    EXPECT_EQ(o.code, 0);
    EXPECT_NEAR(nlohmann::json::parse(o.out)["alpha_opt"].get<double>(), 5.0 / 6, 1e-12);
}
