#include "qid/serialize.h"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.h"

using namespace qid;

TEST(serialize, state_vector_round_trip) {
    std::mt19937_64 rng(1);
    for (int d : {2, 3}) {
        std::vector<SingleQuditState> f;
        for (int j = 0; j <= d; j++) {
            f.push_back(oracle::random_qudit(d, rng));
        }
        StateVector s = product_state(f);
        json j = json::parse(to_json(s).dump());
        EXPECT_EQ(j["d"], d);
        EXPECT_EQ(j["amps"].size(), s.size());
        StateVector back = state_from_json(j);
        for (std::size_t i = 0; i < s.size(); i++) {
            ASSERT_EQ(back[i], s[i]);
        }
    }
}

TEST(serialize, operator_stores_upper_triangle) {
    HermitianOperator rho = build_rho(QuditDim(2), 1);
    json j = to_json(rho);
    EXPECT_EQ(j["dim"], 8);
    for (const auto &t : j["triplets"]) {
        EXPECT_LE(t[0].get<int>(), t[1].get<int>());
    }
    HermitianOperator back = operator_from_json(json::parse(j.dump()));
    EXPECT_EQ((back.to_dense() - rho.to_dense()).cwiseAbs().maxCoeff(), 0.0);

    json lower = j;
    lower["triplets"].push_back({3, 1, 0.5, 0.0});
    EXPECT_THROW(operator_from_json(lower), std::domain_error);
}

TEST(serialize, povm_round_trip) {
    Povm p = build_povm(QuditDim(3));
    json j = json::parse(to_json(p).dump());
    EXPECT_EQ(j["d"], 3);
    EXPECT_DOUBLE_EQ(j["scale"].get<double>(), 0.75);
    EXPECT_EQ(j["elements"].size(), 3u);
    EXPECT_EQ(j["elements"][0]["n"], 1);
    EXPECT_EQ(j["elements"][0]["vectors"].size(), 3u);
    Povm back = povm_from_json(j);
    ASSERT_TRUE(back.inconclusive.has_value());
    EXPECT_EQ((back.inconclusive->to_dense() - p.inconclusive->to_dense()).cwiseAbs().maxCoeff(), 0.0);
}

TEST(serialize, reports_are_schema_stable) {
    json v = to_json(verify_povm(QuditDim(2)));
    for (const char *key : {"d", "p_succ", "p_succ_closed_form", "max_offdiag", "min_eig_pi_unknown", "gram_ok",
                            "checks", "failed", "ok"}) {
        EXPECT_TRUE(v.contains(key)) << key;
    }
    json e = to_json(run_experiment(QuditDim(2), 100, 1));
    for (const char *key : {"d", "trials", "seed", "counts", "success_rate", "error_rate", "inconclusive_rate",
                            "success_ci99_halfwidth", "rng", "wall_time_s"}) {
        EXPECT_TRUE(e.contains(key)) << key;
    }
    json o = to_json(optimal_alpha_eigen(build_symmetric_family(2)), 2);
    EXPECT_TRUE(o.contains("alpha_opt"));
    EXPECT_TRUE(o.contains("S_opt"));
    EXPECT_TRUE(o.contains("spectrum"));
}

TEST(serialize, doubles_round_trip_exactly) {
    double third = 1.0 / 3;
    json j = json::parse(json{{"x", third}}.dump());
    EXPECT_EQ(j["x"].get<double>(), third);
}

TEST(serialize, trials_csv) {
    std::vector<TrialRecord> records;
    run_experiment(QuditDim(2), 50, 4, 1, &records);
    std::ostringstream out;
    write_trials_csv(out, records);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "trial,truth,outcome,p_success,p_inconclusive");
    int rows = 0;
    while (std::getline(in, line)) {
        rows++;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 4);
    }
    EXPECT_EQ(rows, 50);
}
