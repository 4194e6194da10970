#include "qid/serialize.h"

#include <cstdio>
#include <string>

namespace qid {

namespace {

std::string fmt17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

json to_json(const StateVector &s) {
    json amps = json::array();
    for (const auto &a : s.amplitudes()) {
        amps.push_back({a.real(), a.imag()});
    }
    return {{"d", s.dim().value()}, {"amps", std::move(amps)}};
}

StateVector state_from_json(const json &j) {
    QuditDim d(j.at("d").get<int>());
    std::vector<cd> amps;
    for (const auto &pair : j.at("amps")) {
        amps.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
    return StateVector(d, std::move(amps));
}

json to_json(const HermitianOperator &op) {
    json triplets = json::array();
    const auto &m = op.matrix();
    for (Eigen::Index row = 0; row < m.outerSize(); row++) {
        for (HermitianOperator::Sparse::InnerIterator it(m, row); it; ++it) {
            if (it.col() >= row) {
                triplets.push_back({row, it.col(), it.value().real(), it.value().imag()});
            }
        }
    }
    return {{"d", op.dim().value()}, {"dim", op.size()}, {"triplets", std::move(triplets)}};
}

HermitianOperator operator_from_json(const json &j) {
    QuditDim d(j.at("d").get<int>());
    if (j.at("dim").get<std::size_t>() != d.total_dim()) {
        throw std::domain_error("operator JSON: dim does not match d^(d+1)");
    }
    std::vector<Eigen::Triplet<cd>> t;
    for (const auto &e : j.at("triplets")) {
        auto row = e.at(0).get<Eigen::Index>();
        auto col = e.at(1).get<Eigen::Index>();
        cd v(e.at(2).get<double>(), e.at(3).get<double>());
        if (col < row) {
            throw std::domain_error("operator JSON must store the upper triangle only");
        }
        t.emplace_back(row, col, v);
        if (col != row) {
            t.emplace_back(col, row, std::conj(v));
        }
    }
    HermitianOperator::Sparse m(static_cast<Eigen::Index>(d.total_dim()), static_cast<Eigen::Index>(d.total_dim()));
    m.setFromTriplets(t.begin(), t.end());
    return HermitianOperator(d, std::move(m));
}

json to_json(const Povm &povm) {
    json elements = json::array();
    for (const auto &e : povm.elements) {
        json vectors = json::array();
        for (const auto &v : e.vectors) {
            vectors.push_back(to_json(v));
        }
        elements.push_back({{"n", e.n}, {"vectors", std::move(vectors)}});
    }
    return {{"d", povm.dim.value()}, {"scale", povm.scale}, {"elements", std::move(elements)}};
}

Povm povm_from_json(const json &j) {
    QuditDim d(j.at("d").get<int>());
    Povm povm{d, j.at("scale").get<double>(), {}, std::nullopt};
    for (const auto &e : j.at("elements")) {
        LowRankPovmElement el{e.at("n").get<int>(), povm.scale, {}};
        for (const auto &v : e.at("vectors")) {
            el.vectors.push_back(state_from_json(v));
        }
        povm.elements.push_back(std::move(el));
    }
    if (d.value() <= Povm::kMaxDenseD) {
        HermitianOperator::Sparse identity(d.total_dim(), d.total_dim());
        identity.setIdentity();
        HermitianOperator::Sparse rest = identity - sum_detection_operators(povm).matrix();
        rest.prune(cd(0.0), 0.0);
        povm.inconclusive.emplace(d, std::move(rest));
    }
    return povm;
}

json to_json(const ConfusionMatrix &cm) {
    json rows = json::array();
    for (int n = 0; n < cm.d; n++) {
        json row = json::array();
        for (int m = 0; m <= cm.d; m++) {
            row.push_back(cm.entries(n, m));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const VerificationReport &r) {
    json checks = json::array();
    for (const auto &c : r.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"value", c.value}, {"tolerance", c.tolerance}});
    }
    return {
        {"d", r.d},
        {"p_succ", r.p_succ},
        {"p_succ_closed_form", r.p_succ_closed_form},
        {"p_succ_coefficient_route", r.p_succ_coefficient_route},
        {"max_offdiag", r.max_offdiag},
        {"max_rho_pi_residual", r.max_rho_pi_residual},
        {"completeness_residual", r.completeness_residual},
        {"min_eig_pi_unknown", r.min_eig_pi_unknown},
        {"max_gram_deviation", r.max_gram_deviation},
        {"gram_ok", r.gram_ok},
        {"detection_spectrum", r.detection_spectrum},
        {"checks", std::move(checks)},
        {"failed", r.failed()},
        {"ok", r.ok()},
    };
}

json to_json(const ExperimentReport &r) {
    return {
        {"d", r.d},
        {"trials", r.trials},
        {"seed", r.seed},
        {"counts", {{"success", r.successes}, {"error", r.errors}, {"inconclusive", r.inconclusive}}},
        {"trials_by_truth", r.trials_by_truth},
        {"successes_by_truth", r.successes_by_truth},
        {"success_rate", r.success_rate},
        {"error_rate", r.error_rate},
        {"inconclusive_rate", r.inconclusive_rate},
        {"success_ci99_halfwidth", r.success_ci99},
        {"expected_success", r.expected_success},
        {"rng", {{"generator", "philox4x32-10"}, {"key", "seed"}, {"counter", "trial index"}}},
        {"wall_time_s", r.wall_time_s},
    };
}

json to_json(const EigenOptimum &r, int d) {
    return {{"d", d}, {"mode", "eigen"}, {"alpha_opt", r.alpha_opt}, {"S_opt", r.s_opt}, {"spectrum", r.spectrum}};
}

json to_json(const GridOptimum &r, int d, double resolution) {
    return {{"d", d},
            {"mode", "grid"},
            {"resolution", resolution},
            {"alpha", r.alpha},
            {"alpha_opt", r.s / d},
            {"S_opt", r.s},
            {"evaluated", r.evaluated},
            {"feasible", r.feasible}};
}

void write_trials_csv(std::ostream &out, const std::vector<TrialRecord> &records) {
    out << "trial,truth,outcome,p_success,p_inconclusive\n";
    for (std::size_t i = 0; i < records.size(); i++) {
        const auto &r = records[i];
        out << i << ',' << r.truth << ',';
        if (r.outcome == kInconclusive) {
            out << '?';
        } else {
            out << r.outcome;
        }
        out << ',' << fmt17(r.p_success()) << ',' << fmt17(r.p_inconclusive()) << '\n';
    }
}

}  // namespace qid
