#ifndef QID_MONTECARLO_H
#define QID_MONTECARLO_H

#include <cstdint>
#include <span>
#include <vector>

#include "qid/detection.h"
#include "qid/rng.h"

namespace qid {

/// Outcome label for Pi_?; definite outcomes are 1..d.
inline constexpr int kInconclusive = 0;

struct TrialRecord {
    int truth;
    int outcome;
    /// p_1..p_d followed by p_?.
    std::vector<double> probabilities;

    bool success() const { return outcome == truth; }
    bool error() const { return outcome != kInconclusive && outcome != truth; }
    double p_success() const { return probabilities[static_cast<std::size_t>(truth - 1)]; }
    double p_inconclusive() const { return probabilities.back(); }
};

/// Outcome probabilities for the product state of `factors` (probe first):
/// p_m = scale_m * sum_k |<pi_m^(k)|Psi>|^2 via determinants, p_? by complement.
/// Throws ConsistencyError if p_? < -kEigenTol.
std::vector<double> outcome_probabilities(const Povm &povm, std::span<const SingleQuditState> factors);

/// Inverse-CDF draw over [p_1, ..., p_d, p_?]; u on a boundary goes to the later bin.
int sample_outcome(std::span<const double> probabilities, double u);

/// Prepares |Psi_truth> from fixed references and samples an outcome with u.
TrialRecord evaluate_trial(const Povm &povm, std::span<const SingleQuditState> references, int truth, double u);

/// Draws d Haar references, a uniform truth in 1..d, and an outcome, all from `stream`.
TrialRecord run_trial(QuditDim d, const Povm &povm, RngStream &stream);

struct ExperimentReport {
    int d = 0;
    long trials = 0;
    uint64_t seed = 0;
    long successes = 0;
    long errors = 0;
    long inconclusive = 0;
    /// Indexed by truth n-1.
    std::vector<long> trials_by_truth;
    std::vector<long> successes_by_truth;
    double success_rate = 0;
    double error_rate = 0;
    double inconclusive_rate = 0;
    /// 99% normal-approximation half-width of the success rate.
    double success_ci99 = 0;
    double expected_success = 0;
    double wall_time_s = 0;
    unsigned threads = 1;

    /// Everything except wall time and thread count.
    bool same_outcome(const ExperimentReport &o) const;
};

/// z-score of the two-sided 99% normal interval.
inline constexpr double kZ99 = 2.5758293035489004;

/// Trial i uses RngStream(seed, i), so counts depend only on (d, trials, seed).
/// When `records` is non-null it receives one TrialRecord per trial in order.
ExperimentReport run_experiment(QuditDim d, long trials, uint64_t seed, unsigned threads_hint = 1,
                                std::vector<TrialRecord> *records = nullptr);

/// Pearson chi-square statistic for equal per-truth success rates.
double success_homogeneity_chi2(const ExperimentReport &report);

}  // namespace qid

#endif
