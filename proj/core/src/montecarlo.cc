#include "qid/montecarlo.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <thread>

#include "qid/analytics.h"

namespace qid {

std::vector<double> outcome_probabilities(const Povm &povm, std::span<const SingleQuditState> factors) {
    const QuditDim d = povm.dim;
    const int dd = d.value();
    std::vector<double> p(static_cast<std::size_t>(dd) + 1);
    double detected = 0;
    for (int m = 1; m <= dd; m++) {
        double w = 0;
        for (const cd &a : pi_overlaps_with_product(d, m, factors)) {
            w += std::norm(a);
        }
        p[m - 1] = povm.element(m).scale * w;
        detected += p[m - 1];
    }
    p[dd] = 1.0 - detected;
    if (p[dd] < -kEigenTol) {
        throw ConsistencyError("inconclusive probability " + std::to_string(p[dd]) + " is negative");
    }
    return p;
}

int sample_outcome(std::span<const double> probabilities, double u) {
    const int d = static_cast<int>(probabilities.size()) - 1;
    double cumulative = 0;
    for (int m = 0; m < d; m++) {
        cumulative += probabilities[m];
        if (u < cumulative) {
            return m + 1;
        }
    }
    return kInconclusive;
}

TrialRecord evaluate_trial(const Povm &povm, std::span<const SingleQuditState> references, int truth, double u) {
    const int d = povm.dim.value();
    if (references.size() != static_cast<std::size_t>(d)) {
        throw std::domain_error("need exactly d reference states");
    }
    if (truth < 1 || truth > d) {
        throw std::out_of_range("truth label out of range");
    }
    std::vector<SingleQuditState> factors;
    factors.reserve(d + 1);
    factors.push_back(references[truth - 1]);
    factors.insert(factors.end(), references.begin(), references.end());
    TrialRecord r{truth, kInconclusive, outcome_probabilities(povm, factors)};
    r.outcome = sample_outcome(r.probabilities, u);
    return r;
}

TrialRecord run_trial(QuditDim d, const Povm &povm, RngStream &stream) {
    if (!(povm.dim == d)) {
        throw std::domain_error("POVM was built for a different d");
    }
    std::vector<SingleQuditState> refs;
    refs.reserve(d.value());
    for (int i = 0; i < d.value(); i++) {
        refs.push_back(sample_haar(d.value(), stream));
    }
    int truth = 1 + static_cast<int>(stream.below(static_cast<uint64_t>(d.value())));
    double u = stream.uniform();
    return evaluate_trial(povm, refs, truth, u);
}

bool ExperimentReport::same_outcome(const ExperimentReport &o) const {
    return d == o.d && trials == o.trials && seed == o.seed && successes == o.successes && errors == o.errors &&
           inconclusive == o.inconclusive && trials_by_truth == o.trials_by_truth &&
           successes_by_truth == o.successes_by_truth && success_rate == o.success_rate &&
           error_rate == o.error_rate && inconclusive_rate == o.inconclusive_rate && success_ci99 == o.success_ci99 &&
           expected_success == o.expected_success;
}

ExperimentReport run_experiment(QuditDim d, long trials, uint64_t seed, unsigned threads_hint,
                                std::vector<TrialRecord> *records) {
    if (trials < 1) {
        throw std::domain_error("trials must be >= 1");
    }
    const auto start = std::chrono::steady_clock::now();
    const int dd = d.value();
    const Povm povm = build_povm(d);
    const unsigned threads =
        std::max(1u, static_cast<unsigned>(std::min<long>(static_cast<long>(threads_hint), trials)));

    struct Tally {
        long successes = 0, errors = 0, inconclusive = 0;
        std::vector<long> by_truth, successes_by_truth;
    };
    std::vector<Tally> tallies(threads);
    if (records) {
        records->assign(static_cast<std::size_t>(trials), TrialRecord{0, 0, {}});
    }

    auto work = [&](unsigned t) {
        Tally &tally = tallies[t];
        tally.by_truth.assign(dd, 0);
        tally.successes_by_truth.assign(dd, 0);
        const long begin = trials * t / threads;
        const long end = trials * (t + 1) / threads;
        for (long i = begin; i < end; i++) {
            RngStream stream(seed, static_cast<uint64_t>(i));
            TrialRecord r = run_trial(d, povm, stream);
            tally.by_truth[r.truth - 1]++;
            if (r.outcome == kInconclusive) {
                tally.inconclusive++;
            } else if (r.success()) {
                tally.successes++;
                tally.successes_by_truth[r.truth - 1]++;
            } else {
                tally.errors++;
            }
            if (records) {
                (*records)[static_cast<std::size_t>(i)] = std::move(r);
            }
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; t++) {
            pool.emplace_back(work, t);
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    ExperimentReport rep;
    rep.d = dd;
    rep.trials = trials;
    rep.seed = seed;
    rep.threads = threads;
    rep.trials_by_truth.assign(dd, 0);
    rep.successes_by_truth.assign(dd, 0);
    for (const auto &t : tallies) {
        rep.successes += t.successes;
        rep.errors += t.errors;
        rep.inconclusive += t.inconclusive;
        for (int n = 0; n < dd; n++) {
            rep.trials_by_truth[n] += t.by_truth[n];
            rep.successes_by_truth[n] += t.successes_by_truth[n];
        }
    }
    const double total = static_cast<double>(trials);
    rep.success_rate = rep.successes / total;
    rep.error_rate = rep.errors / total;
    rep.inconclusive_rate = rep.inconclusive / total;
    rep.success_ci99 = kZ99 * std::sqrt(rep.success_rate * (1.0 - rep.success_rate) / total);
    rep.expected_success = closed_form_success(dd);
    rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

double success_homogeneity_chi2(const ExperimentReport &report) {
    // 2 x d contingency table: (success, not success) by truth.
    const double p = report.success_rate;
    double chi2 = 0;
    for (int n = 0; n < report.d; n++) {
        const double rows = static_cast<double>(report.trials_by_truth[n]);
        const double s = static_cast<double>(report.successes_by_truth[n]);
        const double expected_s = rows * p;
        const double expected_f = rows * (1.0 - p);
        if (expected_s > 0) {
            chi2 += (s - expected_s) * (s - expected_s) / expected_s;
        }
        if (expected_f > 0) {
            const double f = rows - s;
            chi2 += (f - expected_f) * (f - expected_f) / expected_f;
        }
    }
    return chi2;
}

}  // namespace qid
