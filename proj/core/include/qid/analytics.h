#ifndef QID_ANALYTICS_H
#define QID_ANALYTICS_H

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "qid/detection.h"

namespace qid {

/// Row n-1 holds Tr(rho_n Pi_m) for m = 1..d, then Tr(rho_n Pi_?) in the last column.
struct ConfusionMatrix {
    int d;
    Eigen::MatrixXd entries;

    double success(int n) const { return entries(n - 1, n - 1); }
    double inconclusive(int n) const { return entries(n - 1, d); }
    /// Largest Tr(rho_n Pi_m) over m != n, m <= d.
    double max_offdiag() const;
    /// Largest |row sum - 1|.
    double max_row_defect() const;
};

/// Uses Tr(rho_n Pi_m) = scale * sum_k <pi_m^(k)|rho_n|pi_m^(k)>; the
/// inconclusive column is the row complement.
ConfusionMatrix confusion(const Povm &povm, QuditDim d);

/// Equal-prior success probability (1/d) sum_n Tr(rho_n Pi_n).
double success_probability(const Povm &povm, QuditDim d);

/// Success probability from diagonal coefficients alone:
/// d^-(d+2) sum_k sum_n alpha[n-1][k].
double success_from_coefficients(int d, const std::vector<std::vector<double>> &alpha);
double success_from_coefficients(const Povm &povm);

/// sum_i <i|_0 <k|_n P^sym_{0,n} |k'>_n |i>_0, evaluated on the built projector.
double compute_R(QuditDim d, int k, int k_prime, int n = 1);

/// 1/((d+1) d^(d-1)).
double closed_form_success(int d);

struct CheckResult {
    std::string name;
    bool passed;
    double value;
    double tolerance;
};

/// Full consistency audit of build_povm(d) for d <= 4.
struct VerificationReport {
    int d = 0;
    double p_succ = 0;
    double p_succ_closed_form = 0;
    double p_succ_coefficient_route = 0;
    double max_offdiag = 0;
    double max_rho_pi_residual = 0;
    double completeness_residual = 0;
    double min_eig_pi_unknown = 0;
    double max_gram_deviation = 0;
    bool gram_ok = false;
    std::vector<double> detection_spectrum;  // distinct eigenvalues of sum_n Pi_n
    std::vector<CheckResult> checks;

    bool ok() const;
    std::vector<std::string> failed() const;
};

VerificationReport verify_povm(QuditDim d);

/// Largest deviation of the same-k Gram matrix of {pi_n^(k)} from 1 / -1/d
/// and of cross-k overlaps from 0.
double gram_deviation(const Povm &povm);

/// Largest ||rho_m |pi_n^(k)>|| over m != n and all k.
double max_rho_pi_residual(QuditDim d);

/// Groups sorted eigenvalues into clusters closer than tol; returns (value, multiplicity).
std::vector<std::pair<double, int>> cluster_spectrum(const std::vector<double> &sorted, double tol);

}  // namespace qid

#endif
