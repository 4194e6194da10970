#ifndef QID_SYM_OPTIMIZER_H
#define QID_SYM_OPTIMIZER_H

#include <Eigen/Dense>
#include <vector>

namespace qid {

/// d unit vectors in C^d with pairwise overlap -1/d, written in an
/// orthonormal basis {u_0..u_{d-1}}:
///   pi_n = u_0/d + sqrt(d+1)/d * sum_{l>=1} exp(2 pi i n l / d) u_l.
/// vectors[n-1] holds pi_n.
struct SymmetricFamily {
    int d;
    std::vector<Eigen::VectorXcd> vectors;

    Eigen::MatrixXcd gram() const;
    /// sum_n alpha[n-1] |pi_n><pi_n|.
    Eigen::MatrixXcd weighted_sum(const std::vector<double> &alpha) const;
};

SymmetricFamily build_symmetric_family(int d);

/// U = sum_l exp(2 pi i l / d) |u_l><u_l|; maps pi_n to pi_{n+1} cyclically.
Eigen::MatrixXcd covariance_unitary(int d);

struct EigenOptimum {
    double alpha_opt;
    double s_opt;
    /// Ascending eigenvalues of sum_n |pi_n><pi_n|.
    std::vector<double> spectrum;
};

/// The largest uniform alpha with alpha * sum_n |pi_n><pi_n| <= I is 1/lambda_max.
EigenOptimum optimal_alpha_eigen(const SymmetricFamily &family);

struct GridOptimum {
    std::vector<double> alpha;
    double s;
    long evaluated;
    long feasible;
};

/// Feasibility slack on lambda_max; boundary points count as feasible.
inline constexpr double kFeasibilityTol = 1e-10;

bool is_feasible(const SymmetricFamily &family, const std::vector<double> &alpha);

/// Exhaustive search over alpha_n in {0, r, 2r, ...} <= 1 maximizing sum alpha_n
/// subject to sum_n alpha_n |pi_n><pi_n| <= I. Ties go to the lexicographically
/// smallest alpha. The result does not depend on `threads`.
/// Throws std::domain_error when resolution is outside (0, 0.1] or d > 3.
GridOptimum brute_force_alpha(const SymmetricFamily &family, double resolution, unsigned threads = 1);

}  // namespace qid

#endif
