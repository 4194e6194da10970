#ifndef QID_STATE_OPS_H
#define QID_STATE_OPS_H

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <cstdint>
#include <vector>

#include "qid/tensor_core.h"

namespace qid {

/// Hermitian operator on the full (d+1)-qudit space, stored sparse.
/// Construction rejects matrices that are not Hermitian within kExactTol.
class HermitianOperator {
   public:
    using Sparse = Eigen::SparseMatrix<cd, Eigen::RowMajor>;

    HermitianOperator(QuditDim d, Sparse matrix);

    QuditDim dim() const { return dim_; }
    std::size_t size() const { return static_cast<std::size_t>(matrix_.rows()); }
    const Sparse &matrix() const { return matrix_; }
    bool hermitian() const { return true; }

    cd entry(std::size_t row, std::size_t col) const;
    cd trace() const;
    std::size_t nonzeros() const { return static_cast<std::size_t>(matrix_.nonZeros()); }

    Eigen::VectorXcd apply(std::span<const cd> v) const;
    /// <v|A|v> for a vector of matching length; the imaginary part is dropped.
    double expectation(std::span<const cd> v) const;

    /// Tr(A B) for Hermitian A, B: sum_ij A_ij conj(B_ij).
    double trace_product(const HermitianOperator &other) const;

    Eigen::MatrixXcd to_dense() const;

   private:
    QuditDim dim_;
    Sparse matrix_;
};

/// Projector onto the antisymmetric subspace of qudits (0, n), identity elsewhere.
HermitianOperator build_asym_projector(QuditDim d, int n);
/// Projector onto the symmetric subspace of qudits (0, n), identity elsewhere.
HermitianOperator build_sym_projector(QuditDim d, int n);
/// Averaged density operator for "probe equals reference n":
/// 2/((d+1) d^d) times the symmetric projector on (0, n).
HermitianOperator build_rho(QuditDim d, int n);
double rho_prefactor(QuditDim d);

/// Applies the (0, n) symmetric projector without materializing it.
std::vector<cd> apply_sym_projector(QuditDim d, int n, std::span<const cd> v);

/// Max entrywise deviation between the sample mean of |Psi_n><Psi_n| over
/// Haar-random reference states and build_rho(d, n).
double haar_average_check(QuditDim d, int n, long samples, uint64_t seed);

/// Ascending eigenvalues of a dense Hermitian matrix.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd &m);
std::vector<double> hermitian_eigenvalues(const HermitianOperator &op);
/// Number of eigenvalues with |lambda| < threshold.
int count_null(const std::vector<double> &eigenvalues, double threshold = kRankThreshold);

}  // namespace qid

#endif
