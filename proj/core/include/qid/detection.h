#ifndef QID_DETECTION_H
#define QID_DETECTION_H

#include <optional>
#include <span>
#include <vector>

#include "qid/state_ops.h"
#include "qid/tensor_core.h"

namespace qid {

/// Completely antisymmetric state of the d qudits other than reference n.
///
/// Slots are the qudit labels {0..d} \ {n} in ascending order. The amplitude
/// of the basis state that places value sigma(s) on slot s is
/// (-1)^n sgn(sigma) / sqrt(d!), with the sign taken relative to the
/// assignment of value v to the v-th slot. Qudit n carries digit 0.
StateVector build_phi(QuditDim d, int n);

/// |k>_n tensor |phi_n>: build_phi with qudit n's digit moved to k.
StateVector build_pi(QuditDim d, int n, int k);

/// Qudit labels of the d slots that carry the antisymmetric part of |phi_n>.
std::vector<int> phi_slots(QuditDim d, int n);

/// Pi_n = scale * sum_k |pi_n^(k)><pi_n^(k)|.
struct LowRankPovmElement {
    int n;
    double scale;
    std::vector<StateVector> vectors;

    /// Tr(A Pi_n) through the low-rank form.
    double trace_with(const HermitianOperator &a) const;
    /// <psi|Pi_n|psi>.
    double expectation(const StateVector &psi) const;
    Eigen::MatrixXcd to_dense() const;
};

struct Povm {
    QuditDim dim;
    double scale;
    std::vector<LowRankPovmElement> elements;
    /// I - sum_n Pi_n, only materialized for d <= kMaxDenseD.
    std::optional<HermitianOperator> inconclusive;

    static constexpr int kMaxDenseD = 4;

    const LowRankPovmElement &element(int n) const { return elements.at(static_cast<std::size_t>(n - 1)); }
};

/// Largest uniform coefficient allowed by sum_n Pi_n <= I: d/(d+1).
double optimal_scale(int d);

/// Optimal unambiguous-identification POVM for d unknown qudit states.
Povm build_povm(QuditDim d);

/// Sum of the d detection operators as a sparse Hermitian operator.
HermitianOperator sum_detection_operators(const Povm &povm);

/// <phi_n| (tensor over slots of chi_j)>, where chi_j = factors[j] for the
/// d slot qudits (factors[n] is ignored). Computed as
/// (-1)^n / sqrt(d!) * det(M), M[s][v] = chi_{slot s}(v), in O(d^3).
cd overlap_with_product(QuditDim d, int n, std::span<const SingleQuditState> factors);

/// <pi_n^(k)|Psi> for k = 0..d-1 with Psi the product of the d+1 factors.
std::vector<cd> pi_overlaps_with_product(QuditDim d, int n, std::span<const SingleQuditState> factors);

}  // namespace qid

#endif
