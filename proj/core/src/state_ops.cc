#include "qid/state_ops.h"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "qid/rng.h"

namespace qid {

namespace {

using Triplet = Eigen::Triplet<cd>;

void require_reference(QuditDim d, int n) {
    if (n < 1 || n > d.value()) {
        throw std::out_of_range("reference index n=" + std::to_string(n) + " must be in [1, " +
                                std::to_string(d.value()) + "]");
    }
}

/// Builds c_same * (|ij><ij|) + c_swap * (|ij><ji|) on qudits (0, n) for all
/// i != j, plus c_diag * |ii><ii|, tensored with identity on the spectators.
/// The symmetric projector is (1/2, +1/2, 1), the antisymmetric (1/2, -1/2, 0).
HermitianOperator build_pair_operator(QuditDim d, int n, double c_same, double c_swap, double c_diag) {
    require_reference(d, n);
    const std::size_t s0 = d.stride(0);
    const std::size_t sn = d.stride(n);
    std::vector<Triplet> triplets;
    triplets.reserve(2 * d.total_dim());
    for (std::size_t row = 0; row < d.total_dim(); row++) {
        auto i = static_cast<std::size_t>(digit_at(row, 0, d));
        auto j = static_cast<std::size_t>(digit_at(row, n, d));
        if (i == j) {
            if (c_diag != 0) {
                triplets.emplace_back(row, row, c_diag);
            }
            continue;
        }
        std::size_t swapped = row - i * s0 - j * sn + j * s0 + i * sn;
        triplets.emplace_back(row, row, c_same);
        triplets.emplace_back(row, swapped, c_swap);
    }
    HermitianOperator::Sparse m(d.total_dim(), d.total_dim());
    m.setFromTriplets(triplets.begin(), triplets.end());
    return HermitianOperator(d, std::move(m));
}

}  // namespace

HermitianOperator::HermitianOperator(QuditDim d, Sparse matrix) : dim_(d), matrix_(std::move(matrix)) {
    if (static_cast<std::size_t>(matrix_.rows()) != d.total_dim() ||
        static_cast<std::size_t>(matrix_.cols()) != d.total_dim()) {
        throw std::domain_error("operator shape does not match d^(d+1)");
    }
    matrix_.makeCompressed();
    Sparse adjoint = matrix_.adjoint();
    Sparse diff = matrix_ - adjoint;
    for (Eigen::Index k = 0; k < diff.outerSize(); k++) {
        for (Sparse::InnerIterator it(diff, k); it; ++it) {
            if (std::abs(it.value()) > kExactTol) {
                throw std::domain_error("operator is not Hermitian");
            }
        }
    }
}

cd HermitianOperator::entry(std::size_t row, std::size_t col) const {
    return matrix_.coeff(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
}

cd HermitianOperator::trace() const {
    cd t = 0;
    for (Eigen::Index k = 0; k < matrix_.outerSize(); k++) {
        t += matrix_.coeff(k, k);
    }
    return t;
}

Eigen::VectorXcd HermitianOperator::apply(std::span<const cd> v) const {
    if (v.size() != size()) {
        throw std::domain_error("operator/vector dimension mismatch");
    }
    Eigen::Map<const Eigen::VectorXcd> x(v.data(), static_cast<Eigen::Index>(v.size()));
    return matrix_ * x;
}

double HermitianOperator::expectation(std::span<const cd> v) const {
    Eigen::Map<const Eigen::VectorXcd> x(v.data(), static_cast<Eigen::Index>(v.size()));
    return x.dot(apply(v)).real();
}

double HermitianOperator::trace_product(const HermitianOperator &other) const {
    if (other.size() != size()) {
        throw std::domain_error("operator dimension mismatch");
    }
    return matrix_.cwiseProduct(other.matrix_.conjugate()).sum().real();
}

Eigen::MatrixXcd HermitianOperator::to_dense() const { return Eigen::MatrixXcd(matrix_); }

HermitianOperator build_asym_projector(QuditDim d, int n) { return build_pair_operator(d, n, 0.5, -0.5, 0.0); }

HermitianOperator build_sym_projector(QuditDim d, int n) { return build_pair_operator(d, n, 0.5, 0.5, 1.0); }

double rho_prefactor(QuditDim d) {
    double dd = d.value();
    return 2.0 / ((dd + 1.0) * std::pow(dd, dd));
}

HermitianOperator build_rho(QuditDim d, int n) {
    double c = rho_prefactor(d);
    return build_pair_operator(d, n, 0.5 * c, 0.5 * c, c);
}

std::vector<cd> apply_sym_projector(QuditDim d, int n, std::span<const cd> v) {
    require_reference(d, n);
    if (v.size() != d.total_dim()) {
        throw std::domain_error("vector length does not match d^(d+1)");
    }
    const std::size_t s0 = d.stride(0);
    const std::size_t sn = d.stride(n);
    std::vector<cd> out(v.size());
    for (std::size_t idx = 0; idx < v.size(); idx++) {
        auto i = static_cast<std::size_t>(digit_at(idx, 0, d));
        auto j = static_cast<std::size_t>(digit_at(idx, n, d));
        std::size_t swapped = idx - i * s0 - j * sn + j * s0 + i * sn;
        out[idx] = 0.5 * (v[idx] + v[swapped]);
    }
    return out;
}

double haar_average_check(QuditDim d, int n, long samples, uint64_t seed) {
    require_reference(d, n);
    if (samples < 1) {
        throw std::domain_error("haar_average_check needs at least one sample");
    }
    const auto dim = static_cast<Eigen::Index>(d.total_dim());
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
    for (long s = 0; s < samples; s++) {
        RngStream stream(seed, static_cast<uint64_t>(s));
        std::vector<SingleQuditState> factors;
        factors.reserve(d.num_qudits());
        for (int r = 1; r <= d.value(); r++) {
            factors.push_back(sample_haar(d.value(), stream));
        }
        SingleQuditState probe = factors[n - 1];
        factors.insert(factors.begin(), std::move(probe));
        StateVector psi = product_state(factors);
        Eigen::Map<const Eigen::VectorXcd> v(psi.amplitudes().data(), dim);
        acc.selfadjointView<Eigen::Lower>().rankUpdate(v);
    }
    Eigen::MatrixXcd mean = acc.selfadjointView<Eigen::Lower>();
    mean /= static_cast<double>(samples);
    return (mean - build_rho(d, n).to_dense()).cwiseAbs().maxCoeff();
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw ConsistencyError("Hermitian eigensolver did not converge");
    }
    const auto &ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> hermitian_eigenvalues(const HermitianOperator &op) { return hermitian_eigenvalues(op.to_dense()); }

int count_null(const std::vector<double> &eigenvalues, double threshold) {
    int c = 0;
    for (double x : eigenvalues) {
        if (std::abs(x) < threshold) {
            c++;
        }
    }
    return c;
}

}  // namespace qid
