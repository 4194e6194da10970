#include "qid/detection.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qid {

namespace {

void require_reference(QuditDim d, int n) {
    if (n < 1 || n > d.value()) {
        throw std::out_of_range("reference index n=" + std::to_string(n) + " must be in [1, " +
                                std::to_string(d.value()) + "]");
    }
}

int permutation_sign(const std::vector<int> &p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); i++) {
        for (std::size_t j = i + 1; j < p.size(); j++) {
            inversions += p[i] > p[j];
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

double factorial(int k) {
    double f = 1;
    for (int i = 2; i <= k; i++) {
        f *= i;
    }
    return f;
}

void check_factors(QuditDim d, std::span<const SingleQuditState> factors) {
    if (factors.size() != static_cast<std::size_t>(d.num_qudits())) {
        throw std::domain_error("expected d+1 = " + std::to_string(d.num_qudits()) + " factors");
    }
    for (const auto &f : factors) {
        if (f.dim() != d.value()) {
            throw std::domain_error("factor dimension does not match d");
        }
    }
}

}  // namespace

std::vector<int> phi_slots(QuditDim d, int n) {
    require_reference(d, n);
    std::vector<int> slots;
    for (int q = 0; q <= d.value(); q++) {
        if (q != n) {
            slots.push_back(q);
        }
    }
    return slots;
}

StateVector build_phi(QuditDim d, int n) {
    auto slots = phi_slots(d, n);
    std::vector<std::size_t> strides;
    for (int q : slots) {
        strides.push_back(d.stride(q));
    }
    const double norm = (n % 2 == 0 ? 1.0 : -1.0) / std::sqrt(factorial(d.value()));

    std::vector<cd> amps(d.total_dim());
    std::vector<int> values(d.value());
    std::iota(values.begin(), values.end(), 0);
    do {
        std::size_t flat = 0;
        for (std::size_t s = 0; s < slots.size(); s++) {
            flat += static_cast<std::size_t>(values[s]) * strides[s];
        }
        amps[flat] = norm * permutation_sign(values);
    } while (std::next_permutation(values.begin(), values.end()));
    return StateVector(d, std::move(amps));
}

StateVector build_pi(QuditDim d, int n, int k) {
    if (k < 0 || k >= d.value()) {
        throw std::out_of_range("excitation label k=" + std::to_string(k) + " out of range");
    }
    StateVector phi = build_phi(d, n);
    const std::size_t shift = static_cast<std::size_t>(k) * d.stride(n);
    std::vector<cd> amps(d.total_dim());
    for (std::size_t i = 0; i < phi.size(); i++) {
        if (phi[i] != 0.0) {
            amps[i + shift] = phi[i];
        }
    }
    return StateVector(d, std::move(amps));
}

double LowRankPovmElement::trace_with(const HermitianOperator &a) const {
    double t = 0;
    for (const auto &v : vectors) {
        t += a.expectation(v.amplitudes());
    }
    return scale * t;
}

double LowRankPovmElement::expectation(const StateVector &psi) const {
    double t = 0;
    for (const auto &v : vectors) {
        t += std::norm(inner_product(v, psi));
    }
    return scale * t;
}

Eigen::MatrixXcd LowRankPovmElement::to_dense() const {
    const auto dim = static_cast<Eigen::Index>(vectors.front().size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &v : vectors) {
        Eigen::Map<const Eigen::VectorXcd> x(v.amplitudes().data(), dim);
        m += scale * x * x.adjoint();
    }
    return m;
}

double optimal_scale(int d) { return static_cast<double>(d) / (d + 1.0); }

HermitianOperator sum_detection_operators(const Povm &povm) {
    std::vector<Eigen::Triplet<cd>> triplets;
    for (const auto &e : povm.elements) {
        for (const auto &v : e.vectors) {
            std::vector<std::size_t> support;
            for (std::size_t i = 0; i < v.size(); i++) {
                if (v[i] != 0.0) {
                    support.push_back(i);
                }
            }
            for (std::size_t r : support) {
                for (std::size_t c : support) {
                    triplets.emplace_back(r, c, e.scale * v[r] * std::conj(v[c]));
                }
            }
        }
    }
    const auto dim = povm.dim.total_dim();
    HermitianOperator::Sparse m(dim, dim);
    m.setFromTriplets(triplets.begin(), triplets.end());
    m.prune(cd(0.0), 0.0);
    return HermitianOperator(povm.dim, std::move(m));
}

Povm build_povm(QuditDim d) {
    Povm povm{d, optimal_scale(d.value()), {}, std::nullopt};
    for (int n = 1; n <= d.value(); n++) {
        LowRankPovmElement e{n, povm.scale, {}};
        for (int k = 0; k < d.value(); k++) {
            e.vectors.push_back(build_pi(d, n, k));
        }
        povm.elements.push_back(std::move(e));
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

cd overlap_with_product(QuditDim d, int n, std::span<const SingleQuditState> factors) {
    check_factors(d, factors);
    auto slots = phi_slots(d, n);
    const int dd = d.value();
    Eigen::MatrixXcd m(dd, dd);
    for (int s = 0; s < dd; s++) {
        for (int v = 0; v < dd; v++) {
            m(s, v) = factors[slots[s]][v];
        }
    }
    // phi_n has real amplitudes, so no conjugation is needed on its side.
    const double norm = (n % 2 == 0 ? 1.0 : -1.0) / std::sqrt(factorial(dd));
    return norm * m.determinant();
}

std::vector<cd> pi_overlaps_with_product(QuditDim d, int n, std::span<const SingleQuditState> factors) {
    cd phi = overlap_with_product(d, n, factors);
    std::vector<cd> out(d.value());
    for (int k = 0; k < d.value(); k++) {
        out[k] = factors[n][k] * phi;
    }
    return out;
}

}  // namespace qid
