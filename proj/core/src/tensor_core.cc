#include "qid/tensor_core.h"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace qid {

namespace {

double squared_norm(std::span<const cd> v) {
    double s = 0;
    for (const auto &a : v) {
        s += std::norm(a);
    }
    return s;
}

void require_unit_norm(std::span<const cd> v, const char *what) {
    double n = std::sqrt(squared_norm(v));
    if (!(std::abs(n - 1.0) <= kExactTol)) {
        throw std::domain_error(std::string(what) + ": norm " + std::to_string(n) + " is not 1");
    }
}

}  // namespace

QuditDim::QuditDim(int d) : d_(d), total_(1) {
    if (d < 2 || d > kMax) {
        throw std::domain_error("qudit dimension must be in [2, " + std::to_string(kMax) + "], got " +
                                std::to_string(d));
    }
    for (int i = 0; i <= d; i++) {
        if (total_ > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(d)) {
            throw std::domain_error("total dimension overflows size_t");
        }
        total_ *= static_cast<std::size_t>(d);
    }
}

std::size_t QuditDim::stride(int position) const {
    if (position < 0 || position > d_) {
        throw std::out_of_range("qudit position " + std::to_string(position) + " out of range");
    }
    std::size_t s = 1;
    for (int i = position; i < d_; i++) {
        s *= static_cast<std::size_t>(d_);
    }
    return s;
}

std::size_t encode_index(const MultiIndex &m, QuditDim d) {
    if (m.digits.size() != static_cast<std::size_t>(d.num_qudits())) {
        throw std::domain_error("multi-index must have d+1 digits");
    }
    std::size_t flat = 0;
    for (int digit : m.digits) {
        if (digit < 0 || digit >= d.value()) {
            throw std::domain_error("digit " + std::to_string(digit) + " out of range for d=" +
                                    std::to_string(d.value()));
        }
        flat = flat * static_cast<std::size_t>(d.value()) + static_cast<std::size_t>(digit);
    }
    return flat;
}

MultiIndex decode_index(std::size_t flat, QuditDim d) {
    if (flat >= d.total_dim()) {
        throw std::domain_error("flat index out of range");
    }
    MultiIndex m;
    m.digits.resize(d.num_qudits());
    auto base = static_cast<std::size_t>(d.value());
    for (int j = d.value(); j >= 0; j--) {
        m.digits[j] = static_cast<int>(flat % base);
        flat /= base;
    }
    return m;
}

int digit_at(std::size_t flat, int position, QuditDim d) {
    return static_cast<int>((flat / d.stride(position)) % static_cast<std::size_t>(d.value()));
}

int total_excitation(const MultiIndex &m) {
    return std::accumulate(m.digits.begin(), m.digits.end(), 0);
}

std::size_t total_excitation(std::size_t flat, QuditDim d) {
    std::size_t sum = 0;
    auto base = static_cast<std::size_t>(d.value());
    for (int j = 0; j <= d.value(); j++) {
        sum += flat % base;
        flat /= base;
    }
    return sum;
}

SingleQuditState::SingleQuditState(std::vector<cd> amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() < 2) {
        throw std::domain_error("single-qudit state needs at least 2 amplitudes");
    }
    require_unit_norm(amps_, "single-qudit state");
}

SingleQuditState SingleQuditState::basis(int d, int k) {
    if (k < 0 || k >= d) {
        throw std::domain_error("basis label out of range");
    }
    std::vector<cd> v(d);
    v[k] = 1.0;
    return SingleQuditState(std::move(v));
}

SingleQuditState SingleQuditState::normalized(std::vector<cd> amplitudes) {
    double n = std::sqrt(squared_norm(amplitudes));
    if (n == 0) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    for (auto &a : amplitudes) {
        a /= n;
    }
    return SingleQuditState(std::move(amplitudes));
}

StateVector::StateVector(QuditDim d, std::vector<cd> amplitudes) : dim_(d), amps_(std::move(amplitudes)) {
    if (amps_.size() != d.total_dim()) {
        throw std::domain_error("state vector length " + std::to_string(amps_.size()) + " != " +
                                std::to_string(d.total_dim()));
    }
    require_unit_norm(amps_, "state vector");
}

double StateVector::norm() const { return std::sqrt(squared_norm(amps_)); }

StateVector product_state(std::span<const SingleQuditState> factors) {
    if (factors.empty()) {
        throw std::domain_error("product_state needs d+1 factors");
    }
    int d = factors[0].dim();
    QuditDim dim(d);
    if (factors.size() != static_cast<std::size_t>(dim.num_qudits())) {
        throw std::domain_error("product_state needs exactly d+1 = " + std::to_string(d + 1) + " factors, got " +
                                std::to_string(factors.size()));
    }
    for (const auto &f : factors) {
        if (f.dim() != d) {
            throw std::domain_error("product_state factor dimension mismatch");
        }
    }
    // Kronecker product, probe (factor 0) most significant.
    std::vector<cd> amps{1.0};
    for (const auto &f : factors) {
        std::vector<cd> next;
        next.reserve(amps.size() * d);
        for (const auto &a : amps) {
            for (int v = 0; v < d; v++) {
                next.push_back(a * f[v]);
            }
        }
        amps = std::move(next);
    }
    return StateVector(dim, std::move(amps));
}

cd inner_product(std::span<const cd> a, std::span<const cd> b) {
    if (a.size() != b.size()) {
        throw std::domain_error("inner_product dimension mismatch");
    }
    cd s = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

cd inner_product(const StateVector &a, const StateVector &b) {
    if (!(a.dim() == b.dim())) {
        throw std::domain_error("inner_product dimension mismatch");
    }
    return inner_product(a.amplitudes(), b.amplitudes());
}

}  // namespace qid
