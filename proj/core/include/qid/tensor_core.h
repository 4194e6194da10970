#ifndef QID_TENSOR_CORE_H
#define QID_TENSOR_CORE_H

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace qid {

using cd = std::complex<double>;

/// Tolerance for exact-construction checks (norms, overlaps, matrix entries).
inline constexpr double kExactTol = 1e-12;
/// Tolerance for eigenvalue-based checks (PSD, completeness, spectra).
inline constexpr double kEigenTol = 1e-10;
/// Eigenvalues below this magnitude count as zero when computing ranks.
inline constexpr double kRankThreshold = 1e-8;

/// Raised when a computed quantity violates an invariant that holds by construction.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Single-qudit dimension d, which is also the number of reference qudits.
/// The total system is d+1 qudits (probe at position 0) of dimension d^(d+1).
class QuditDim {
   public:
    static constexpr int kMax = 6;

    explicit QuditDim(int d);

    int value() const { return d_; }
    int num_qudits() const { return d_ + 1; }
    std::size_t total_dim() const { return total_; }
    /// Place value of the digit at `position` (0 = probe, most significant).
    std::size_t stride(int position) const;

    friend bool operator==(QuditDim a, QuditDim b) { return a.d_ == b.d_; }

   private:
    int d_;
    std::size_t total_;
};

/// Digits of a basis vector, position 0 first.
struct MultiIndex {
    std::vector<int> digits;
    friend bool operator==(const MultiIndex &, const MultiIndex &) = default;
};

std::size_t encode_index(const MultiIndex &m, QuditDim d);
MultiIndex decode_index(std::size_t flat, QuditDim d);
int digit_at(std::size_t flat, int position, QuditDim d);
int total_excitation(const MultiIndex &m);
std::size_t total_excitation(std::size_t flat, QuditDim d);

class SingleQuditState {
   public:
    /// Throws std::domain_error unless the vector has unit norm.
    explicit SingleQuditState(std::vector<cd> amplitudes);

    static SingleQuditState basis(int d, int k);
    /// Rescales a nonzero vector to unit norm.
    static SingleQuditState normalized(std::vector<cd> amplitudes);

    int dim() const { return static_cast<int>(amps_.size()); }
    cd operator[](int i) const { return amps_[i]; }
    std::span<const cd> amplitudes() const { return amps_; }

   private:
    std::vector<cd> amps_;
};

/// Dense amplitude vector over the full (d+1)-qudit space, flat-index order.
class StateVector {
   public:
    /// Throws std::domain_error on a length mismatch or a non-unit norm.
    StateVector(QuditDim d, std::vector<cd> amplitudes);

    QuditDim dim() const { return dim_; }
    std::size_t size() const { return amps_.size(); }
    cd operator[](std::size_t i) const { return amps_[i]; }
    std::span<const cd> amplitudes() const { return amps_; }
    double norm() const;

   private:
    QuditDim dim_;
    std::vector<cd> amps_;
};

StateVector product_state(std::span<const SingleQuditState> factors);
cd inner_product(const StateVector &a, const StateVector &b);
cd inner_product(std::span<const cd> a, std::span<const cd> b);

}  // namespace qid

#endif
