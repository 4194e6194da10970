#include "qid/analytics.h"

#include <algorithm>
#include <cmath>

namespace qid {

double ConfusionMatrix::max_offdiag() const {
    double worst = 0;
    for (int n = 0; n < d; n++) {
        for (int m = 0; m < d; m++) {
            if (m != n) {
                worst = std::max(worst, std::abs(entries(n, m)));
            }
        }
    }
    return worst;
}

double ConfusionMatrix::max_row_defect() const {
    double worst = 0;
    for (int n = 0; n < d; n++) {
        worst = std::max(worst, std::abs(entries.row(n).sum() - 1.0));
    }
    return worst;
}

ConfusionMatrix confusion(const Povm &povm, QuditDim d) {
    if (!(povm.dim == d) || povm.elements.size() != static_cast<std::size_t>(d.value())) {
        throw std::domain_error("POVM was built for a different d");
    }
    const int dd = d.value();
    ConfusionMatrix cm{dd, Eigen::MatrixXd::Zero(dd, dd + 1)};
    for (int n = 1; n <= dd; n++) {
        HermitianOperator rho = build_rho(d, n);
        double detected = 0;
        for (int m = 1; m <= dd; m++) {
            cm.entries(n - 1, m - 1) = povm.element(m).trace_with(rho);
            detected += cm.entries(n - 1, m - 1);
        }
        if (povm.inconclusive) {
            // Tr(rho Pi_?) directly, so the row sum stays an independent check.
            cm.entries(n - 1, dd) = rho.trace_product(*povm.inconclusive);
        } else {
            cm.entries(n - 1, dd) = 1.0 - detected;
        }
    }
    return cm;
}

double success_probability(const Povm &povm, QuditDim d) {
    ConfusionMatrix cm = confusion(povm, d);
    return cm.entries.diagonal().sum() / d.value();
}

double success_from_coefficients(int d, const std::vector<std::vector<double>> &alpha) {
    if (alpha.size() != static_cast<std::size_t>(d)) {
        throw std::domain_error("need one coefficient row per detection operator");
    }
    double total = 0;
    for (const auto &row : alpha) {
        if (row.size() != static_cast<std::size_t>(d)) {
            throw std::domain_error("need d coefficients per detection operator");
        }
        for (double a : row) {
            total += a;
        }
    }
    return total / std::pow(static_cast<double>(d), d + 2);
}

double success_from_coefficients(const Povm &povm) {
    const int d = povm.dim.value();
    std::vector<std::vector<double>> alpha;
    for (const auto &e : povm.elements) {
        alpha.emplace_back(e.vectors.size(), e.scale);
    }
    return success_from_coefficients(d, alpha);
}

double compute_R(QuditDim d, int k, int k_prime, int n) {
    if (k < 0 || k >= d.value() || k_prime < 0 || k_prime >= d.value()) {
        throw std::out_of_range("R-matrix label out of range");
    }
    HermitianOperator sym = build_sym_projector(d, n);
    // Spectator qudits fixed to |0>; P^sym acts as identity on them.
    const std::size_t s0 = d.stride(0);
    const std::size_t sn = d.stride(n);
    cd r = 0;
    for (int i = 0; i < d.value(); i++) {
        std::size_t row = i * s0 + static_cast<std::size_t>(k) * sn;
        std::size_t col = i * s0 + static_cast<std::size_t>(k_prime) * sn;
        r += sym.entry(row, col);
    }
    return r.real();
}

double closed_form_success(int d) {
    if (d < 2) {
        throw std::domain_error("closed_form_success needs d >= 2");
    }
    return 1.0 / ((d + 1.0) * std::pow(static_cast<double>(d), d - 1));
}

double gram_deviation(const Povm &povm) {
    const int d = povm.dim.value();
    double worst = 0;
    for (int m = 1; m <= d; m++) {
        for (int n = 1; n <= d; n++) {
            for (int k = 0; k < d; k++) {
                for (int kp = 0; kp < d; kp++) {
                    cd g = inner_product(povm.element(m).vectors[k], povm.element(n).vectors[kp]);
                    double expected = k != kp ? 0.0 : (m == n ? 1.0 : -1.0 / d);
                    worst = std::max(worst, std::abs(g - expected));
                }
            }
        }
    }
    return worst;
}

double max_rho_pi_residual(QuditDim d) {
    double worst = 0;
    for (int n = 1; n <= d.value(); n++) {
        for (int k = 0; k < d.value(); k++) {
            StateVector pi = build_pi(d, n, k);
            for (int m = 1; m <= d.value(); m++) {
                if (m == n) {
                    continue;
                }
                auto v = apply_sym_projector(d, m, pi.amplitudes());
                double norm = 0;
                for (const auto &a : v) {
                    norm += std::norm(a);
                }
                worst = std::max(worst, rho_prefactor(d) * std::sqrt(norm));
            }
        }
    }
    return worst;
}

std::vector<std::pair<double, int>> cluster_spectrum(const std::vector<double> &sorted, double tol) {
    std::vector<std::pair<double, int>> out;
    for (double x : sorted) {
        if (!out.empty() && std::abs(x - out.back().first) <= tol) {
            out.back().second++;
        } else {
            out.emplace_back(x, 1);
        }
    }
    return out;
}

bool VerificationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

std::vector<std::string> VerificationReport::failed() const {
    std::vector<std::string> names;
    for (const auto &c : checks) {
        if (!c.passed) {
            names.push_back(c.name);
        }
    }
    return names;
}

VerificationReport verify_povm(QuditDim d) {
    if (d.value() > Povm::kMaxDenseD) {
        throw std::domain_error("verify_povm needs dense operators; d must be <= 4");
    }
    const int dd = d.value();
    VerificationReport r;
    r.d = dd;
    Povm povm = build_povm(d);
    ConfusionMatrix cm = confusion(povm, d);

    r.p_succ = cm.entries.diagonal().sum() / dd;
    r.p_succ_closed_form = closed_form_success(dd);
    r.p_succ_coefficient_route = success_from_coefficients(povm);
    r.max_offdiag = cm.max_offdiag();
    r.max_rho_pi_residual = max_rho_pi_residual(d);
    r.max_gram_deviation = gram_deviation(povm);
    r.gram_ok = r.max_gram_deviation <= kExactTol;

    const auto dim = static_cast<Eigen::Index>(d.total_dim());
    Eigen::MatrixXcd detect = sum_detection_operators(povm).to_dense();
    Eigen::MatrixXcd unknown = povm.inconclusive->to_dense();
    Eigen::MatrixXcd defect = detect + unknown - Eigen::MatrixXcd::Identity(dim, dim);
    r.completeness_residual = defect.cwiseAbs().maxCoeff();
    r.min_eig_pi_unknown = hermitian_eigenvalues(unknown).front();

    auto spectrum = hermitian_eigenvalues(detect);
    for (const auto &[value, mult] : cluster_spectrum(spectrum, kEigenTol)) {
        (void)mult;
        r.detection_spectrum.push_back(value);
    }
    // Per excitation sector the d vectors have Gram 1 / -1/d, so the scaled
    // sum has eigenvalue 1 (d-1 times) and 1/(d+1) (once), zero elsewhere.
    const double allowed[] = {0.0, 1.0 / (dd + 1.0), 1.0};
    double spectrum_gap = 0;
    for (double x : spectrum) {
        double best = 1e300;
        for (double a : allowed) {
            best = std::min(best, std::abs(x - a));
        }
        spectrum_gap = std::max(spectrum_gap, best);
    }

    r.checks = {
        {"p_succ_closed_form", std::abs(r.p_succ - r.p_succ_closed_form) <= kExactTol,
         std::abs(r.p_succ - r.p_succ_closed_form), kExactTol},
        {"p_succ_coefficient_route", std::abs(r.p_succ - r.p_succ_coefficient_route) <= kExactTol,
         std::abs(r.p_succ - r.p_succ_coefficient_route), kExactTol},
        {"unambiguity_trace", r.max_offdiag <= kExactTol, r.max_offdiag, kExactTol},
        {"unambiguity_kernel", r.max_rho_pi_residual <= kExactTol, r.max_rho_pi_residual, kExactTol},
        {"confusion_rows", cm.max_row_defect() <= kEigenTol, cm.max_row_defect(), kEigenTol},
        {"completeness", r.completeness_residual <= kEigenTol, r.completeness_residual, kEigenTol},
        {"pi_unknown_psd", r.min_eig_pi_unknown >= -kEigenTol, r.min_eig_pi_unknown, -kEigenTol},
        {"gram", r.gram_ok, r.max_gram_deviation, kExactTol},
        {"detection_spectrum", spectrum_gap <= kEigenTol, spectrum_gap, kEigenTol},
    };
    return r;
}

}  // namespace qid
