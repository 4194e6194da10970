#include "qid/sym_optimizer.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace qid {

namespace {

std::complex<double> root_of_unity(long numerator, int d) {
    // Reduce first so large n*l products keep full phase precision.
    long r = ((numerator % d) + d) % d;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / d);
}

double lambda_max(const Eigen::MatrixXcd &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(solver.eigenvalues().size() - 1);
}

struct Candidate {
    long sum = -1;  // in grid units
    std::vector<int> steps;

    bool better_than(const Candidate &o) const {
        if (sum != o.sum) {
            return sum > o.sum;
        }
        return steps < o.steps;
    }
};

}  // namespace

Eigen::MatrixXcd SymmetricFamily::gram() const {
    Eigen::MatrixXcd g(d, d);
    for (int m = 0; m < d; m++) {
        for (int n = 0; n < d; n++) {
            g(m, n) = vectors[m].dot(vectors[n]);
        }
    }
    return g;
}

Eigen::MatrixXcd SymmetricFamily::weighted_sum(const std::vector<double> &alpha) const {
    if (alpha.size() != vectors.size()) {
        throw std::domain_error("need one weight per family vector");
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (std::size_t n = 0; n < vectors.size(); n++) {
        m += alpha[n] * vectors[n] * vectors[n].adjoint();
    }
    return m;
}

SymmetricFamily build_symmetric_family(int d) {
    if (d < 2) {
        throw std::domain_error("symmetric family needs d >= 2");
    }
    SymmetricFamily fam{d, {}};
    const double tail = std::sqrt(d + 1.0) / d;
    for (int n = 1; n <= d; n++) {
        Eigen::VectorXcd v(d);
        v(0) = 1.0 / d;
        for (int l = 1; l < d; l++) {
            v(l) = tail * root_of_unity(static_cast<long>(n) * l, d);
        }
        fam.vectors.push_back(std::move(v));
    }
    return fam;
}

Eigen::MatrixXcd covariance_unitary(int d) {
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(d, d);
    for (int l = 0; l < d; l++) {
        u(l, l) = root_of_unity(l, d);
    }
    return u;
}

EigenOptimum optimal_alpha_eigen(const SymmetricFamily &family) {
    std::vector<double> ones(family.d, 1.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(family.weighted_sum(ones), Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    EigenOptimum out;
    out.spectrum.assign(ev.data(), ev.data() + ev.size());
    out.alpha_opt = 1.0 / out.spectrum.back();
    out.s_opt = family.d * out.alpha_opt;
    return out;
}

bool is_feasible(const SymmetricFamily &family, const std::vector<double> &alpha) {
    return lambda_max(family.weighted_sum(alpha)) <= 1.0 + kFeasibilityTol;
}

GridOptimum brute_force_alpha(const SymmetricFamily &family, double resolution, unsigned threads) {
    if (!(resolution > 0.0 && resolution <= 0.1)) {
        throw std::domain_error("resolution must lie in (0, 0.1]");
    }
    if (family.d > 3) {
        throw std::domain_error("grid search is limited to d <= 3");
    }
    const int d = family.d;
    const int steps = static_cast<int>(std::floor(1.0 / resolution + 1e-9));
    const int per_axis = steps + 1;
    long total = 1;
    for (int i = 0; i < d; i++) {
        total *= per_axis;
    }
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(per_axis)));

    struct Partial {
        Candidate best;
        long evaluated = 0;
        long feasible = 0;
    };
    std::vector<Partial> partials(threads);

    // Chunks split on the first coordinate; each worker scans its indices in
    // lexicographic order and the merge applies the same total order.
    auto work = [&](unsigned t) {
        Partial &p = partials[t];
        std::vector<int> idx(d);
        std::vector<double> alpha(d);
        for (long flat = 0; flat < total; flat++) {
            long rem = flat;
            for (int j = d - 1; j >= 0; j--) {
                idx[j] = static_cast<int>(rem % per_axis);
                rem /= per_axis;
            }
            if (static_cast<unsigned>(idx[0]) % threads != t) {
                continue;
            }
            for (int j = 0; j < d; j++) {
                alpha[j] = idx[j] * resolution;
            }
            p.evaluated++;
            if (!is_feasible(family, alpha)) {
                continue;
            }
            p.feasible++;
            Candidate c{0, idx};
            for (int s : idx) {
                c.sum += s;
            }
            if (c.better_than(p.best)) {
                p.best = std::move(c);
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

    GridOptimum out{{}, 0, 0, 0};
    Candidate best;
    for (const auto &p : partials) {
        out.evaluated += p.evaluated;
        out.feasible += p.feasible;
        if (p.best.sum >= 0 && p.best.better_than(best)) {
            best = p.best;
        }
    }
    for (int s : best.steps) {
        out.alpha.push_back(s * resolution);
    }
    out.s = best.sum * resolution;
    return out;
}

}  // namespace qid
