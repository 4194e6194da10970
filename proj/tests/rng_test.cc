#include "qid/rng.h"

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.h"

using namespace qid;

// Known-answer vectors published with Random123 (kat_vectors, philox4x32 R=10).
TEST(rng, philox_known_answers) {
    auto zero = philox4x32({0, 0, 0, 0}, {0, 0});
    EXPECT_EQ(zero, (std::array<uint32_t, 4>{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
    auto ones = philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff});
    EXPECT_EQ(ones, (std::array<uint32_t, 4>{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
    auto pi = philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0});
    EXPECT_EQ(pi, (std::array<uint32_t, 4>{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(rng, streams_are_keyed_by_seed_and_id) {
    RngStream a(7, 3), b(7, 3);
    for (int i = 0; i < 100; i++) {
        ASSERT_EQ(a.next_u64(), b.next_u64());
    }
    RngStream base(7, 3), other_id(7, 4), other_seed(8, 3);
    uint64_t x = base.next_u64();
    EXPECT_NE(x, other_id.next_u64());
    EXPECT_NE(x, other_seed.next_u64());
}

TEST(rng, uniform_and_normal_moments) {
    RngStream s(1, 0);
    const int n = 200000;
    double sum = 0, sum2 = 0, nsum = 0, nsum2 = 0;
    for (int i = 0; i < n; i++) {
        double u = s.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
        sum2 += u * u;
        double g = s.normal();
        nsum += g;
        nsum2 += g * g;
    }
    EXPECT_NEAR(sum / n, 0.5, 0.005);
    EXPECT_NEAR(sum2 / n - 0.25, 1.0 / 12, 0.005);
    EXPECT_NEAR(nsum / n, 0.0, 0.01);
    EXPECT_NEAR(nsum2 / n, 1.0, 0.02);
}

TEST(rng, below_is_in_range_and_roughly_uniform) {
    RngStream s(2, 0);
    std::array<int, 3> counts{};
    for (int i = 0; i < 30000; i++) {
        auto x = s.below(3);
        ASSERT_LT(x, 3u);
        counts[x]++;
    }
    for (int c : counts) {
        EXPECT_NEAR(c, 10000, 500);
    }
}

TEST(rng, sample_haar_norm) {
    RngStream s(3, 0);
    for (int d : {2, 3, 4, 5}) {
        for (int i = 0; i < 100; i++) {
            auto psi = sample_haar(d, s);
            double n = 0;
            for (int k = 0; k < d; k++) {
                n += std::norm(psi[k]);
            }
            ASSERT_NEAR(std::sqrt(n), 1.0, kExactTol);
        }
    }
}

TEST(rng, sample_haar_first_moment) {
    for (int d : {2, 3, 4}) {
        RngStream s(10 + d, 0);
        const int samples = 100000;
        std::vector<double> mean(d, 0.0);
        for (int i = 0; i < samples; i++) {
            auto psi = sample_haar(d, s);
            for (int k = 0; k < d; k++) {
                mean[k] += std::norm(psi[k]) / samples;
            }
        }
        for (double m : mean) {
            EXPECT_NEAR(m, 1.0 / d, 0.01);
        }
    }
}

// E[|psi><psi| (x) |psi><psi|] = 2 P^sym / (d (d+1)) on two qudits.
TEST(rng, sample_haar_second_moment) {
    for (int d : {2, 3}) {
        RngStream s(20 + d, 0);
        const int samples = 100000;
        const int dim = d * d;
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
        for (int i = 0; i < samples; i++) {
            auto psi = sample_haar(d, s);
            Eigen::VectorXcd v(dim);
            for (int a = 0; a < d; a++) {
                for (int b = 0; b < d; b++) {
                    v(a * d + b) = psi[a] * psi[b];
                }
            }
            acc += v * v.adjoint();
        }
        acc /= samples;
        Eigen::MatrixXd swap = Eigen::MatrixXd::Zero(dim, dim);
        for (int a = 0; a < d; a++) {
            for (int b = 0; b < d; b++) {
                swap(b * d + a, a * d + b) = 1.0;
            }
        }
        Eigen::MatrixXcd expected =
            (2.0 / (d * (d + 1.0))) * (0.5 * (Eigen::MatrixXd::Identity(dim, dim) + swap)).cast<cd>();
        EXPECT_LT((acc - expected).cwiseAbs().maxCoeff(), 0.01);
    }
}
