#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "mgini/estimator.hpp"

using namespace mgini;

namespace {

// Mixed continuous and heavily tied entries.
std::vector<double> random_values(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> kind(0, 3);
    std::exponential_distribution<double> expo(1.0);
    std::uniform_int_distribution<int> small(0, 3);
    const int k = kind(rng);
    std::vector<double> v(n);
    for (auto& x : v) {
        switch (k) {
            case 0: x = expo(rng); break;
            case 1: x = small(rng); break;                      // ties and zeros
            case 2: x = std::round(expo(rng) * 2.0) / 2.0; break;
            default: x = expo(rng) * expo(rng) * 100.0; break;
        }
    }
    if (std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; })) v[0] = 1.0;
    return v;
}

}  // namespace

TEST(Sample, Validation) {
    EXPECT_THROW(Sample({1.0}), std::invalid_argument);
    EXPECT_THROW(Sample({}), std::invalid_argument);
    EXPECT_THROW(Sample({1.0, -0.5}), std::invalid_argument);
    EXPECT_THROW(Sample({1.0, NAN}), std::invalid_argument);
    EXPECT_THROW(Sample({1.0, INFINITY}), std::invalid_argument);
    EXPECT_EQ(Sample({0.0, 2.0}).size(), 2u);
}

TEST(Naive, Examples) {
    EXPECT_EQ(ig_hat_naive(Sample({1, 1, 1, 1}), GiniOrder(2)), 0.0);
    EXPECT_NEAR(ig_hat_naive(Sample({1, 2, 3}), GiniOrder(3)), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(ig_hat_naive(Sample({1, 2, 3}), GiniOrder(2)), 1.0 / 3.0, 1e-15);
}

TEST(Naive, Errors) {
    EXPECT_THROW(ig_hat_naive(Sample({0, 0, 0}), GiniOrder(2)), DegenerateSampleError);
    EXPECT_THROW(ig_hat_naive(Sample({1, 2}), GiniOrder(3)), std::invalid_argument);
    EXPECT_THROW(ig_hat_naive(Sample(std::vector<double>(60, 1.0)), GiniOrder(10)),
                 std::invalid_argument);
}

TEST(Fast, Examples) {
    EXPECT_NEAR(ig_hat_fast(Sample({2, 2, 5}), GiniOrder(2)), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(ig_hat_fast(Sample({1, 2, 3}), GiniOrder(3)), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(ig_hat_fast(Sample({1, 2, 3}), GiniOrder(2)), 1.0 / 3.0, 1e-15);

    std::mt19937_64 rng(10);
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> v(10);
    for (auto& x : v) x = expo(rng);
    const Sample s(v);
    const double naive = ig_hat_naive(s, GiniOrder(4));
    EXPECT_NEAR(ig_hat_fast(s, GiniOrder(4)), naive, 1e-12 * naive);
}

TEST(Fast, Errors) {
    EXPECT_THROW(ig_hat_fast(Sample({0, 0}), GiniOrder(2)), DegenerateSampleError);
    EXPECT_THROW(ig_hat_fast(Sample({1, 2, 3}), GiniOrder(4)), std::invalid_argument);
}

TEST(GiniHat, Examples) {
    EXPECT_EQ(gini_hat(Sample({1, 1})), 0.0);
    EXPECT_EQ(gini_hat(Sample({0, 1})), 1.0);
    EXPECT_NEAR(gini_hat(Sample({1, 2, 3})), 1.0 / 3.0, 1e-15);
}

TEST(Fast, MatchesNaiveOracle) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> size(2, 12);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = size(rng);
        const Sample s(random_values(rng, n));
        for (int m = 2; m <= static_cast<int>(n); ++m) {
            const double naive = ig_hat_naive(s, GiniOrder(m));
            const double fast = ig_hat_fast(s, GiniOrder(m));
            EXPECT_NEAR(fast, naive, 1e-12 * std::max(1.0, std::abs(naive)))
                << "n " << n << " m " << m;
        }
    }
}

TEST(Fast, MaximalOrderIsRangeOverTotal) {
    const Sample s({3.0, 0.5, 7.25, 2.0, 2.0});
    EXPECT_NEAR(ig_hat_fast(s, GiniOrder(5)), (7.25 - 0.5) / 14.75, 1e-15);
}

TEST(Fast, ConstantSamplesGiveExactZero) {
    for (std::size_t n : {2u, 3u, 17u, 64u, 65u, 300u}) {
        for (int m : {2, 3}) {
            if (static_cast<std::size_t>(m) > n) continue;
            EXPECT_EQ(ig_hat_fast(Sample(std::vector<double>(n, 4.2)), GiniOrder(m)), 0.0);
        }
    }
}

TEST(Fast, PermutationInvariantBitForBit) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto v = random_values(rng, 40);
        const double ref = ig_hat_fast(Sample(v), GiniOrder(4));
        std::shuffle(v.begin(), v.end(), rng);
        EXPECT_EQ(ig_hat_fast(Sample(v), GiniOrder(4)), ref);
    }
}

TEST(Fast, ScaleInvariant) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        auto v = random_values(rng, 25);
        const double ref = ig_hat_fast(Sample(v), GiniOrder(3));
        for (double c : {1e-6, 3.7, 1e6}) {
            auto scaled = v;
            for (auto& x : scaled) x *= c;
            EXPECT_NEAR(ig_hat_fast(Sample(scaled), GiniOrder(3)), ref, 1e-13);
        }
    }
}

TEST(Weights, LogSpaceRecurrenceMatchesExactBinomials) {
    for (std::size_t n : {2u, 5u, 20u, 64u}) {
        for (int m = 2; m <= static_cast<int>(std::min<std::size_t>(n, 12)); ++m) {
            const auto exact = detail::order_statistic_weights(n, m);
            const auto logs = detail::order_statistic_weights(n, m, true);
            for (std::size_t i = 0; i < n; ++i) {
                EXPECT_NEAR(exact[i], logs[i], 1e-13) << n << " " << m << " " << i;
            }
        }
    }
}

TEST(Weights, LargeSamplesStayInRange) {
    std::mt19937_64 rng(8);
    std::gamma_distribution<double> gam(2.0, 1.0);
    std::vector<double> v(5000);
    for (auto& x : v) x = gam(rng);
    for (int m : {2, 3, 10, 100}) {
        const double est = ig_hat_fast(Sample(v), GiniOrder(m));
        EXPECT_GT(est, 0.0);
        EXPECT_LT(est, 1.0);
    }
    // Large-n Gini of Gamma(2) samples approaches 0.375.
    EXPECT_NEAR(gini_hat(Sample(v)), 0.375, 0.02);
}

TEST(Weights, AntisymmetricWithUnitTopWeight) {
    for (std::size_t n : {7u, 80u}) {
        const auto w = detail::order_statistic_weights(n, 3);
        for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(w[i], -w[n - 1 - i]);
        EXPECT_EQ(w[n - 1], 1.0);
    }
}

TEST(Fast, RangeIsUnitInterval) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::size_t> size(2, 200);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = size(rng);
        const Sample s(random_values(rng, n));
        for (int m : {2, 3, static_cast<int>(n)}) {
            if (m > static_cast<int>(n)) continue;
            const double v = ig_hat_fast(s, GiniOrder(m));
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0);
        }
    }
}
