#include <cmath>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "mgini/simulate.hpp"

using namespace mgini;
using namespace mgini::sim;

namespace {

struct Moments {
    double mean;
    double var;
};

Moments moments(const std::vector<double>& v) {
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return {mean, ss / (v.size() - 1)};
}

}  // namespace

TEST(Draw, ExponentialMoments) {
    Rng rng(1);
    const auto v = draw_values(Distribution::exponential(1.0), 100000, rng);
    const auto mo = moments(v);
    EXPECT_NEAR(mo.mean, 1.0, 4.0 * 1.0 / std::sqrt(1e5));
    EXPECT_NEAR(mo.var, 1.0, 0.05);
    for (double x : v) {
        EXPECT_TRUE(std::isfinite(x));
        EXPECT_GE(x, 0.0);
    }
}

TEST(Draw, GammaMoments) {
    Rng rng(2);
    const auto v = draw_values(Distribution::gamma(2.0, 1.0), 100000, rng);
    const auto mo = moments(v);
    EXPECT_NEAR(mo.mean, 2.0, 4.0 * std::sqrt(2.0) / std::sqrt(1e5));
    EXPECT_NEAR(mo.var, 2.0, 0.08);
}

TEST(Draw, SmallShapeAndRate) {
    // Gamma(0.3, 4): mean 0.075, variance 0.01875.
    Rng rng(3);
    const auto v = draw_values(Distribution::gamma(0.3, 4.0), 200000, rng);
    const auto mo = moments(v);
    EXPECT_NEAR(mo.mean, 0.075, 4.0 * std::sqrt(0.01875 / 2e5));
    EXPECT_NEAR(mo.var, 0.01875, 0.002);
    for (double x : v) EXPECT_GE(x, 0.0);
}

TEST(Draw, Deterministic) {
    for (const auto& d : {Distribution::exponential(2.0), Distribution::gamma(2.0, 1.0)}) {
        Rng a(99), b(99);
        EXPECT_EQ(draw_values(d, 50, a), draw_values(d, 50, b));
    }
}

TEST(Draw, UniformIsOpenInterval) {
    Rng rng(4);
    for (int i = 0; i < 100000; ++i) {
        const double u = uniform_open(rng);
        ASSERT_GT(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(Seeds, ChildSeedsAreDistinct) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t n : {5, 10, 30}) {
        for (std::uint64_t r = 0; r < 2000; ++r) {
            seen.insert(child_seed(42, n, r));
        }
    }
    EXPECT_EQ(seen.size(), 6000u);
    EXPECT_NE(child_seed(1, 5, 0), child_seed(2, 5, 0));
}

TEST(Summarize, SingleReplicateHasMseEqualBiasSquared) {
    const std::vector<std::optional<double>> one = {0.4123456789};
    const auto r = summarize(one, 0.375);
    EXPECT_EQ(r.mse, r.bias * r.bias);
    EXPECT_EQ(r.se_bias, 0.0);
}

TEST(Summarize, RejectedReplicatesAreCountedAndSkipped) {
    const std::vector<std::optional<double>> est = {0.5, std::nullopt, 0.7, std::nullopt};
    const auto r = summarize(est, 0.5);
    EXPECT_EQ(r.rejected, 2);
    EXPECT_EQ(r.n_sim, 4);
    EXPECT_NEAR(r.bias, 0.1, 1e-15);
    EXPECT_NEAR(r.mse, 0.02, 1e-15);
    EXPECT_NEAR(r.se_bias, std::sqrt(0.02) / std::sqrt(2.0), 1e-15);

    const std::vector<std::optional<double>> none = {std::nullopt};
    EXPECT_THROW(summarize(none, 0.5), std::runtime_error);
}

TEST(Run, ValidatesConfig) {
    SimulationConfig c;
    c.sizes = {2};
    EXPECT_THROW(run_simulation(c), std::invalid_argument);
    c.sizes = {};
    EXPECT_THROW(run_simulation(c), std::invalid_argument);
    c.sizes = {5};
    c.n_sim = 0;
    EXPECT_THROW(run_simulation(c), std::invalid_argument);
}

TEST(Run, SingleReplicate) {
    SimulationConfig c;
    c.dist = Distribution::gamma(2.0, 1.0);
    c.sizes = {5};
    c.n_sim = 1;
    const auto recs = run_simulation(c);
    ASSERT_EQ(recs.size(), 1u);
    EXPECT_EQ(recs[0].mse, recs[0].bias * recs[0].bias);
    EXPECT_EQ(recs[0].dist_label, "gamma:2,1");
}

TEST(Run, DeterministicAcrossThreadCounts) {
    SimulationConfig c;
    c.dist = Distribution::gamma(2.0, 1.0);
    c.sizes = {5, 30};
    c.n_sim = 500;
    c.seed = 1234;
    c.threads = 1;
    const auto ref = run_simulation(c);
    for (unsigned t : {2u, 3u, 8u}) {
        c.threads = t;
        const auto other = run_simulation(c);
        ASSERT_EQ(other.size(), ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) {
            EXPECT_EQ(other[i].bias, ref[i].bias);
            EXPECT_EQ(other[i].mse, ref[i].mse);
            EXPECT_EQ(other[i].se_bias, ref[i].se_bias);
        }
    }
}

TEST(Run, SeedChangesResults) {
    SimulationConfig c;
    c.sizes = {10};
    c.n_sim = 200;
    c.seed = 1;
    const auto a = run_simulation(c);
    c.seed = 2;
    const auto b = run_simulation(c);
    EXPECT_NE(a[0].bias, b[0].bias);
}

TEST(Run, VarianceDecompositionAndMonotoneMse) {
    for (const auto& d : {Distribution::exponential(1.0), Distribution::gamma(2.0, 1.0)}) {
        SimulationConfig c;
        c.dist = d;
        c.n_sim = 2000;
        c.seed = 77;
        const auto recs = run_simulation(c);
        ASSERT_EQ(recs.size(), 5u);
        for (std::size_t i = 0; i < recs.size(); ++i) {
            EXPECT_GE(recs[i].mse, recs[i].bias * recs[i].bias);
            EXPECT_LE(std::abs(recs[i].bias), 4.0 * recs[i].se_bias) << d.label() << " " << recs[i].n;
            EXPECT_EQ(recs[i].rejected, 0);
            if (i > 0) EXPECT_LT(recs[i].mse, recs[i - 1].mse);
        }
    }
}
