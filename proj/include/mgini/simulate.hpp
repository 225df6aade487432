#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "mgini/distribution.hpp"
#include "mgini/estimator.hpp"
#include "mgini/population.hpp"

namespace mgini::sim {

using Rng = std::mt19937_64;

struct SimulationConfig {
    Distribution dist = Distribution::exponential(1.0);
    std::vector<int> sizes = {5, 10, 30, 50, 100};
    GiniOrder m{3};
    int n_sim = 1000;
    std::uint64_t seed = 42;
    /// Worker threads; 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;
    quad::QuadratureConfig quadrature{};

    /// Throws std::invalid_argument if some n < m, n_sim < 1 or sizes is empty.
    void validate() const;
};

struct SimulationRecord {
    std::string dist_label;
    int n = 0;
    int m = 0;
    double bias = 0.0;
    double mse = 0.0;
    int n_sim = 0;
    std::uint64_t seed = 0;
    /// Sample standard deviation of the replicate estimates over sqrt(accepted).
    double se_bias = 0.0;
    double truth = 0.0;
    /// Replicates dropped because their sample summed to zero.
    int rejected = 0;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed for replicate `replicate` of sample size `n`; depends only on its
/// arguments.
std::uint64_t child_seed(std::uint64_t seed, std::uint64_t n, std::uint64_t replicate);

/// Uniform on the open interval (0, 1) from 53 random bits.
double uniform_open(Rng& rng);

/// One variate: inverse CDF for the exponential, Marsaglia-Tsang for the
/// gamma (with the U^(1/α) boost when α < 1).
double draw_variate(const Distribution& dist, Rng& rng);

/// n independent variates. Returns raw values; n = 1 is allowed.
std::vector<double> draw_values(const Distribution& dist, std::size_t n, Rng& rng);

/// n >= 2 variates wrapped as a Sample.
Sample draw_sample(const Distribution& dist, std::size_t n, Rng& rng);

/// Bias, MSE and standard error from replicate estimates; std::nullopt
/// entries are rejected replicates. Reduction runs in index order.
/// Throws std::runtime_error if every replicate was rejected.
SimulationRecord summarize(std::span<const std::optional<double>> estimates, double truth);

/// One record per entry of config.sizes. Replicates run on config.threads
/// workers; the result does not depend on the worker count.
std::vector<SimulationRecord> run_simulation(const SimulationConfig& config);

}  // namespace mgini::sim
