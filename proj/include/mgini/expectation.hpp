#pragma once

#include "mgini/distribution.hpp"
#include "mgini/population.hpp"
#include "mgini/quadrature.hpp"

namespace mgini {

/// Exact expectation of the sample m-th Gini index, evaluated from its
/// Laplace-transform representation
///
///   E = (n/m) ∫∫ { L^m(z) - E^m[1{X<=t} e^{-zX}] - E^m[1{X>=t} e^{-zX}] } L^{n-m}(z) dt dz.
///
/// The t and z integrals are separated analytically for exponential and gamma
/// populations; only one-dimensional integrals are evaluated numerically.
struct ExpectationSetup {
    Distribution dist;
    int n;
    GiniOrder m;
    quad::QuadratureConfig config{};

    /// Throws std::invalid_argument unless m <= n <= kMaxSampleSize.
    void validate() const;
};

inline constexpr int kMaxSampleSize = 50;

/// E[IG_hat_m] for Exponential(1) samples of size n.
double expected_estimator_exponential(int n, GiniOrder m,
                                      const quad::QuadratureConfig& config = {});

/// E[IG_hat_m] for Gamma(alpha, 1) samples of size n.
double expected_estimator_gamma(double alpha, int n, GiniOrder m,
                                const quad::QuadratureConfig& config = {});

/// Dispatches on the distribution family. The rate drops out, so only the
/// shape of `setup.dist` is used.
double expected_estimator(const ExpectationSetup& setup);

namespace detail {

/// ∫_0^inf n λ^(k) / (z + λ)^(k + 1) dz with λ = 1, by quadrature. Equals n/k.
double laplace_power_integral(int n, double k, const quad::QuadratureConfig& config);

/// Inner t-integral for an exponential population at fixed z (λ = 1):
/// ∫ {1 - [1 - e^{-(z+1)t}]^m - e^{-m(z+1)t}} dt.
/// Used to check the analytic reduction (H-type sum - 1/m) / (z + 1).
double exponential_inner_integral(double z, GiniOrder m, const quad::QuadratureConfig& config);

}  // namespace detail

}  // namespace mgini
