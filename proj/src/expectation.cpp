#include "mgini/expectation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mgini/special.hpp"

namespace mgini {

namespace {

void check_sizes(int n, GiniOrder m) {
    if (n < m.value() || n > kMaxSampleSize) {
        throw std::invalid_argument("expected estimator: need m <= n <= " +
                                    std::to_string(kMaxSampleSize) + ", got n = " +
                                    std::to_string(n) + ", m = " + std::to_string(m.value()));
    }
}

}  // namespace

void ExpectationSetup::validate() const {
    check_sizes(n, m);
    config.validate();
}

namespace detail {

double laplace_power_integral(int n, double k, const quad::QuadratureConfig& config) {
    auto integrand = [n, k](double z) { return n * std::pow(1.0 + z, -(k + 1.0)); };
    return quad::require_converged(quad::integrate_semi_infinite(integrand, config),
                                   "z-integral");
}

double exponential_inner_integral(double z, GiniOrder m, const quad::QuadratureConfig& config) {
    const int k = m.value();
    const double c = z + 1.0;
    auto integrand = [c, k](double t) {
        const double e = std::exp(-c * t);
        // 1 - (1 - e)^k - e^k
        return -std::expm1(k * std::log1p(-e)) - std::pow(e, k);
    };
    return quad::require_converged(quad::integrate_semi_infinite(integrand, config),
                                   "exponential inner t-integral");
}

}  // namespace detail

double expected_estimator_exponential(int n, GiniOrder m, const quad::QuadratureConfig& config) {
    check_sizes(n, m);
    const int k = m.value();
    // The inner t-integral reduces to (Σ C(m,j)(-1)^(j+1)/j - 1/m) / (z + λ).
    const double inner = special::alt_binomial_sum(static_cast<unsigned>(k)) - 1.0 / k;
    const double outer = detail::laplace_power_integral(n, n, config);
    return inner * outer / k;
}

double expected_estimator_gamma(double alpha, int n, GiniOrder m,
                                const quad::QuadratureConfig& config) {
    check_sizes(n, m);
    // After u = (z + λ)t the u-integrals are the population ones and the
    // z-integral is ∫ n λ^(αn) / (z + λ)^(αn + 1) dz.
    const auto parts = gamma_index_integrals(alpha, m, config);
    const double u_max = quad::require_converged(parts.max_part, "expected_estimator_gamma: max");
    const double u_min = quad::require_converged(parts.min_part, "expected_estimator_gamma: min");
    const double outer = detail::laplace_power_integral(n, alpha * n, config);
    return (u_max - u_min) * outer / m.value();
}

double expected_estimator(const ExpectationSetup& setup) {
    setup.validate();
    if (setup.dist.is_exponential()) {
        return expected_estimator_exponential(setup.n, setup.m, setup.config);
    }
    return expected_estimator_gamma(setup.dist.shape(), setup.n, setup.m, setup.config);
}

}  // namespace mgini
