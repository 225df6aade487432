#include "mgini/population.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mgini/special.hpp"

namespace mgini {

namespace {

// 1 - (1 - s)^m for a survival probability s, precise on both ends.
double one_minus_cdf_power(double s, int m) {
    if (s < 0.5) {
        return -std::expm1(m * std::log1p(-s));
    }
    return 1.0 - std::pow(1.0 - s, m);
}

quad::QuadratureResult with_extra_error(quad::QuadratureResult r, double extra,
                                        const quad::QuadratureConfig& config) {
    r.error_estimate += extra;
    r.converged = r.converged &&
                  r.error_estimate <= std::max(config.abs_tol, config.rel_tol * std::abs(r.value));
    return r;
}

}  // namespace

GiniOrder::GiniOrder(int m) : m_(m) {
    if (m < 2) {
        throw std::invalid_argument("Gini order m must be >= 2, got " + std::to_string(m));
    }
}

double ig_exponential_closed(GiniOrder m) {
    const int k = m.value();
    if (k > 64) {
        throw std::invalid_argument("ig_exponential_closed: m must be <= 64");
    }
    const double inv_m = 1.0 / k;
    return inv_m * (special::alt_binomial_sum(static_cast<unsigned>(k)) - inv_m);
}

double gini_gamma_closed(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw std::domain_error("gini_gamma_closed: alpha must be positive and finite");
    }
    const double ratio = std::exp(special::ln_gamma(alpha + 0.5) - special::ln_gamma(alpha));
    return ratio / (std::sqrt(std::numbers::pi) * alpha);
}

double ig_generic(const Distribution& dist, GiniOrder m, const quad::QuadratureConfig& config) {
    const int k = m.value();
    auto max_integrand = [&](double t) { return one_minus_cdf_power(dist.survival(t), k); };
    auto min_integrand = [&](double t) { return std::pow(dist.survival(t), k); };
    auto mean_integrand = [&](double t) { return dist.survival(t); };

    const auto max_r = quad::integrate_semi_infinite(max_integrand, config);
    const auto min_r = quad::integrate_semi_infinite(min_integrand, config);
    const auto mean_r = quad::integrate_semi_infinite(mean_integrand, config);
    const double e_max = quad::require_converged(max_r, "ig_generic: E[max]");
    const double e_min = quad::require_converged(min_r, "ig_generic: E[min]");
    const double mu = quad::require_converged(mean_r, "ig_generic: mean");

    const double allowed =
        10.0 * std::max(mean_r.error_estimate,
                        std::max(config.abs_tol, config.rel_tol * dist.mean()));
    if (std::abs(mu - dist.mean()) > allowed) {
        throw std::logic_error("ig_generic: survival integral " + std::to_string(mu) +
                               " disagrees with the mean " + std::to_string(dist.mean()));
    }
    return (e_max - e_min) / (k * mu);
}

double gamma_q_tail_integral(double alpha, double t) {
    if (t <= 0.0) {
        return alpha;
    }
    const double tail = alpha * special::gamma_q(alpha + 1.0, t) - t * special::gamma_q(alpha, t);
    return std::max(tail, 0.0);
}

GammaIntegrals gamma_index_integrals(double alpha, GiniOrder m,
                                     const quad::QuadratureConfig& config) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw std::domain_error("gamma integrals: alpha must be positive and finite");
    }
    config.validate();
    const int k = m.value();

    const double budget = 1e-3 * config.abs_tol;
    double cut = alpha + 1.0;
    while (k * gamma_q_tail_integral(alpha, cut) > budget) {
        cut *= 1.25;
    }
    const double tail_bound = k * gamma_q_tail_integral(alpha, cut);

    auto max_integrand = [&](double s) {
        return one_minus_cdf_power(special::gamma_q(alpha, s), k);
    };
    auto min_integrand = [&](double s) { return std::pow(special::gamma_q(alpha, s), k); };

    return {
        with_extra_error(quad::integrate_finite(max_integrand, 0.0, cut, config), tail_bound,
                         config),
        with_extra_error(quad::integrate_finite(min_integrand, 0.0, cut, config), tail_bound,
                         config),
        cut,
    };
}

double ig_gamma_quadrature(double alpha, GiniOrder m, const quad::QuadratureConfig& config) {
    const auto parts = gamma_index_integrals(alpha, m, config);
    const double e_max = quad::require_converged(parts.max_part, "ig_gamma_quadrature: max part");
    const double e_min = quad::require_converged(parts.min_part, "ig_gamma_quadrature: min part");
    return (e_max - e_min) / (m.value() * alpha);
}

std::string to_string(IndexMethod method) {
    switch (method) {
        case IndexMethod::ExponentialClosedForm:
            return "exponential-closed-form";
        case IndexMethod::GammaClosedForm:
            return "gamma-closed-form";
        case IndexMethod::GammaQuadrature:
            return "gamma-quadrature";
    }
    return "unknown";
}

IndexValue ig_best(const Distribution& dist, GiniOrder m, const quad::QuadratureConfig& config) {
    if (dist.is_exponential()) {
        return {ig_exponential_closed(m), IndexMethod::ExponentialClosedForm};
    }
    if (m.value() == 2) {
        return {gini_gamma_closed(dist.shape()), IndexMethod::GammaClosedForm};
    }
    return {ig_gamma_quadrature(dist.shape(), m, config), IndexMethod::GammaQuadrature};
}

}  // namespace mgini
