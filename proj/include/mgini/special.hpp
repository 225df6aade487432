#pragma once

#include <cstdint>

namespace mgini::special {

/// Regularized incomplete gamma functions at one point.
/// `p` is the lower function P(a, x) = γ(a, x) / Γ(a) and `q` the upper
/// Q(a, x) = Γ(a, x) / Γ(a).
struct RegularizedGammaPair {
    double p;
    double q;
};

/// Natural log of the gamma function for x > 0.
/// Throws std::domain_error for x <= 0 or non-finite x.
double ln_gamma(double x);

/// P(a, x) and Q(a, x) for a > 0, x >= 0.
///
/// Uses the power series for x < a + 1 and a modified-Lentz continued
/// fraction otherwise; the complementary value is taken as 1 minus the one
/// computed directly, so p + q == 1 up to one rounding.
/// Throws std::domain_error for a <= 0, x < 0 or NaN arguments.
RegularizedGammaPair regularized_gamma(double a, double x);

/// Q(a, x) alone; accurate in relative terms in the upper tail.
double gamma_q(double a, double x);

/// P(a, x) alone.
double gamma_p(double a, double x);

/// Exact binomial coefficient C(n, k) for k <= n <= 64.
/// Throws std::invalid_argument if k > n or n > 64.
std::uint64_t binomial(unsigned n, unsigned k);

/// Sum over k = 1..m of C(m, k) (-1)^(k+1) / k, evaluated in exact rational
/// arithmetic and rounded once. For 1 <= m <= 64.
double alt_binomial_sum(unsigned m);

}  // namespace mgini::special
