#include "mgini/special.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mgini::special {

namespace {

// Godfrey's coefficients for g = 607/128, n = 15.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoeffs = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIterations = 10000;

// ln Γ(x) for x >= 0.5.
double lanczos_ln_gamma(double x) {
    const double z = x - 1.0;
    double sum = kLanczosCoeffs[0];
    for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
        sum += kLanczosCoeffs[i] / (z + static_cast<double>(i));
    }
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
           std::log(sum);
}

// exp(-x + a ln x - ln Γ(a)), the common prefactor of both expansions.
double gamma_prefactor(double a, double x) {
    if (x == 0.0) {
        return 0.0;
    }
    return std::exp(-x + a * std::log(x) - ln_gamma(a));
}

double series_p(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int i = 0; i < kMaxIterations; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps) {
            return sum * gamma_prefactor(a, x);
        }
    }
    throw std::runtime_error("gamma series did not converge");
}

// Modified Lentz evaluation of the continued fraction for Q(a, x).
double continued_fraction_q(double a, double x) {
    constexpr double tiny = std::numeric_limits<double>::min() / kEps;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxIterations; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEps) {
            return h * gamma_prefactor(a, x);
        }
    }
    throw std::runtime_error("gamma continued fraction did not converge");
}

void check_gamma_args(double a, double x) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw std::domain_error("regularized_gamma: shape must be positive and finite, got " +
                                std::to_string(a));
    }
    if (!(x >= 0.0)) {
        throw std::domain_error("regularized_gamma: x must be non-negative, got " +
                                std::to_string(x));
    }
}

}  // namespace

double ln_gamma(double x) {
    if (!std::isfinite(x) || x <= 0.0) {
        throw std::domain_error("ln_gamma: argument must be positive and finite, got " +
                                std::to_string(x));
    }
    if (x == 1.0 || x == 2.0) {
        return 0.0;
    }
    if (x < 0.5) {
        // Γ(x) = Γ(x + 1) / x
        return lanczos_ln_gamma(x + 1.0) - std::log(x);
    }
    return lanczos_ln_gamma(x);
}

RegularizedGammaPair regularized_gamma(double a, double x) {
    check_gamma_args(a, x);
    if (x == 0.0) {
        return {0.0, 1.0};
    }
    if (std::isinf(x)) {
        return {1.0, 0.0};
    }
    if (x < a + 1.0) {
        const double p = std::min(series_p(a, x), 1.0);
        return {p, 1.0 - p};
    }
    const double q = std::min(continued_fraction_q(a, x), 1.0);
    return {1.0 - q, q};
}

double gamma_q(double a, double x) { return regularized_gamma(a, x).q; }

double gamma_p(double a, double x) { return regularized_gamma(a, x).p; }

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) {
        throw std::invalid_argument("binomial: k > n");
    }
    if (n > 64) {
        throw std::invalid_argument("binomial: exact path limited to n <= 64");
    }
    if (k > n - k) {
        k = n - k;
    }
    // Each partial product C(n-k+i, i) is an integer; the 128-bit
    // intermediate cannot overflow for n <= 64.
    unsigned __int128 result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return static_cast<std::uint64_t>(result);
}

double alt_binomial_sum(unsigned m) {
    if (m < 1 || m > 64) {
        throw std::invalid_argument("alt_binomial_sum: m must be in [1, 64]");
    }
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::cpp_rational;
    cpp_rational sum = 0;
    for (unsigned k = 1; k <= m; ++k) {
        cpp_rational term(cpp_int(binomial(m, k)), cpp_int(k));
        if (k % 2 == 1) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum.convert_to<double>();
}

}  // namespace mgini::special
