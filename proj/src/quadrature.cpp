#include "mgini/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace mgini::quad {

namespace {

// Kronrod abscissae on [0, 1]; odd indices are shared with the 7-point
// Gauss rule.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Segment {
    double lo;
    double hi;
    double value;
    double error;
};

struct ByError {
    bool operator()(const Segment& a, const Segment& b) const { return a.error < b.error; }
};

Segment gauss_kronrod(const Integrand& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    double abs_sum = std::abs(kronrod);
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        kronrod += kWgk[j] * (f1 + f2);
        abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) {
            gauss += kWg[j / 2] * (f1 + f2);
        }
    }
    const double value = kronrod * half;
    double error = std::abs((kronrod - gauss) * half);
    // Floor at the rounding level of the rule itself.
    error = std::max(error, 50.0 * std::numeric_limits<double>::epsilon() * abs_sum * std::abs(half));
    return {lo, hi, value, error};
}

double target(const QuadratureConfig& config, double value) {
    return std::max(config.abs_tol, config.rel_tol * std::abs(value));
}

}  // namespace

void QuadratureConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
        throw std::invalid_argument("QuadratureConfig: tolerances must be positive");
    }
    if (max_subdivisions < 1) {
        throw std::invalid_argument("QuadratureConfig: max_subdivisions must be >= 1");
    }
}

QuadratureResult integrate_finite(const Integrand& f, double lo, double hi,
                                  const QuadratureConfig& config) {
    config.validate();
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw std::invalid_argument("integrate_finite: requires finite lo < hi");
    }

    std::priority_queue<Segment, std::vector<Segment>, ByError> heap;
    Segment first = gauss_kronrod(f, lo, hi);
    double value = first.value;
    double error = first.error;
    heap.push(first);

    int subdivisions = 0;
    while (error > target(config, value) && subdivisions < config.max_subdivisions) {
        const Segment worst = heap.top();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(worst.lo < mid && mid < worst.hi)) {
            break;  // interval no longer representable
        }
        heap.pop();
        const Segment left = gauss_kronrod(f, worst.lo, mid);
        const Segment right = gauss_kronrod(f, mid, worst.hi);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++subdivisions;
    }

    // Re-sum to shed the drift of the running updates.
    double total = 0.0;
    double total_error = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        total_error += heap.top().error;
        heap.pop();
    }
    if (!std::isfinite(total)) {
        return {total, std::numeric_limits<double>::infinity(), false, subdivisions};
    }
    return {total, total_error, total_error <= target(config, total), subdivisions};
}

QuadratureResult integrate_semi_infinite(const Integrand& f, const QuadratureConfig& config) {
    auto transformed = [&f](double u) {
        const double one_minus = 1.0 - u;
        const double t = u / one_minus;
        if (!std::isfinite(t)) {
            return 0.0;
        }
        return f(t) / (one_minus * one_minus);
    };
    return integrate_finite(transformed, 0.0, 1.0, config);
}

double require_converged(const QuadratureResult& result, const std::string& what) {
    if (!result.converged) {
        throw ConvergenceError(what + ": quadrature did not converge (value " +
                               std::to_string(result.value) + ", error estimate " +
                               std::to_string(result.error_estimate) + ")");
    }
    return result.value;
}

}  // namespace mgini::quad
