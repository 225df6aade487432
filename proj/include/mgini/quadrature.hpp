#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace mgini::quad {

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 200;

    /// Throws std::invalid_argument unless both tolerances are positive and
    /// max_subdivisions >= 1.
    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    int subdivisions = 0;
};

/// Raised by callers that require a converged integral.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (7/15) integration of f over [lo, hi].
///
/// The interval with the largest local error is bisected until the summed
/// error estimate drops below max(abs_tol, rel_tol * |value|) or the
/// subdivision budget runs out, in which case `converged` is false.
QuadratureResult integrate_finite(const Integrand& f, double lo, double hi,
                                  const QuadratureConfig& config = {});

/// Integral of f over [0, inf) via t = u / (1 - u) on (0, 1).
QuadratureResult integrate_semi_infinite(const Integrand& f,
                                         const QuadratureConfig& config = {});

/// Returns result.value, or throws ConvergenceError naming `what`.
double require_converged(const QuadratureResult& result, const std::string& what);

}  // namespace mgini::quad
