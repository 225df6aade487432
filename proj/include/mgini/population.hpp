#pragma once

#include <string>

#include "mgini/distribution.hpp"
#include "mgini/quadrature.hpp"

namespace mgini {

/// Subset size m of the m-th Gini index; always >= 2.
class GiniOrder {
public:
    /// Throws std::invalid_argument for m < 2.
    explicit GiniOrder(int m);
    int value() const { return m_; }

    friend bool operator==(GiniOrder, GiniOrder) = default;

private:
    int m_;
};

/// IG_m of any exponential population, (1/m)(Σ C(m,k)(-1)^(k+1)/k - 1/m).
/// Rate-free. Requires m <= 64.
double ig_exponential_closed(GiniOrder m);

/// Classical Gini coefficient of Gamma(alpha, rate):
/// Γ(alpha + 1/2) / (sqrt(pi) alpha Γ(alpha)).
double gini_gamma_closed(double alpha);

/// IG_m from the survival-function characterization
///   [∫(1 - F^m) - ∫(1 - F)^m] / (m ∫(1 - F)),
/// each integral over [0, inf) by the semi-infinite transform.
/// Throws quad::ConvergenceError if any integral fails to converge and
/// std::logic_error if the mean integral disagrees with dist.mean().
double ig_generic(const Distribution& dist, GiniOrder m,
                  const quad::QuadratureConfig& config = {});

/// The two rate-free gamma integrals ∫(1 - P^m(α,s)) ds and ∫Q^m(α,s) ds.
struct GammaIntegrals {
    quad::QuadratureResult max_part;
    quad::QuadratureResult min_part;
    double truncation_point;
};

/// Integrates both gamma integrals over [0, T], with T chosen so the union
/// bound m ∫_T^inf Q(α,s) ds is negligible against config.abs_tol; that
/// bound is folded into each error estimate.
GammaIntegrals gamma_index_integrals(double alpha, GiniOrder m,
                                     const quad::QuadratureConfig& config);

/// IG_m of Gamma(alpha, ·) from the regularized incomplete-gamma integrals,
/// (1/(m α)) [∫(1 - P^m) - ∫Q^m].
double ig_gamma_quadrature(double alpha, GiniOrder m,
                           const quad::QuadratureConfig& config = {});

/// ∫_T^inf Q(α, s) ds = α Q(α+1, T) - T Q(α, T).
double gamma_q_tail_integral(double alpha, double t);

/// How `ig_best` obtained its value.
enum class IndexMethod { ExponentialClosedForm, GammaClosedForm, GammaQuadrature };

std::string to_string(IndexMethod method);

struct IndexValue {
    double value;
    IndexMethod method;
};

/// Closed form when available (exponential, or gamma with m = 2), gamma
/// quadrature otherwise.
IndexValue ig_best(const Distribution& dist, GiniOrder m,
                   const quad::QuadratureConfig& config = {});

}  // namespace mgini
