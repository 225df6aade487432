#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mgini/population.hpp"

namespace mgini {

/// Observed data: at least two non-negative finite values.
class Sample {
public:
    /// Throws std::invalid_argument on negative, NaN or infinite entries, or
    /// fewer than two values.
    explicit Sample(std::vector<double> values);

    std::span<const double> values() const { return values_; }
    std::size_t size() const { return values_.size(); }

private:
    std::vector<double> values_;
};

/// The estimator is undefined because the sample sums to zero.
class DegenerateSampleError : public std::domain_error {
public:
    explicit DegenerateSampleError(const std::string& what) : std::domain_error(what) {}
};

/// Sample m-th Gini index by literal enumeration of all m-subsets:
///   (m-1)! / ((n-1)(n-2)...(n-m+1)) * Σ_subsets (max - min) / Σ x.
/// Intended as a reference; refuses C(n, m) > 1e7.
double ig_hat_naive(const Sample& sample, GiniOrder m);

/// Same value in O(n log n) from the order statistics: x_(i) is the maximum
/// of C(i-1, m-1) subsets and the minimum of C(n-i, m-1).
double ig_hat_fast(const Sample& sample, GiniOrder m);

/// m = 2 case, (1/(n-1)) Σ_{i<j} |x_i - x_j| / Σ x.
double gini_hat(const Sample& sample);

namespace detail {

/// Weights (C(i-1, m-1) - C(n-i, m-1)) / C(n-1, m-1) for i = 1..n.
/// Exact integer binomials when n <= 64 unless `force_log_space`.
std::vector<double> order_statistic_weights(std::size_t n, int m, bool force_log_space = false);

/// Weighted sum over an ascending-sorted sample.
double ig_hat_sorted(std::span<const double> sorted, int m, bool force_log_space = false);

}  // namespace detail

}  // namespace mgini
