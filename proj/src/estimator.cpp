#include "mgini/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mgini/special.hpp"

namespace mgini {

namespace {

constexpr std::size_t kExactBinomialLimit = 64;
constexpr double kMaxNaiveSubsets = 1e7;

void check_order(std::size_t n, int m) {
    if (static_cast<std::size_t>(m) > n) {
        throw std::invalid_argument("Gini order m = " + std::to_string(m) +
                                    " exceeds sample size n = " + std::to_string(n));
    }
}

double checked_total(std::span<const double> values) {
    const double total = std::accumulate(values.begin(), values.end(), 0.0);
    if (!(total > 0.0)) {
        throw DegenerateSampleError("sample sums to zero; the estimator is undefined");
    }
    return total;
}

}  // namespace

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) {
        throw std::invalid_argument("a sample needs at least two values");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const double v = values_[i];
        if (!std::isfinite(v) || v < 0.0) {
            throw std::invalid_argument("sample value #" + std::to_string(i + 1) +
                                        " is negative or not finite");
        }
    }
}

double ig_hat_naive(const Sample& sample, GiniOrder order) {
    const auto values = sample.values();
    const std::size_t n = values.size();
    const int m = order.value();
    check_order(n, m);

    double subsets = 1.0;
    for (int j = 0; j < m; ++j) {
        subsets = subsets * static_cast<double>(n - j) / (j + 1);
    }
    if (subsets > kMaxNaiveSubsets) {
        throw std::invalid_argument("ig_hat_naive: too many subsets to enumerate");
    }
    const double total = checked_total(values);

    // Lexicographic walk over index combinations.
    std::vector<std::size_t> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    double range_sum = 0.0;
    while (true) {
        double lo = values[idx[0]];
        double hi = lo;
        for (int j = 1; j < m; ++j) {
            lo = std::min(lo, values[idx[j]]);
            hi = std::max(hi, values[idx[j]]);
        }
        range_sum += hi - lo;

        int j = m - 1;
        while (j >= 0 && idx[j] == n - m + j) {
            --j;
        }
        if (j < 0) break;
        ++idx[j];
        for (int k = j + 1; k < m; ++k) {
            idx[k] = idx[k - 1] + 1;
        }
    }

    // (m-1)! / ((n-1)(n-2)...(n-m+1))
    double coefficient = 1.0;
    for (int j = 1; j < m; ++j) {
        coefficient *= static_cast<double>(j) / static_cast<double>(n - j);
    }
    return coefficient * range_sum / total;
}

namespace detail {

std::vector<double> order_statistic_weights(std::size_t n, int m, bool force_log_space) {
    check_order(n, m);
    const int r = m - 1;
    // ratio[j] = C(j, r) / C(n-1, r), j = 0..n-1
    std::vector<double> ratio(n, 0.0);
    if (n <= kExactBinomialLimit && !force_log_space) {
        const auto denom = static_cast<double>(special::binomial(n - 1, r));
        for (std::size_t j = r; j < n; ++j) {
            ratio[j] = static_cast<double>(special::binomial(j, r)) / denom;
        }
    } else {
        // C(j-1, r) / C(j, r) = (j - r) / j, accumulated downward from j = n-1.
        double log_ratio = 0.0;
        ratio[n - 1] = 1.0;
        for (std::size_t j = n - 1; j > static_cast<std::size_t>(r); --j) {
            log_ratio += std::log(static_cast<double>(j - r) / static_cast<double>(j));
            ratio[j - 1] = std::exp(log_ratio);
        }
    }
    std::vector<double> weights(n);
    for (std::size_t i = 0; i < n; ++i) {
        // 0-based i: C(i, r) as a maximum, C(n-1-i, r) as a minimum.
        weights[i] = ratio[i] - ratio[n - 1 - i];
    }
    return weights;
}

double ig_hat_sorted(std::span<const double> sorted, int m, bool force_log_space) {
    const auto weights = order_statistic_weights(sorted.size(), m, force_log_space);
    const double total = checked_total(sorted);
    // The weights are antisymmetric (w[n-1-i] = -w[i]), so pair the ends:
    // every term is non-negative and tied values cancel exactly.
    const std::size_t n = sorted.size();
    double numerator = 0.0;
    for (std::size_t i = 0; i < n / 2; ++i) {
        numerator += weights[n - 1 - i] * (sorted[n - 1 - i] - sorted[i]);
    }
    return numerator / total;
}

}  // namespace detail

double ig_hat_fast(const Sample& sample, GiniOrder m) {
    check_order(sample.size(), m.value());
    std::vector<double> sorted(sample.values().begin(), sample.values().end());
    std::sort(sorted.begin(), sorted.end());
    return detail::ig_hat_sorted(sorted, m.value());
}

double gini_hat(const Sample& sample) { return ig_hat_fast(sample, GiniOrder(2)); }

}  // namespace mgini
