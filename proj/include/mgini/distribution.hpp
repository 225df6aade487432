#pragma once

#include <string>
#include <string_view>
#include <variant>

namespace mgini {

struct Exponential {
    double rate;
    friend bool operator==(const Exponential&, const Exponential&) = default;
};

struct Gamma {
    double shape;
    double rate;
    friend bool operator==(const Gamma&, const Gamma&) = default;
};

/// A non-negative population: Exponential(rate) or Gamma(shape, rate).
class Distribution {
public:
    /// Throw std::invalid_argument for non-positive or non-finite parameters.
    static Distribution exponential(double rate);
    static Distribution gamma(double shape, double rate);

    const std::variant<Exponential, Gamma>& params() const { return params_; }
    bool is_exponential() const { return std::holds_alternative<Exponential>(params_); }

    /// Gamma shape; 1 for the exponential family.
    double shape() const;
    double rate() const;

    double mean() const;
    double cdf(double t) const;
    /// 1 - F(t), computed directly so it keeps relative accuracy in the tail.
    double survival(double t) const;
    /// Laplace transform E[exp(-zX)] for z >= 0.
    double laplace(double z) const;

    /// Canonical `exp:RATE` / `gamma:SHAPE,RATE` form.
    std::string label() const;

    friend bool operator==(const Distribution&, const Distribution&) = default;

private:
    explicit Distribution(std::variant<Exponential, Gamma> params) : params_(params) {}

    std::variant<Exponential, Gamma> params_;
};

/// Parses `exp:LAMBDA` or `gamma:ALPHA,LAMBDA`.
/// Throws std::invalid_argument with a readable message on malformed input.
Distribution parse_distribution(std::string_view spec);

}  // namespace mgini
