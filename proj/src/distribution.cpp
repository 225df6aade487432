#include "mgini/distribution.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mgini/format.hpp"
#include "mgini/special.hpp"

namespace mgini {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be positive and finite");
    }
}

double parse_param(std::string_view text, std::string_view spec) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("invalid number '" + std::string(text) +
                                    "' in distribution '" + std::string(spec) + "'");
    }
    return v;
}

}  // namespace

Distribution Distribution::exponential(double rate) {
    require_positive(rate, "exponential rate");
    return Distribution(Exponential{rate});
}

Distribution Distribution::gamma(double shape, double rate) {
    require_positive(shape, "gamma shape");
    require_positive(rate, "gamma rate");
    return Distribution(Gamma{shape, rate});
}

double Distribution::shape() const {
    if (const auto* g = std::get_if<Gamma>(&params_)) return g->shape;
    return 1.0;
}

double Distribution::rate() const {
    return std::visit([](const auto& p) { return p.rate; }, params_);
}

double Distribution::mean() const { return shape() / rate(); }

double Distribution::cdf(double t) const {
    if (t <= 0.0) return 0.0;
    if (const auto* e = std::get_if<Exponential>(&params_)) {
        return -std::expm1(-e->rate * t);
    }
    const auto& g = std::get<Gamma>(params_);
    return special::gamma_p(g.shape, g.rate * t);
}

double Distribution::survival(double t) const {
    if (t <= 0.0) return 1.0;
    if (const auto* e = std::get_if<Exponential>(&params_)) {
        return std::exp(-e->rate * t);
    }
    const auto& g = std::get<Gamma>(params_);
    return special::gamma_q(g.shape, g.rate * t);
}

double Distribution::laplace(double z) const {
    if (z < 0.0) {
        throw std::domain_error("laplace: z must be non-negative");
    }
    const double ratio = rate() / (z + rate());
    if (is_exponential()) return ratio;
    return std::pow(ratio, shape());
}

std::string Distribution::label() const {
    if (const auto* e = std::get_if<Exponential>(&params_)) {
        return "exp:" + format_number(e->rate);
    }
    const auto& g = std::get<Gamma>(params_);
    return "gamma:" + format_number(g.shape) + "," + format_number(g.rate);
}

Distribution parse_distribution(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("distribution '" + std::string(spec) +
                                    "' must look like exp:LAMBDA or gamma:ALPHA,LAMBDA");
    }
    const auto name = spec.substr(0, colon);
    const auto args = spec.substr(colon + 1);
    if (name == "exp") {
        return Distribution::exponential(parse_param(args, spec));
    }
    if (name == "gamma") {
        const auto comma = args.find(',');
        if (comma == std::string_view::npos) {
            throw std::invalid_argument("gamma distribution '" + std::string(spec) +
                                        "' needs ALPHA,LAMBDA");
        }
        return Distribution::gamma(parse_param(args.substr(0, comma), spec),
                                   parse_param(args.substr(comma + 1), spec));
    }
    throw std::invalid_argument("unknown distribution family '" + std::string(name) + "'");
}

}  // namespace mgini
