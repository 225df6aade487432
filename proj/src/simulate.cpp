#include "mgini/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

namespace mgini::sim {

void SimulationConfig::validate() const {
    if (sizes.empty()) {
        throw std::invalid_argument("simulation needs at least one sample size");
    }
    for (int n : sizes) {
        if (n < m.value()) {
            throw std::invalid_argument("sample size " + std::to_string(n) +
                                        " is smaller than m = " + std::to_string(m.value()));
        }
    }
    if (n_sim < 1) {
        throw std::invalid_argument("n_sim must be >= 1");
    }
    quadrature.validate();
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t child_seed(std::uint64_t seed, std::uint64_t n, std::uint64_t replicate) {
    return mix64(mix64(mix64(seed) ^ n) ^ replicate);
}

double uniform_open(Rng& rng) {
    // (k + 0.5) / 2^53 for k in [0, 2^53)
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

double draw_variate(const Distribution& dist, Rng& rng) {
    if (dist.is_exponential()) {
        return -std::log(uniform_open(rng)) / dist.rate();
    }
    const double alpha = dist.shape();
    const double shape = alpha < 1.0 ? alpha + 1.0 : alpha;
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    std::normal_distribution<double> normal;
    double g = 0.0;
    while (true) {
        double x = 0.0;
        double v = 0.0;
        do {
            x = normal(rng);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform_open(rng);
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) {
            g = d * v;
            break;
        }
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
            g = d * v;
            break;
        }
    }
    if (alpha < 1.0) {
        g *= std::pow(uniform_open(rng), 1.0 / alpha);
    }
    return g / dist.rate();
}

std::vector<double> draw_values(const Distribution& dist, std::size_t n, Rng& rng) {
    std::vector<double> values(n);
    for (auto& v : values) {
        v = draw_variate(dist, rng);
    }
    return values;
}

Sample draw_sample(const Distribution& dist, std::size_t n, Rng& rng) {
    return Sample(draw_values(dist, n, rng));
}

SimulationRecord summarize(std::span<const std::optional<double>> estimates, double truth) {
    SimulationRecord rec;
    rec.truth = truth;
    rec.n_sim = static_cast<int>(estimates.size());
    double sum = 0.0;
    double sum_sq = 0.0;
    int accepted = 0;
    for (const auto& e : estimates) {
        if (!e) {
            ++rec.rejected;
            continue;
        }
        const double d = *e - truth;
        sum += d;
        sum_sq += d * d;
        ++accepted;
    }
    if (accepted == 0) {
        throw std::runtime_error("every simulation replicate was rejected");
    }
    rec.bias = sum / accepted;
    rec.mse = sum_sq / accepted;
    if (accepted > 1) {
        // Two-pass variance about the mean deviation.
        double ss = 0.0;
        for (const auto& e : estimates) {
            if (!e) continue;
            const double r = (*e - truth) - rec.bias;
            ss += r * r;
        }
        rec.se_bias = std::sqrt(ss / (accepted - 1)) / std::sqrt(static_cast<double>(accepted));
    }
    return rec;
}

std::vector<SimulationRecord> run_simulation(const SimulationConfig& config) {
    config.validate();
    const double truth = ig_best(config.dist, config.m, config.quadrature).value;
    const int m = config.m.value();
    unsigned workers = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
    workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(config.n_sim));

    std::vector<SimulationRecord> records;
    records.reserve(config.sizes.size());
    std::vector<std::optional<double>> estimates(config.n_sim);

    for (int n : config.sizes) {
        auto run_range = [&](std::size_t begin, std::size_t end) {
            for (std::size_t r = begin; r < end; ++r) {
                Rng rng(child_seed(config.seed, static_cast<std::uint64_t>(n), r));
                const Sample sample = draw_sample(config.dist, static_cast<std::size_t>(n), rng);
                try {
                    estimates[r] = ig_hat_fast(sample, config.m);
                } catch (const DegenerateSampleError&) {
                    estimates[r] = std::nullopt;
                }
            }
        };

        const std::size_t total = estimates.size();
        if (workers == 1) {
            run_range(0, total);
        } else {
            std::vector<std::exception_ptr> errors(workers);
            {
                std::vector<std::jthread> pool;
                const std::size_t chunk = (total + workers - 1) / workers;
                for (unsigned w = 0; w < workers; ++w) {
                    const std::size_t begin = std::min(total, w * chunk);
                    const std::size_t end = std::min(total, begin + chunk);
                    pool.emplace_back([&, w, begin, end] {
                        try {
                            run_range(begin, end);
                        } catch (...) {
                            errors[w] = std::current_exception();
                        }
                    });
                }
            }
            for (const auto& e : errors) {
                if (e) std::rethrow_exception(e);
            }
        }

        SimulationRecord rec = summarize(estimates, truth);
        rec.dist_label = config.dist.label();
        rec.n = n;
        rec.m = m;
        rec.seed = config.seed;
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace mgini::sim
