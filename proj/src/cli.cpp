#include "mgini/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mgini/estimator.hpp"
#include "mgini/expectation.hpp"

namespace mgini::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

const std::vector<std::string> kSimulationHeader = {
    "distribution", "n", "m", "bias", "mse", "se_bias", "n_sim", "seed"};

template <typename T>
T parse_integer(const std::string& text, const std::string& what) {
    T v{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("bad " + what + " '" + text + "'");
    }
    return v;
}

double parse_double(const std::string& text, const std::string& what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("bad " + what + " '" + text + "'");
    }
    return v;
}

Distribution dist_flag(const std::string& spec, const std::string& flag) {
    try {
        return parse_distribution(spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

GiniOrder order_flag(int m) {
    if (m < 2) {
        throw UsageError("-m/--order: must be >= 2, got " + std::to_string(m));
    }
    return GiniOrder(m);
}

quad::QuadratureConfig quadrature_flag(double rel_tol) {
    auto config = quad::QuadratureConfig{};
    if (!(rel_tol > 0.0)) {
        throw UsageError("--rel-tol: must be positive");
    }
    // abs_tol follows at 1/100 of rel_tol, which reproduces the defaults.
    config.rel_tol = rel_tol;
    config.abs_tol = rel_tol * 1e-2;
    return config;
}

void write_atomically(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".partial";
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw DataError("--out: cannot open '" + path.string() + "' for writing");
        }
        file << content;
        if (!file.flush()) {
            throw DataError("--out: write to '" + path.string() + "' failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw DataError("--out: cannot move result into '" + path.string() + "'");
    }
}

}  // namespace

OutputTable cmd_population(const Distribution& dist, GiniOrder m,
                           const quad::QuadratureConfig& config,
                           std::optional<int> verify_unbiased_n) {
    OutputTable table;
    table.header = {"distribution", "m", "ig", "method"};
    if (verify_unbiased_n) {
        table.header.insert(table.header.end(), {"n", "expected_estimator", "abs_gap"});
    }
    const auto index = ig_best(dist, m, config);
    std::vector<std::string> row = {dist.label(), std::to_string(m.value()),
                                    format_number(index.value), to_string(index.method)};
    if (verify_unbiased_n) {
        const int n = *verify_unbiased_n;
        if (n < m.value() || n > kMaxSampleSize) {
            throw UsageError("--verify-unbiased: sample size must be in [m, " +
                             std::to_string(kMaxSampleSize) + "], got " + std::to_string(n));
        }
        const double expected = expected_estimator(ExpectationSetup{dist, n, m, config});
        row.insert(row.end(), {std::to_string(n), format_number(expected),
                               format_number(std::abs(expected - index.value))});
    }
    table.add_row(std::move(row));
    return table;
}

std::vector<double> read_data_file(const std::filesystem::path& path) {
    std::ifstream file(path);
    if (!file) {
        throw DataError("cannot read data file '" + path.string() + "'");
    }
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        std::string_view text = line;
        if (const auto hash = text.find('#'); hash != std::string_view::npos) {
            text = text.substr(0, hash);
        }
        text = trim(text);
        if (text.empty()) continue;
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
            throw DataError(path.string() + ":" + std::to_string(line_no) +
                            ": not a number: '" + std::string(text) + "'");
        }
        if (v < 0.0) {
            throw DataError(path.string() + ":" + std::to_string(line_no) +
                            ": negative value " + std::string(text));
        }
        values.push_back(v);
    }
    if (file.bad()) {
        throw DataError("error while reading '" + path.string() + "'");
    }
    return values;
}

OutputTable cmd_estimate(const std::filesystem::path& path, GiniOrder m) {
    auto values = read_data_file(path);
    const std::size_t n = values.size();
    if (n < static_cast<std::size_t>(m.value())) {
        throw DataError("data file has n = " + std::to_string(n) + " values, fewer than m = " +
                        std::to_string(m.value()));
    }
    double estimate = 0.0;
    try {
        estimate = ig_hat_fast(Sample(std::move(values)), m);
    } catch (const DegenerateSampleError&) {
        throw DataError("data values sum to zero; the estimator is undefined");
    }
    OutputTable table;
    table.header = {"n", "m", "ig_hat"};
    table.add_row({std::to_string(n), std::to_string(m.value()), format_number(estimate)});
    return table;
}

OutputTable simulation_table(const std::vector<sim::SimulationRecord>& records) {
    OutputTable table;
    table.header = kSimulationHeader;
    for (const auto& r : records) {
        table.add_row({r.dist_label, std::to_string(r.n), std::to_string(r.m),
                       format_number(r.bias), format_number(r.mse), format_number(r.se_bias),
                       std::to_string(r.n_sim), std::to_string(r.seed)});
    }
    return table;
}

std::vector<sim::SimulationRecord> parse_simulation_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || csv_split(line) != kSimulationHeader) {
        throw DataError("simulation CSV: unexpected header");
    }
    std::vector<sim::SimulationRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = csv_split(line);
        if (cells.size() != kSimulationHeader.size()) {
            throw DataError("simulation CSV: row has " + std::to_string(cells.size()) + " cells");
        }
        try {
            sim::SimulationRecord r;
            r.dist_label = cells[0];
            r.n = parse_integer<int>(cells[1], "n");
            r.m = parse_integer<int>(cells[2], "m");
            r.bias = parse_double(cells[3], "bias");
            r.mse = parse_double(cells[4], "mse");
            r.se_bias = parse_double(cells[5], "se_bias");
            r.n_sim = parse_integer<int>(cells[6], "n_sim");
            r.seed = parse_integer<std::uint64_t>(cells[7], "seed");
            records.push_back(std::move(r));
        } catch (const std::invalid_argument& e) {
            throw DataError(std::string("simulation CSV: ") + e.what());
        }
    }
    return records;
}

OutputTable cmd_simulate(const std::vector<sim::SimulationConfig>& configs,
                         std::ostream& diagnostics) {
    for (const auto& c : configs) {
        try {
            c.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("simulate: ") + e.what());
        }
    }
    std::vector<sim::SimulationRecord> all;
    for (const auto& c : configs) {
        auto records = sim::run_simulation(c);
        for (const auto& r : records) {
            if (r.rejected > 0) {
                diagnostics << "warning: " << r.dist_label << " n=" << r.n << ": " << r.rejected
                            << " replicate(s) rejected (zero-sum sample)\n";
            }
        }
        all.insert(all.end(), records.begin(), records.end());
    }
    return simulation_table(all);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"m-th Gini index: population values, sample estimates and simulation"};
    app.require_subcommand(1);

    // population
    auto* population = app.add_subcommand("population", "Population index IG_m");
    std::string pop_dist;
    int pop_m = 2;
    double pop_rel_tol = quad::QuadratureConfig{}.rel_tol;
    std::optional<int> verify_n;
    population->add_option("dist", pop_dist, "exp:LAMBDA or gamma:ALPHA,LAMBDA")->required();
    population->add_option("-m,--m,--order", pop_m, "Subset size m >= 2")->capture_default_str();
    population->add_option("--rel-tol", pop_rel_tol, "Quadrature relative tolerance (absolute = rel/100)")
        ->capture_default_str();
    population->add_option("--verify-unbiased", verify_n,
                           "Also evaluate E[estimator] at this sample size");

    // estimate
    auto* estimate = app.add_subcommand("estimate", "Sample index from a data file");
    std::string est_path;
    int est_m = 2;
    estimate->add_option("path", est_path, "One non-negative value per line")->required();
    estimate->add_option("-m,--m,--order", est_m, "Subset size m >= 2")->capture_default_str();

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo bias and MSE");
    std::vector<std::string> sim_dists;
    int sim_m = 3;
    std::vector<int> sim_sizes = {5, 10, 30, 50, 100};
    int sim_nsim = 1000;
    std::uint64_t sim_seed = 42;
    unsigned sim_threads = 0;
    double sim_rel_tol = quad::QuadratureConfig{}.rel_tol;
    std::string sim_out;
    simulate->add_option("--dist", sim_dists, "Population(s); default exp:1 and gamma:2,1");
    simulate->add_option("-m,--m,--order", sim_m, "Subset size m >= 2")->capture_default_str();
    simulate->add_option("--sizes", sim_sizes, "Comma-separated sample sizes")
        ->delimiter(',')
        ->capture_default_str();
    simulate->add_option("--nsim", sim_nsim, "Replicates per cell")->capture_default_str();
    simulate->add_option("--seed", sim_seed, "Master seed")->capture_default_str();
    simulate->add_option("--threads", sim_threads, "Worker threads (0 = all cores)")
        ->capture_default_str();
    simulate->add_option("--rel-tol", sim_rel_tol, "Quadrature relative tolerance (absolute = rel/100)")
        ->capture_default_str();
    simulate->add_option("--out", sim_out, "Also write the CSV here");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (population->parsed()) {
            const auto dist = dist_flag(pop_dist, "dist");
            out << cmd_population(dist, order_flag(pop_m), quadrature_flag(pop_rel_tol), verify_n)
                       .to_csv();
        } else if (estimate->parsed()) {
            out << cmd_estimate(est_path, order_flag(est_m)).to_csv();
        } else if (simulate->parsed()) {
            if (sim_dists.empty()) {
                sim_dists = {"exp:1", "gamma:2,1"};
            }
            const auto m = order_flag(sim_m);
            std::vector<sim::SimulationConfig> configs;
            for (const auto& spec : sim_dists) {
                sim::SimulationConfig c;
                c.dist = dist_flag(spec, "--dist");
                c.sizes = sim_sizes;
                c.m = m;
                c.n_sim = sim_nsim;
                c.seed = sim_seed;
                c.threads = sim_threads;
                c.quadrature = quadrature_flag(sim_rel_tol);
                configs.push_back(std::move(c));
            }
            const std::string csv = cmd_simulate(configs, err).to_csv();
            if (!sim_out.empty()) {
                write_atomically(sim_out, csv);
            }
            out << csv;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return kData;
    } catch (const quad::ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kNumerical;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kData;
    }
    return kOk;
}

}  // namespace mgini::cli
