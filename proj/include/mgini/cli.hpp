#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mgini/distribution.hpp"
#include "mgini/format.hpp"
#include "mgini/population.hpp"
#include "mgini/quadrature.hpp"
#include "mgini/simulate.hpp"

namespace mgini::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kData = 2,
    kNumerical = 3,
};

/// Bad flags or flag values.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input data.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

OutputTable cmd_population(const Distribution& dist, GiniOrder m,
                           const quad::QuadratureConfig& config,
                           std::optional<int> verify_unbiased_n);

/// Reads one value per line; blank lines and text after '#' are ignored.
/// Throws DataError naming the file and line on any problem.
std::vector<double> read_data_file(const std::filesystem::path& path);

OutputTable cmd_estimate(const std::filesystem::path& path, GiniOrder m);

OutputTable simulation_table(const std::vector<sim::SimulationRecord>& records);

/// Parses the CSV written by `simulate` back into records.
std::vector<sim::SimulationRecord> parse_simulation_csv(const std::string& csv);

/// Runs every config in order; throws before anything is written if any
/// configuration is invalid.
OutputTable cmd_simulate(const std::vector<sim::SimulationConfig>& configs,
                         std::ostream& diagnostics);

/// Full command-line entry point; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mgini::cli
