#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mgini {

/// Shortest decimal that round-trips, falling back to 10 significant digits
/// when the shortest form would need more.
std::string format_number(double value);

/// Header plus rows of preformatted cells.
struct OutputTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Throws std::logic_error if the row width differs from the header.
    void add_row(std::vector<std::string> row);
    std::string to_csv() const;
};

/// RFC 4180 quoting for a single cell.
std::string csv_escape(std::string_view cell);

/// Splits one CSV line, honouring double-quoted cells.
std::vector<std::string> csv_split(std::string_view line);

}  // namespace mgini
