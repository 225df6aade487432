#include "mgini/format.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace mgini {

std::string format_number(double value) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_number: conversion failed");
    }
    std::string shortest(buf.data(), end);

    std::size_t digits = 0;
    bool leading = true;
    for (char c : shortest) {
        if (c == 'e' || c == 'E') break;
        if (c < '0' || c > '9') continue;
        if (leading && c == '0') continue;
        leading = false;
        ++digits;
    }
    if (digits <= 10) {
        return shortest;
    }
    auto [end10, ec10] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                       std::chars_format::general, 10);
    if (ec10 != std::errc{}) {
        throw std::runtime_error("format_number: conversion failed");
    }
    return std::string(buf.data(), end10);
}

void OutputTable::add_row(std::vector<std::string> row) {
    if (row.size() != header.size()) {
        throw std::logic_error("OutputTable: row has " + std::to_string(row.size()) +
                               " cells, header has " + std::to_string(header.size()));
    }
    rows.push_back(std::move(row));
}

std::string OutputTable::to_csv() const {
    std::string out;
    auto append_line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) out += ',';
            out += csv_escape(cells[i]);
        }
        out += '\n';
    };
    append_line(header);
    for (const auto& row : rows) {
        append_line(row);
    }
    return out;
}

std::string csv_escape(std::string_view cell) {
    if (cell.find_first_of(",\"\n") == std::string_view::npos) {
        return std::string(cell);
    }
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> csv_split(std::string_view line) {
    std::vector<std::string> cells;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            cells.push_back(std::move(current));
            current.clear();
        } else if (c != '\r') {
            current += c;
        }
    }
    cells.push_back(std::move(current));
    return cells;
}

}  // namespace mgini
