#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kink::io {

/// Decimal text with 17 significant digits; parses back to the same double.
std::string format_double(double v);

/// Shortest decimal text that parses back to v (used for labels and paths).
std::string format_short(double v);

/// Strict parse: the whole string must be one finite number.
/// Throws std::invalid_argument otherwise.
double parse_double(std::string_view text);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;

    std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
    const std::vector<double>& column(std::string_view name) const;
};

/// Header row plus one row per sample; every column must have equal length.
void write_csv(const std::filesystem::path& path, std::span<const std::string> header,
               std::span<const std::vector<double>> columns);

/// Throws std::runtime_error on unreadable or malformed input.
CsvTable read_csv(const std::filesystem::path& path);

}  // namespace kink::io
