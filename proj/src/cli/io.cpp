#include "kink/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kink::io {

std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string format_short(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view text)
{
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
        text.remove_prefix(1);
    }
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size() ||
        !std::isfinite(v)) {
        throw std::invalid_argument("not a finite number: '" + std::string(text) + "'");
    }
    return v;
}

const std::vector<double>& CsvTable::column(std::string_view name) const
{
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c] == name) {
            return columns[c];
        }
    }
    throw std::runtime_error("csv: no column named '" + std::string(name) + "'");
}

void write_csv(const std::filesystem::path& path, std::span<const std::string> header,
               std::span<const std::vector<double>> columns)
{
    if (header.size() != columns.size()) {
        throw std::invalid_argument("csv: header and column counts differ");
    }
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (const auto& c : columns) {
        if (c.size() != rows) {
            throw std::invalid_argument("csv: columns of unequal length");
        }
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("csv: cannot open " + path.string() + " for writing");
    }
    for (std::size_t c = 0; c < header.size(); ++c) {
        out << (c ? "," : "") << header[c];
    }
    out << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            out << (c ? "," : "") << format_double(columns[c][r]);
        }
        out << '\n';
    }
    if (!out) {
        throw std::runtime_error("csv: write to " + path.string() + " failed");
    }
}

namespace {

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

}  // namespace

CsvTable read_csv(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("csv: cannot open " + path.string());
    }

    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("csv: " + path.string() + " is empty");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    table.header = split(line);
    table.columns.assign(table.header.size(), {});

    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const auto cells = split(line);
        if (cells.size() != table.header.size()) {
            throw std::runtime_error("csv: line " + std::to_string(lineno) + " has " +
                                     std::to_string(cells.size()) + " fields, expected " +
                                     std::to_string(table.header.size()));
        }
        for (std::size_t c = 0; c < cells.size(); ++c) {
            try {
                table.columns[c].push_back(parse_double(cells[c]));
            } catch (const std::invalid_argument& e) {
                throw std::runtime_error("csv: line " + std::to_string(lineno) + ": " + e.what());
            }
        }
    }
    return table;
}

}  // namespace kink::io
