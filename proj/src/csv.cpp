// csv.cpp -- shortest round-trip double formatting and plain CSV output.
#include "modqed/csv.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace modqed {

std::string format_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string format_fixed(double x, int digits) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::fixed, digits);
    if (res.ec != std::errc{}) return format_double(x);  // out-of-range magnitude
    return std::string(buf, res.ptr);
}

void write_csv(const std::filesystem::path& path, std::span<const std::string_view> cols,
               std::size_t n_rows, const std::function<double(std::size_t, std::size_t)>& cell) {
    std::ofstream out(path, std::ios::binary);  // binary: no newline translation anywhere
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");

    std::string line;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (j) line += ',';
        line += cols[j];
    }
    line += '\n';
    out << line;

    for (std::size_t i = 0; i < n_rows; ++i) {
        line.clear();
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (j) line += ',';
            line += format_double(cell(i, j));
        }
        line += '\n';
        out << line;
    }
    if (!out) throw std::runtime_error("short write to '" + path.string() + "'");
}

} // namespace modqed
