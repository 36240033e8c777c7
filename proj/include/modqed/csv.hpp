// csv.hpp -- deterministic numeric text output.  Doubles are written in the
// shortest form that parses back to the identical value, so repeated runs
// produce byte-identical files.
#pragma once

#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>

namespace modqed {

std::string format_double(double x);
std::string format_fixed(double x, int digits);  // fixed-point, for plot coordinates

// header from column names, then n_rows lines of cell(row, col)
void write_csv(const std::filesystem::path& path, std::span<const std::string_view> cols,
               std::size_t n_rows, const std::function<double(std::size_t, std::size_t)>& cell);

} // namespace modqed
