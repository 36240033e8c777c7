// svg.hpp -- minimal standalone plots: a framed data box with corner range
// labels and either a polyline or a dot cloud.  No external tooling needed to
// look at a run.
#pragma once

#include <filesystem>
#include <span>
#include <string>

namespace modqed {

struct PlotData {
    std::span<const double> x, y;
    std::string x_label, y_label, title;
};

void write_line_svg(const std::filesystem::path& path, const PlotData& d);
void write_scatter_svg(const std::filesystem::path& path, const PlotData& d);

} // namespace modqed
