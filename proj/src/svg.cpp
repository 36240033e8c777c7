// svg.cpp -- framed line/scatter plots with corner range labels.
#include "modqed/svg.hpp"

#include "modqed/csv.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace modqed {

namespace {

constexpr double W = 720, H = 480, ML = 70, MR = 20, MT = 40, MB = 50;

struct Range {
    double lo = 0, hi = 1;
    double map(double v, double a, double b) const {
        return a + (v - lo) / (hi - lo) * (b - a);
    }
};

Range span_of(std::span<const double> v) {
    Range r;
    if (v.empty()) return r;
    const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
    r.lo = *mn;
    r.hi = *mx;
    if (r.hi == r.lo) { r.lo -= 0.5; r.hi += 0.5; }
    const double pad = 0.04 * (r.hi - r.lo);
    r.lo -= pad;
    r.hi += pad;
    return r;
}

void emit_frame(std::ofstream& out, const PlotData& d, const Range& rx, const Range& ry) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    out << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    out << "<rect x=\"" << ML << "\" y=\"" << MT << "\" width=\"" << W - ML - MR
        << "\" height=\"" << H - MT - MB
        << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\""
        << " font-size=\"15\">" << d.title << "</text>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"" << H - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << d.x_label
        << "</text>\n";
    out << "<text x=\"16\" y=\"" << H / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\""
        << " transform=\"rotate(-90 16 " << H / 2 << ")\">" << d.y_label << "</text>\n";
    // corner range labels
    out << "<text x=\"" << ML << "\" y=\"" << H - MB + 16
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << format_fixed(rx.lo, 3)
        << "</text>\n";
    out << "<text x=\"" << W - MR << "\" y=\"" << H - MB + 16
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << format_fixed(rx.hi, 3) << "</text>\n";
    out << "<text x=\"" << ML - 4 << "\" y=\"" << H - MB
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << format_fixed(ry.lo, 3) << "</text>\n";
    out << "<text x=\"" << ML - 4 << "\" y=\"" << MT + 10
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << format_fixed(ry.hi, 3) << "</text>\n";
}

std::ofstream open_or_throw(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    return out;
}

} // namespace

void write_line_svg(const std::filesystem::path& path, const PlotData& d) {
    if (d.x.size() != d.y.size()) throw std::invalid_argument("svg: x/y length mismatch");
    auto out = open_or_throw(path);
    const Range rx = span_of(d.x), ry = span_of(d.y);
    emit_frame(out, d, rx, ry);
    out << "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < d.x.size(); ++i) {
        if (i) out << ' ';
        out << format_fixed(rx.map(d.x[i], ML, W - MR), 2) << ','
            << format_fixed(ry.map(d.y[i], H - MB, MT), 2);
    }
    out << "\"/>\n</svg>\n";
    if (!out) throw std::runtime_error("short write to '" + path.string() + "'");
}

void write_scatter_svg(const std::filesystem::path& path, const PlotData& d) {
    if (d.x.size() != d.y.size()) throw std::invalid_argument("svg: x/y length mismatch");
    auto out = open_or_throw(path);
    const Range rx = span_of(d.x), ry = span_of(d.y);
    emit_frame(out, d, rx, ry);
    for (std::size_t i = 0; i < d.x.size(); ++i)
        out << "<circle cx=\"" << format_fixed(rx.map(d.x[i], ML, W - MR), 2) << "\" cy=\""
            << format_fixed(ry.map(d.y[i], H - MB, MT), 2) << "\" r=\"1.6\" fill=\"#b23a1f\"/>\n";
    out << "</svg>\n";
    if (!out) throw std::runtime_error("short write to '" + path.string() + "'");
}

} // namespace modqed
