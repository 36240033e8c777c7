// analysis.cpp -- peak extraction and stroboscopic sections.
#include "modqed/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace modqed {

std::vector<Peak> dominant_peaks(const Periodogram& pg) {
    const auto& p = pg.power;
    const std::size_t m = p.size();
    std::vector<Peak> out;
    if (m < 2) return out;

    std::size_t k = 0;
    while (k < m) {
        std::size_t j = k + 1;
        while (j < m && p[j] == p[k]) ++j;  // plateau [k, j)
        const bool whole = (k == 0 && j == m);
        const bool left_ok = (k == 0) || (p[k] > p[k - 1]);
        const bool right_ok = (j == m) || (p[k] > p[j]);
        if (!whole && left_ok && right_ok) out.push_back({k, pg.freq(k), p[k]});
        k = j;
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Peak& a, const Peak& b) { return a.power > b.power; });
    return out;
}

std::size_t count_dominant(const std::vector<Peak>& peaks, double frac) {
    if (peaks.empty()) return 0;
    const double cut = frac * peaks.front().power;
    std::size_t c = 0;
    for (const auto& pk : peaks)
        if (pk.power > cut) ++c;
    return c;
}

std::vector<std::array<double, 2>> poincare_section(const TimeSeries& ts, double period,
                                                    double vscale) {
    if (ts.dim < 2) throw std::invalid_argument("poincare_section: need at least two components");
    if (!(period > 0) || !(ts.dt > 0))
        throw std::invalid_argument("poincare_section: need positive period and dt");
    const double per_samples = period / ts.dt;
    if (per_samples < 4.0)
        throw StrobeTooFine("grid resolves a strobe period by fewer than 4 samples");

    std::vector<std::array<double, 2>> out;
    const std::size_t nrows = ts.size();
    for (std::size_t m = 0;; ++m) {
        const auto idx = static_cast<std::size_t>(
            std::llround(static_cast<double>(m) * per_samples));
        if (idx >= nrows) break;
        out.push_back({ts(idx, 0), ts(idx, 1) * vscale});
    }
    return out;
}

double dispersion(std::span<const std::array<double, 2>> pts) {
    double best = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const double dx = pts[i][0] - pts[j][0];
            const double dy = pts[i][1] - pts[j][1];
            best = std::max(best, dx * dx + dy * dy);
        }
    return std::sqrt(best);
}

std::size_t distinct_points(std::span<const std::array<double, 2>> pts) {
    std::set<std::pair<double, double>> seen;
    for (const auto& p : pts) seen.insert({p[0], p[1]});
    return seen.size();
}

double max_abs_dev(const TimeSeries& a, const TimeSeries& b, int c0, int c1) {
    const double tol_t = 1e-12 * std::max({1.0, std::abs(a.t0), std::abs(a.dt)});
    if (a.size() != b.size() || std::abs(a.t0 - b.t0) > tol_t || std::abs(a.dt - b.dt) > tol_t)
        throw GridMismatch("series live on different grids");
    if (c0 < 0 || c1 > std::min(a.dim, b.dim) || c0 >= c1)
        throw std::invalid_argument("max_abs_dev: bad component range");
    double best = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (int j = c0; j < c1; ++j) best = std::max(best, std::abs(a(i, j) - b(i, j)));
    return best;
}

} // namespace modqed
