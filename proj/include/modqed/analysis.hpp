// analysis.hpp -- spectral and stroboscopic diagnostics for sampled
// trajectories: one-sided periodogram, peak extraction, phase-space sections.
#pragma once

#include "modqed/ode.hpp"

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace modqed {

struct NotPowerOfTwo : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StrobeTooFine : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// in-place forward transform, radix-2 decimation in time
void fft_inplace(std::vector<std::complex<double>>& a);

struct Periodogram {
    double df = 0;               // bin spacing in cycles per unit time
    std::vector<double> power;   // one-sided, bins 0 .. n/2
    double freq(std::size_t k) const { return df * static_cast<double>(k); }
};

// P[0] = |Y0|^2/n^2, P[k] = (|Yk|^2 + |Y(n-k)|^2)/n^2, P[n/2] = |Y(n/2)|^2/n^2,
// so the bins sum to the mean squared signal
Periodogram periodogram(std::span<const double> y, double dt);

struct Peak {
    std::size_t bin = 0;
    double freq = 0;
    double power = 0;
};

// strict local maxima sorted by power, strongest first; a flat plateau counts
// once, by its leftmost bin; the endpoints are judged one-sided
std::vector<Peak> dominant_peaks(const Periodogram& pg);

// peaks carrying more than frac of the strongest peak's power
std::size_t count_dominant(const std::vector<Peak>& peaks, double frac = 0.01);

// (s, v*vscale) sampled at the grid point nearest each multiple of period;
// the grid must resolve a strobe period by at least 4 samples
std::vector<std::array<double, 2>> poincare_section(const TimeSeries& ts, double period,
                                                    double vscale);

double dispersion(std::span<const std::array<double, 2>> pts);  // max pairwise distance
std::size_t distinct_points(std::span<const std::array<double, 2>> pts);

// largest |a - b| over components [c0, c1); the series must share their grid
double max_abs_dev(const TimeSeries& a, const TimeSeries& b, int c0, int c1);

} // namespace modqed
