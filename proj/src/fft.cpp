// fft.cpp -- iterative radix-2 decimation-in-time transform and the one-sided
// periodogram built on it.
#include "modqed/analysis.hpp"

#include <cmath>

namespace modqed {

void fft_inplace(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    if (n < 2 || (n & (n - 1)))
        throw NotPowerOfTwo("fft length " + std::to_string(n) + " is not a power of two (>= 2)");

    // bit-reverse shuffle
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len >> 1;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                // direct twiddles: slower than a recurrence but free of drift
                const auto w = std::polar(1.0, -2.0 * pi * static_cast<double>(k) /
                                                   static_cast<double>(len));
                const auto u = a[i + k];
                const auto v = a[i + k + half] * w;
                a[i + k] = u + v;
                a[i + k + half] = u - v;
            }
        }
    }
}

Periodogram periodogram(std::span<const double> y, double dt) {
    const std::size_t n = y.size();
    if (!(dt > 0)) throw std::invalid_argument("periodogram: dt must be positive");
    std::vector<std::complex<double>> a(y.begin(), y.end());
    fft_inplace(a);  // validates the length

    Periodogram pg;
    pg.df = 1.0 / (static_cast<double>(n) * dt);
    pg.power.resize(n / 2 + 1);
    const double n2 = static_cast<double>(n) * static_cast<double>(n);
    pg.power[0] = std::norm(a[0]) / n2;
    for (std::size_t k = 1; k < n / 2; ++k)
        pg.power[k] = (std::norm(a[k]) + std::norm(a[n - k])) / n2;
    pg.power[n / 2] = std::norm(a[n / 2]) / n2;
    return pg;
}

} // namespace modqed
