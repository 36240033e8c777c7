// linalg.cpp -- LU with partial pivoting, LAPACK-style row swaps.
#include "modqed/linalg.hpp"

#include <cmath>
#include <utility>

namespace modqed {

LuFactors lu_factor(Matrix A) {
    if (A.n != A.m) throw std::logic_error("lu_factor: square matrix required");
    const int n = A.n;
    std::vector<int> piv(n);
    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::abs(A(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(A(i, k));
            if (v > best) { best = v; p = i; }
        }
        if (!(best > 1e-300)) throw LinearSolveFailure("lu_factor: singular matrix");
        piv[k] = p;
        if (p != k)
            for (int j = 0; j < n; ++j) std::swap(A(k, j), A(p, j));
        const double inv = 1.0 / A(k, k);
        for (int i = k + 1; i < n; ++i) {
            const double l = A(i, k) * inv;
            A(i, k) = l;
            for (int j = k + 1; j < n; ++j) A(i, j) -= l * A(k, j);
        }
    }
    return {std::move(A), std::move(piv)};
}

void lu_solve(const LuFactors& f, std::span<double> x) {
    const Matrix& lu = f.lu;
    const int n = lu.n;
    for (int k = 0; k < n; ++k) {
        std::swap(x[k], x[f.piv[k]]);
        for (int i = k + 1; i < n; ++i) x[i] -= lu(i, k) * x[k];
    }
    for (int k = n - 1; k >= 0; --k) {
        double s = x[k];
        for (int j = k + 1; j < n; ++j) s -= lu(k, j) * x[j];
        x[k] = s / lu(k, k);
    }
}

} // namespace modqed
