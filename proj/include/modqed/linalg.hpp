// linalg.hpp -- dense LU with partial pivoting, sized for the small stage
// systems of the implicit steppers (at most 3 * dim rows).
#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace modqed {

struct LinearSolveFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Matrix {
    int n = 0, m = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(int rows, int cols) : n(rows), m(cols), a(static_cast<std::size_t>(rows) * cols, 0.0) {}

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * m + j]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * m + j]; }
};

struct LuFactors {
    Matrix lu;
    std::vector<int> piv;
};

LuFactors lu_factor(Matrix A);                       // throws LinearSolveFailure on a vanishing pivot
void lu_solve(const LuFactors& f, std::span<double> x);  // in place

} // namespace modqed
