// rosenbrock.cpp -- 4(3) Kaps-Rentrop pair with Shampine's coefficient set.
// Linearly implicit: one LU factorization and four triangular solves per step,
// no Newton iteration, which suits mildly stiff oscillatory problems.
#include "modqed/ode.hpp"

#include <cmath>

namespace modqed {

namespace {

constexpr double GAM = 0.5;
constexpr double A21 = 2.0, A31 = 48.0 / 25.0, A32 = 6.0 / 25.0;
constexpr double C21 = -8.0, C31 = 372.0 / 25.0, C32 = 12.0 / 5.0;
constexpr double C41 = -112.0 / 125.0, C42 = -54.0 / 125.0, C43 = -2.0 / 5.0;
constexpr double B1 = 19.0 / 9.0, B2 = 0.5, B3 = 25.0 / 108.0, B4 = 125.0 / 108.0;
constexpr double E1 = 17.0 / 54.0, E2 = 7.0 / 36.0, E3 = 0.0, E4 = 125.0 / 108.0;
constexpr double C1X = 0.5, C2X = -1.5, C3X = 121.0 / 50.0, C4X = 29.0 / 250.0;
constexpr double A2X = 1.0, A3X = 3.0 / 5.0;

class RosenbrockStepper final : public Stepper {
public:
    RosenbrockStepper(int dim, double atol, double rtol)
        : n(dim), atol(atol), rtol(rtol), jac(dim, dim), f0(dim), ft(dim), fs(dim), yt(dim),
          g1(dim), g2(dim), g3(dim), g4(dim), ev(dim) {}

    double attempt(const OdeSystem& sys, double t, std::span<const double> y, double h,
                   std::span<double> ynew) override {
        sys.rhs(t, y, f0);
        sys.dfdt(t, y, ft);
        sys.jacobian(t, y, jac.a);

        Matrix A(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) A(i, j) = -jac(i, j);
            A(i, i) += 1.0 / (GAM * h);
        }
        const LuFactors lu = lu_factor(std::move(A));

        for (int i = 0; i < n; ++i) g1[i] = f0[i] + h * C1X * ft[i];
        lu_solve(lu, g1);

        for (int i = 0; i < n; ++i) yt[i] = y[i] + A21 * g1[i];
        sys.rhs(t + A2X * h, yt, fs);
        for (int i = 0; i < n; ++i) g2[i] = fs[i] + h * C2X * ft[i] + C21 * g1[i] / h;
        lu_solve(lu, g2);

        for (int i = 0; i < n; ++i) yt[i] = y[i] + A31 * g1[i] + A32 * g2[i];
        sys.rhs(t + A3X * h, yt, fs);
        for (int i = 0; i < n; ++i)
            g3[i] = fs[i] + h * C3X * ft[i] + (C31 * g1[i] + C32 * g2[i]) / h;
        lu_solve(lu, g3);

        // the fourth stage reuses the third right-hand side evaluation
        for (int i = 0; i < n; ++i)
            g4[i] = fs[i] + h * C4X * ft[i] + (C41 * g1[i] + C42 * g2[i] + C43 * g3[i]) / h;
        lu_solve(lu, g4);

        for (int i = 0; i < n; ++i) {
            ynew[i] = y[i] + B1 * g1[i] + B2 * g2[i] + B3 * g3[i] + B4 * g4[i];
            ev[i] = E1 * g1[i] + E2 * g2[i] + E3 * g3[i] + E4 * g4[i];
        }
        return scaled_error_norm(ev, y, ynew, atol, rtol);
    }

private:
    int n;
    double atol, rtol;
    Matrix jac;
    std::vector<double> f0, ft, fs, yt, g1, g2, g3, g4, ev;
};

} // namespace

std::unique_ptr<Stepper> make_rosenbrock(int dim, double atol, double rtol) {
    return std::make_unique<RosenbrockStepper>(dim, atol, rtol);
}

} // namespace modqed
