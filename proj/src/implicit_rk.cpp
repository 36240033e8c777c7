// implicit_rk.cpp -- three-stage Radau IIA collocation, order 5, stiffly
// accurate.  The stage system is solved by simplified Newton with the
// Jacobian frozen at the step start; the dimension is small enough that the
// stacked 3n x 3n matrix is factored dense.
#include "modqed/ode.hpp"

#include <cmath>

namespace modqed {

namespace {

const double S6 = std::sqrt(6.0);
const double C[3] = {(4.0 - S6) / 10.0, (4.0 + S6) / 10.0, 1.0};
const double A[3][3] = {
    {(88.0 - 7.0 * S6) / 360.0, (296.0 - 169.0 * S6) / 1800.0, (-2.0 + 3.0 * S6) / 225.0},
    {(296.0 + 169.0 * S6) / 1800.0, (88.0 + 7.0 * S6) / 360.0, (-2.0 - 3.0 * S6) / 225.0},
    {(16.0 - S6) / 36.0, (16.0 + S6) / 36.0, 1.0 / 9.0}};

// real eigenvalue magnitude of A^-1 and the weights of the embedded
// third-order error estimate
const double GAMMA_HAT = 3.637834252744496;
const double DD[3] = {-(13.0 + 7.0 * S6) / 3.0, (-13.0 + 7.0 * S6) / 3.0, -1.0 / 3.0};

constexpr int max_newton = 7;
constexpr double newton_tol = 0.03;  // in units of the local error tolerance

class RadauStepper final : public Stepper {
public:
    RadauStepper(int dim, double atol, double rtol)
        : n(dim), atol(atol), rtol(rtol), jac(dim, dim), f0(dim), yt(dim), yref(dim),
          Z(3 * dim), dZ(3 * dim), F(3 * dim), ev(dim) {}

    double attempt(const OdeSystem& sys, double t, std::span<const double> y, double h,
                   std::span<double> ynew) override {
        sys.jacobian(t, y, jac.a);

        Matrix M(3 * n, 3 * n);
        for (int bi = 0; bi < 3; ++bi)
            for (int bj = 0; bj < 3; ++bj)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        M(bi * n + i, bj * n + j) =
                            (bi == bj && i == j ? 1.0 : 0.0) - h * A[bi][bj] * jac(i, j);
        const LuFactors lu = lu_factor(std::move(M));

        std::fill(Z.begin(), Z.end(), 0.0);
        double dyno_prev = -1.0;
        bool converged = false;
        for (int it = 0; it < max_newton; ++it) {
            for (int s = 0; s < 3; ++s) {
                for (int i = 0; i < n; ++i) yt[i] = y[i] + Z[s * n + i];
                sys.rhs(t + C[s] * h, yt, std::span<double>(F).subspan(s * n, n));
            }
            for (int s = 0; s < 3; ++s)
                for (int i = 0; i < n; ++i)
                    dZ[s * n + i] = -Z[s * n + i] + h * (A[s][0] * F[i] + A[s][1] * F[n + i] +
                                                         A[s][2] * F[2 * n + i]);
            lu_solve(lu, dZ);

            double sum = 0;
            for (int s = 0; s < 3; ++s)
                for (int i = 0; i < n; ++i) {
                    const double sc = atol + rtol * std::abs(y[i]);
                    const double e = dZ[s * n + i] / sc;
                    sum += e * e;
                }
            const double dyno = std::sqrt(sum / (3.0 * n));
            for (std::size_t k = 0; k < Z.size(); ++k) Z[k] += dZ[k];

            if (dyno < newton_tol) { converged = true; break; }
            if (dyno_prev >= 0.0 && dyno >= dyno_prev)
                throw NewtonDivergence("stage iteration is not contracting");
            dyno_prev = dyno;
        }
        if (!converged) throw NewtonDivergence("stage iteration budget exhausted");

        // stiffly accurate: the solution is the last stage
        for (int i = 0; i < n; ++i) ynew[i] = y[i] + Z[2 * n + i];

        // embedded estimate: solve (GAMMA_HAT/h I - J) e = f0 + sum DD_s Z_s / h
        Matrix E(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) E(i, j) = -jac(i, j);
            E(i, i) += GAMMA_HAT / h;
        }
        const LuFactors lue = lu_factor(std::move(E));
        sys.rhs(t, y, f0);
        for (int i = 0; i < n; ++i)
            ev[i] = f0[i] + (DD[0] * Z[i] + DD[1] * Z[n + i] + DD[2] * Z[2 * n + i]) / h;
        lu_solve(lue, ev);
        double err = scaled_error_norm(ev, y, ynew, atol, rtol);

        if (err >= 1.0) {
            // stabilized second pass: re-evaluate at the perturbed state
            for (int i = 0; i < n; ++i) yref[i] = y[i] + ev[i];
            sys.rhs(t, yref, f0);
            for (int i = 0; i < n; ++i)
                ev[i] = f0[i] + (DD[0] * Z[i] + DD[1] * Z[n + i] + DD[2] * Z[2 * n + i]) / h;
            lu_solve(lue, ev);
            err = scaled_error_norm(ev, y, ynew, atol, rtol);
        }
        return err;
    }

private:
    int n;
    double atol, rtol;
    Matrix jac;
    std::vector<double> f0, yt, yref, Z, dZ, F, ev;
};

} // namespace

std::unique_ptr<Stepper> make_implicit_rk(int dim, double atol, double rtol) {
    return std::make_unique<RadauStepper>(dim, atol, rtol);
}

} // namespace modqed
