// integrate.cpp -- the adaptive driver shared by both steppers, and sampling
// onto uniform grids.
#include "modqed/ode.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>

namespace modqed {

std::unique_ptr<Stepper> make_stepper(StepperKind kind, int dim, double atol, double rtol) {
    return kind == StepperKind::Rosenbrock ? make_rosenbrock(dim, atol, rtol)
                                           : make_implicit_rk(dim, atol, rtol);
}

double scaled_error_norm(std::span<const double> err, std::span<const double> y0,
                         std::span<const double> y1, double atol, double rtol) {
    double sum = 0;
    for (std::size_t i = 0; i < err.size(); ++i) {
        const double sc = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
        const double e = err[i] / sc;
        sum += e * e;
    }
    return std::sqrt(sum / static_cast<double>(err.size()));
}

void integrate(const OdeSystem& sys, StepperKind kind, double t0, std::span<double> y,
               double t1, const IntegrateOptions& opt, DriverStats* stats) {
    if (t1 == t0) return;
    if (t1 < t0) throw std::invalid_argument("integrate: backward spans are not supported");
    if (!(opt.h_init > 0) || !(opt.atol > 0) || !(opt.rtol > 0))
        throw std::invalid_argument("integrate: h_init, atol, rtol must be positive");

    const int n = sys.dim();
    auto st = make_stepper(kind, n, opt.atol, opt.rtol);
    std::vector<double> ynew(n);

    double t = t0;
    double h = std::min(opt.h_init, t1 - t0);
    bool reject_prev = false;
    long attempts = 0;

    while (t < t1) {
        const double left = t1 - t;
        const bool last = h >= left;
        const double hu = last ? left : h;
        if (hu < 16.0 * DBL_EPSILON * std::max(std::abs(t), 1.0)) throw StepUnderflow(t);
        if (++attempts > opt.max_steps) throw MaxStepsExceeded(t);

        double errn = 2.0;
        bool nlfail = false;
        try {
            errn = st->attempt(sys, t, y, hu, ynew);
        } catch (const NewtonDivergence&) {
            nlfail = true;
        } catch (const LinearSolveFailure&) {
            nlfail = true;
        }
        if (stats) {
            ++stats->attempted;
            if (nlfail) ++stats->nonlinear_failures;
        }

        if (!nlfail && errn <= 1.0) {
            std::copy(ynew.begin(), ynew.end(), y.begin());
            if (stats) ++stats->accepted;
            if (last) { t = t1; break; }
            t += hu;
            double fac = errn <= 0 ? 5.0 : std::min(5.0, 0.9 * std::pow(errn, -0.25));
            if (reject_prev) fac = std::min(fac, 1.0);  // no growth right after a rejection
            h = hu * fac;
            reject_prev = false;
        } else {
            if (stats) ++stats->rejected;
            reject_prev = true;
            const double fac = nlfail ? 0.5 : std::fmax(0.2, 0.9 * std::pow(errn, -1.0 / 3.0));
            h = hu * fac;
        }
    }
}

std::vector<double> TimeSeries::component(int j) const {
    std::vector<double> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = data[i * dim + j];
    return out;
}

TimeSeries sample_uniform(const OdeSystem& sys, StepperKind kind, std::span<const double> y0,
                          double t0, double dt, std::size_t n, const IntegrateOptions& opt) {
    if (!(dt > 0) || n == 0) throw std::invalid_argument("sample_uniform: need dt > 0 and n > 0");
    if (y0.size() != static_cast<std::size_t>(sys.dim()))
        throw std::invalid_argument("sample_uniform: initial state has the wrong dimension");

    TimeSeries ts;
    ts.t0 = t0;
    ts.dt = dt;
    ts.dim = sys.dim();
    ts.data.reserve(n * y0.size());
    std::vector<double> y(y0.begin(), y0.end());
    ts.data.insert(ts.data.end(), y.begin(), y.end());
    for (std::size_t i = 1; i < n; ++i) {
        integrate(sys, kind, t0 + dt * static_cast<double>(i - 1), y,
                  t0 + dt * static_cast<double>(i), opt);
        ts.data.insert(ts.data.end(), y.begin(), y.end());
    }
    return ts;
}

} // namespace modqed
