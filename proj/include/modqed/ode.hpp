// ode.hpp -- adaptive stiff integration.  Two independent steppers: a 4(3)
// linearly implicit Rosenbrock pair and a fifth-order fully implicit
// collocation method, behind one error-controlled driver, plus sampling of
// trajectories onto uniform grids.
#pragma once

#include "modqed/linalg.hpp"
#include "modqed/model.hpp"

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace modqed {

struct StepUnderflow : std::runtime_error {
    explicit StepUnderflow(double t)
        : std::runtime_error("step size underflow at t=" + std::to_string(t)), t_reached(t) {}
    double t_reached;
};

struct MaxStepsExceeded : std::runtime_error {
    explicit MaxStepsExceeded(double t)
        : std::runtime_error("step budget exhausted at t=" + std::to_string(t)), t_reached(t) {}
    double t_reached;
};

// internal stepper failure; the driver retries with a shorter step
struct NewtonDivergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class StepperKind { Rosenbrock, ImplicitRK };

struct IntegrateOptions {
    double h_init = 1e-7;
    double atol = 1e-10;
    double rtol = 1e-9;
    long max_steps = 10'000'000;
};

struct DriverStats {
    long attempted = 0;
    long accepted = 0;
    long rejected = 0;
    long nonlinear_failures = 0;
};

// one trial step; returns the scaled error estimate (acceptable at <= 1)
class Stepper {
public:
    virtual ~Stepper() = default;
    virtual double attempt(const OdeSystem& sys, double t, std::span<const double> y,
                           double h, std::span<double> ynew) = 0;
};

std::unique_ptr<Stepper> make_rosenbrock(int dim, double atol, double rtol);
std::unique_ptr<Stepper> make_implicit_rk(int dim, double atol, double rtol);
std::unique_ptr<Stepper> make_stepper(StepperKind kind, int dim, double atol, double rtol);

// RMS of the componentwise errors scaled by atol + rtol max(|y0|, |y1|)
double scaled_error_norm(std::span<const double> err, std::span<const double> y0,
                         std::span<const double> y1, double atol, double rtol);

// advance y from t0 to exactly t1
void integrate(const OdeSystem& sys, StepperKind kind, double t0, std::span<double> y,
               double t1, const IntegrateOptions& opt = {}, DriverStats* stats = nullptr);

struct TimeSeries {
    double t0 = 0, dt = 0;
    int dim = 0;
    std::vector<double> data;  // row-major, size() rows of dim

    std::size_t size() const { return dim ? data.size() / dim : 0; }
    double t(std::size_t i) const { return t0 + dt * static_cast<double>(i); }
    double operator()(std::size_t i, int j) const { return data[i * dim + j]; }
    std::span<const double> row(std::size_t i) const {
        return {data.data() + i * dim, static_cast<std::size_t>(dim)};
    }
    std::vector<double> component(int j) const;
};

// integrate segment by segment so every sample lands exactly on t0 + i dt;
// each segment restarts from opt.h_init
TimeSeries sample_uniform(const OdeSystem& sys, StepperKind kind, std::span<const double> y0,
                          double t0, double dt, std::size_t n, const IntegrateOptions& opt = {});

} // namespace modqed
