// oracle.cpp -- exact two-state amplitude evolution and observable
// reconstruction.  Kept deliberately separate from the observable-level
// systems: different state space, different derivation, and integrated with
// the collocation stepper so the cross-check does not share a code path with
// the production default.
#include "modqed/oracle.hpp"

#include <cmath>

namespace modqed {

namespace {
double fock_n(const ModelParams& p) {
    const double nn = p.N - 0.5;
    const double r = std::llround(nn);
    if (nn < -1e-9 || std::abs(nn - r) > 1e-9)
        throw NonFockN("amplitude reference needs N = n + 1/2 with integer n >= 0; got N=" +
                       std::to_string(p.N));
    return r;
}
}

AmplitudeSystem::AmplitudeSystem(const ModelParams& params)
    : p(params), kappa(params.g * std::sqrt(fock_n(params) + 1.0)) {}

void AmplitudeSystem::rhs(double t, std::span<const double> y, std::span<double> f) const {
    const double hd = 0.5 * detuning(p, t);
    // y = (ue, ve, ug, vg); ce' = -i(hd ce + kappa cg), cg' = -i(kappa ce - hd cg)
    f[0] = hd * y[1] + kappa * y[3];
    f[1] = -(hd * y[0] + kappa * y[2]);
    f[2] = kappa * y[1] - hd * y[3];
    f[3] = -(kappa * y[0] - hd * y[2]);
}

void AmplitudeSystem::jacobian(double t, std::span<const double>, std::span<double> jac) const {
    const double hd = 0.5 * detuning(p, t);
    const double k = kappa;
    const double J[16] = {0,  hd, 0,  k,
                          -hd, 0, -k,  0,
                          0,   k, 0, -hd,
                          -k,  0, hd,  0};
    for (int i = 0; i < 16; ++i) jac[i] = J[i];
}

void AmplitudeSystem::dfdt(double t, std::span<const double> y, std::span<double> g) const {
    const double hdd = 0.5 * detuning_dot(p, t);
    g[0] = hdd * y[1];
    g[1] = -hdd * y[0];
    g[2] = -hdd * y[3];
    g[3] = hdd * y[2];
}

std::vector<double> oracle_initial_amplitudes() { return {1.0, 0.0, 0.0, 0.0}; }

double amplitude_norm(std::span<const double> y) {
    return y[0] * y[0] + y[1] * y[1] + y[2] * y[2] + y[3] * y[3];
}

void amplitudes_to_observables(std::span<const double> y, double kappa, std::span<double> out) {
    const double ue = y[0], ve = y[1], ug = y[2], vg = y[3];
    out[0] = 0.5 * (ue * ue + ve * ve - ug * ug - vg * vg);   // sz
    out[1] = 2.0 * kappa * (ue * vg - ve * ug);               // d sz / dt
    out[2] = 2.0 * kappa * (ue * ug + ve * vg);               // quadrature c
}

TimeSeries oracle_expectations(const ModelParams& p, double t0, double dt, std::size_t n,
                               const IntegrateOptions& opt) {
    AmplitudeSystem sys(p);
    const auto y0 = oracle_initial_amplitudes();
    const TimeSeries amps = sample_uniform(sys, StepperKind::ImplicitRK, y0, t0, dt, n, opt);

    TimeSeries ts;
    ts.t0 = t0;
    ts.dt = dt;
    ts.dim = 3;
    ts.data.resize(3 * amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i)
        amplitudes_to_observables(amps.row(i), sys.kappa,
                                  std::span<double>(ts.data).subspan(3 * i, 3));
    return ts;
}

} // namespace modqed
