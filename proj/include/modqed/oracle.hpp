// oracle.hpp -- reference integration of the exact two-state amplitude
// equations.  For a Fock field the model truncates to the pair
// {|e,n>, |g,n+1>}; evolving those amplitudes directly and reconstructing the
// observables gives an independent check on the observable-level systems.
#pragma once

#include "modqed/ode.hpp"

namespace modqed {

struct NonFockN : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// y = (Re ce, Im ce, Re cg, Im cg) with
//   i ce' = (delta/2) ce + kappa cg
//   i cg' = kappa ce - (delta/2) cg,     kappa = g sqrt(n+1)
class AmplitudeSystem : public OdeSystem {
public:
    explicit AmplitudeSystem(const ModelParams& params);  // throws NonFockN
    int dim() const override { return 4; }
    void rhs(double t, std::span<const double> y, std::span<double> f) const override;
    void jacobian(double t, std::span<const double> y, std::span<double> jac) const override;
    void dfdt(double t, std::span<const double> y, std::span<double> g) const override;

    ModelParams p;
    double kappa;
};

std::vector<double> oracle_initial_amplitudes();  // excited atom: ce = 1, cg = 0

// |ce|^2 + |cg|^2 of an amplitude row; conserved by the exact flow
double amplitude_norm(std::span<const double> y4);

// map amplitudes to (s, v, c) as carried by BlochSystem
void amplitudes_to_observables(std::span<const double> y4, double kappa, std::span<double> out3);

inline IntegrateOptions reference_tolerances() {
    return IntegrateOptions{1e-7, 1e-11, 1e-11, 10'000'000};
}

// evolve the amplitudes (implicit collocation stepper, tight tolerance) on a
// uniform grid and return the reconstructed observables
TimeSeries oracle_expectations(const ModelParams& p, double t0, double dt, std::size_t n,
                               const IntegrateOptions& opt = reference_tolerances());

} // namespace modqed
