// model.cpp -- detuning profiles and the observable-level systems.
#include "modqed/model.hpp"

#include <cmath>

namespace modqed {

namespace {
constexpr double delta_floor = 1e-12;
}

double coupling_sq(const ModelParams& p) { return 4.0 * p.g * p.g * (p.N + 0.5); }

double rabi_frequency(const ModelParams& p) {
    return std::sqrt(p.delta0 * p.delta0 + coupling_sq(p));
}

double detuning(const ModelParams& p, double t) {
    return std::visit([&](const auto& m) -> double {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, ConstantDetuning>)
            return p.delta0;
        else if constexpr (std::is_same_v<M, MonoModulation>)
            return p.delta0 * std::cos(m.omega * t);
        else
            return p.delta0 * (std::cos(m.omega1 * t) + std::cos(m.omega2 * t));
    }, p.mod);
}

double detuning_dot(const ModelParams& p, double t) {
    return std::visit([&](const auto& m) -> double {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, ConstantDetuning>)
            return 0.0;
        else if constexpr (std::is_same_v<M, MonoModulation>)
            return -p.delta0 * m.omega * std::sin(m.omega * t);
        else
            return -p.delta0 * (m.omega1 * std::sin(m.omega1 * t) + m.omega2 * std::sin(m.omega2 * t));
    }, p.mod);
}

double detuning_ddot(const ModelParams& p, double t) {
    return std::visit([&](const auto& m) -> double {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, ConstantDetuning>)
            return 0.0;
        else if constexpr (std::is_same_v<M, MonoModulation>)
            return -p.delta0 * m.omega * m.omega * std::cos(m.omega * t);
        else
            return -p.delta0 * (m.omega1 * m.omega1 * std::cos(m.omega1 * t) +
                                m.omega2 * m.omega2 * std::cos(m.omega2 * t));
    }, p.mod);
}

BlochSystem::BlochSystem(const ModelParams& params) : p(params), K(coupling_sq(params)) {}

void BlochSystem::rhs(double t, std::span<const double> y, std::span<double> f) const {
    const double de = detuning(p, t);
    f[0] = y[1];
    f[1] = de * y[2] - K * y[0];
    f[2] = -de * y[1];
}

void BlochSystem::jacobian(double t, std::span<const double>, std::span<double> jac) const {
    const double de = detuning(p, t);
    jac[0] = 0;  jac[1] = 1;   jac[2] = 0;
    jac[3] = -K; jac[4] = 0;   jac[5] = de;
    jac[6] = 0;  jac[7] = -de; jac[8] = 0;
}

void BlochSystem::dfdt(double t, std::span<const double> y, std::span<double> g) const {
    const double dd = detuning_dot(p, t);
    g[0] = 0;
    g[1] = dd * y[2];
    g[2] = -dd * y[1];
}

ThirdOrderSystem::ThirdOrderSystem(const ModelParams& params) : p(params), K(coupling_sq(params)) {}

namespace {
// delta'/delta with the zero-crossing guard; an identically flat delta (e.g.
// delta0 = 0) yields zero, a genuine crossing is a pole
double log_ratio(const ModelParams& p, double t) {
    const double de = detuning(p, t);
    const double dd = detuning_dot(p, t);
    if (std::abs(de) <= delta_floor) {
        if (std::abs(dd) <= delta_floor) return 0.0;
        throw SingularDetuning(t);
    }
    return dd / de;
}
}

void ThirdOrderSystem::rhs(double t, std::span<const double> y, std::span<double> f) const {
    const double de = detuning(p, t);
    const double r = log_ratio(p, t);
    f[0] = y[1];
    f[1] = y[2];
    f[2] = r * (y[2] + K * y[0]) - (de * de + K) * y[1];
}

void ThirdOrderSystem::jacobian(double t, std::span<const double>, std::span<double> jac) const {
    const double de = detuning(p, t);
    const double r = log_ratio(p, t);
    jac[0] = 0;     jac[1] = 1;              jac[2] = 0;
    jac[3] = 0;     jac[4] = 0;              jac[5] = 1;
    jac[6] = r * K; jac[7] = -(de * de + K); jac[8] = r;
}

void ThirdOrderSystem::dfdt(double t, std::span<const double> y, std::span<double> g) const {
    const double de = detuning(p, t);
    const double dd = detuning_dot(p, t);
    double r = 0, rdot = 0;
    if (std::abs(de) <= delta_floor) {
        if (std::abs(dd) > delta_floor) throw SingularDetuning(t);
        // identically flat: both vanish
    } else {
        r = dd / de;
        rdot = detuning_ddot(p, t) / de - r * r;
    }
    g[0] = 0;
    g[1] = 0;
    g[2] = rdot * (y[2] + K * y[0]) - 2.0 * de * dd * y[1];
}

std::vector<double> bloch_initial_state(const ModelParams&, double sz0) {
    if (sz0 != 0.5)
        throw UnsupportedInitialState("only the fully excited atom (sz 0 = +1/2) is supported");
    return {0.5, 0.0, 0.0};
}

std::vector<double> third_order_initial_state(const ModelParams& p, double sz0) {
    if (sz0 != 0.5)
        throw UnsupportedInitialState("only the fully excited atom (sz 0 = +1/2) is supported");
    // s'' (0) = delta(0) c(0) - K s(0) = -K/2 for any profile
    return {0.5, 0.0, -0.5 * coupling_sq(p)};
}

double constant_detuning_sz(const ModelParams& p, double t) {
    if (!std::holds_alternative<ConstantDetuning>(p.mod))
        throw std::logic_error("closed form requires a constant detuning");
    const double K = coupling_sq(p);
    const double om = rabi_frequency(p);
    return 0.5 - K / (2.0 * om * om) * (1.0 - std::cos(om * t));
}

double constant_detuning_dsz(const ModelParams& p, double t) {
    if (!std::holds_alternative<ConstantDetuning>(p.mod))
        throw std::logic_error("closed form requires a constant detuning");
    const double K = coupling_sq(p);
    const double om = rabi_frequency(p);
    return -K / (2.0 * om) * std::sin(om * t);
}

} // namespace modqed
