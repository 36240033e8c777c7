// model.hpp -- two-level atom exchanging one quantum with a cavity mode whose
// frequency is slowly modulated.  Parameters, detuning profiles, and the
// observable-level ODE systems.
#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace modqed {

inline constexpr double pi = 3.141592653589793238462643383279502884;

struct SingularDetuning : std::runtime_error {
    explicit SingularDetuning(double t)
        : std::runtime_error("detuning crosses zero near t=" + std::to_string(t) +
                             "; the scalar third-order form is singular there"),
          t(t) {}
    double t;
};

struct UnsupportedInitialState : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// delta(t) = delta0                            (constant)
// delta(t) = delta0 cos(omega t)               (monochromatic)
// delta(t) = delta0 (cos w1 t + cos w2 t)      (bichromatic)
struct ConstantDetuning {};
struct MonoModulation { double omega = 0; };
struct BiModulation { double omega1 = 0, omega2 = 0; };
using Modulation = std::variant<ConstantDetuning, MonoModulation, BiModulation>;

struct ModelParams {
    double N = 0;        // field strength; a Fock state n enters as N = n + 1/2
    double g = 1;        // atom-field coupling
    double delta0 = 0;   // detuning amplitude
    Modulation mod = ConstantDetuning{};
};

double coupling_sq(const ModelParams& p);     // K = 4 g^2 (N + 1/2)
double rabi_frequency(const ModelParams& p);  // Omega = sqrt(delta0^2 + K)

double detuning(const ModelParams& p, double t);
double detuning_dot(const ModelParams& p, double t);
double detuning_ddot(const ModelParams& p, double t);

// first-order system y' = f(t, y) with an analytic Jacobian and explicit
// time derivative of f, as the linearly implicit steppers need both
struct OdeSystem {
    virtual ~OdeSystem() = default;
    virtual int dim() const = 0;
    virtual void rhs(double t, std::span<const double> y, std::span<double> f) const = 0;
    virtual void jacobian(double t, std::span<const double> y, std::span<double> jac) const = 0; // row-major
    virtual void dfdt(double t, std::span<const double> y, std::span<double> g) const = 0;
};

// y = (s, v, c): the inversion <S_z>, its velocity, and the atom-field
// quadrature that closes the system.  Regular for every detuning profile,
// zero crossings included:
//   s' = v,   v' = delta(t) c - K s,   c' = -delta(t) v
class BlochSystem : public OdeSystem {
public:
    explicit BlochSystem(const ModelParams& params);
    int dim() const override { return 3; }
    void rhs(double t, std::span<const double> y, std::span<double> f) const override;
    void jacobian(double t, std::span<const double> y, std::span<double> jac) const override;
    void dfdt(double t, std::span<const double> y, std::span<double> g) const override;

    ModelParams p;
    double K;
};

// y = (s, v, a), a = s''.  The scalar form obtained by eliminating c:
//   a' = (delta'/delta)(a + K s) - (delta^2 + K) v
// It inherits a pole wherever delta(t) = 0 while delta'(t) != 0.
class ThirdOrderSystem : public OdeSystem {
public:
    explicit ThirdOrderSystem(const ModelParams& params);
    int dim() const override { return 3; }
    void rhs(double t, std::span<const double> y, std::span<double> f) const override;
    void jacobian(double t, std::span<const double> y, std::span<double> jac) const override;
    void dfdt(double t, std::span<const double> y, std::span<double> g) const override;

    ModelParams p;
    double K;
};

// excited atom, fully undisturbed field: only sz0 = +1/2 is supported
std::vector<double> bloch_initial_state(const ModelParams& p, double sz0 = 0.5);
std::vector<double> third_order_initial_state(const ModelParams& p, double sz0 = 0.5);

// constant detuning admits a closed form:
//   sz(t) = 1/2 - K/(2 Omega^2) (1 - cos Omega t)
double constant_detuning_sz(const ModelParams& p, double t);
double constant_detuning_dsz(const ModelParams& p, double t);

} // namespace modqed
