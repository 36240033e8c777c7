// test_model.cpp -- parameters, detuning profiles, the two observable-level
// systems, and their conserved quantities.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "modqed/model.hpp"

#include <cmath>
#include <random>

using namespace modqed;

namespace {

ModelParams make(double N, double delta0, Modulation mod, double g = 1.0) {
    ModelParams p;
    p.N = N;
    p.g = g;
    p.delta0 = delta0;
    p.mod = mod;
    return p;
}

// the profiles used throughout the tests
const Modulation profiles[] = {
    ConstantDetuning{},
    MonoModulation{std::sqrt(17.0)},
    BiModulation{std::sqrt(7.0), std::sqrt(17.0)},
};

} // namespace

TEST_CASE("coupling strength and composite oscillation frequency") {
    CHECK(coupling_sq(make(3.5, 0.0, ConstantDetuning{})) == 16.0);
    CHECK(coupling_sq(make(2.5, 1.0, ConstantDetuning{})) == 12.0);
    CHECK(coupling_sq(make(1.5, 1.0, ConstantDetuning{})) == 8.0);
    CHECK(coupling_sq(make(1.5, 1.0, ConstantDetuning{}, 2.0)) == 32.0);

    CHECK(rabi_frequency(make(3.5, 0.0, ConstantDetuning{})) == 4.0);
    CHECK(rabi_frequency(make(2.5, 1.0, ConstantDetuning{})) == std::sqrt(13.0));
    CHECK(rabi_frequency(make(3.5, 1.0, ConstantDetuning{})) == std::sqrt(17.0));
    CHECK(rabi_frequency(make(1.5, 1.0, ConstantDetuning{})) == 3.0);
}

TEST_CASE("detuning profiles evaluate as declared") {
    const double t = 0.37;

    const auto pc = make(2.5, 1.25, ConstantDetuning{});
    CHECK(detuning(pc, t) == 1.25);
    CHECK(detuning_dot(pc, t) == 0.0);
    CHECK(detuning_ddot(pc, t) == 0.0);

    const double w = std::sqrt(17.0);
    const auto pm = make(2.5, 1.0, MonoModulation{w});
    CHECK(detuning(pm, t) == doctest::Approx(std::cos(w * t)).epsilon(1e-15));
    CHECK(detuning_dot(pm, t) == doctest::Approx(-w * std::sin(w * t)).epsilon(1e-15));
    CHECK(detuning_ddot(pm, t) == doctest::Approx(-w * w * std::cos(w * t)).epsilon(1e-15));

    const double w1 = std::sqrt(7.0), w2 = std::sqrt(17.0);
    const auto pb = make(1.5, 2.0, BiModulation{w1, w2});
    CHECK(detuning(pb, t) ==
          doctest::Approx(2.0 * (std::cos(w1 * t) + std::cos(w2 * t))).epsilon(1e-15));
    CHECK(detuning_dot(pb, t) ==
          doctest::Approx(-2.0 * (w1 * std::sin(w1 * t) + w2 * std::sin(w2 * t))).epsilon(1e-15));
}

TEST_CASE("detuning derivatives agree with finite differences") {
    const double h = 1e-6;
    for (const auto& mod : profiles) {
        const auto p = make(2.5, 1.0, mod);
        for (double t : {0.0, 0.3, 1.7, 4.0}) {
            const double fd1 = (detuning(p, t + h) - detuning(p, t - h)) / (2 * h);
            const double fd2 = (detuning_dot(p, t + h) - detuning_dot(p, t - h)) / (2 * h);
            CHECK(detuning_dot(p, t) == doctest::Approx(fd1).epsilon(1e-7));
            CHECK(detuning_ddot(p, t) == doctest::Approx(fd2).epsilon(1e-7));
        }
    }
}

TEST_CASE("coupled system right-hand side") {
    // delta(0) = delta0, so at t=0 with y=(1/2, 0, 0): v' = -K/2
    const BlochSystem sys(make(2.5, 1.0, MonoModulation{std::sqrt(17.0)}));
    double y[3] = {0.5, 0.0, 0.0}, f[3];
    sys.rhs(0.0, y, f);
    CHECK(f[0] == 0.0);
    CHECK(f[1] == -6.0);
    CHECK(f[2] == 0.0);

    // generic state against the defining equations
    double y2[3] = {0.1, -0.2, 0.3}, f2[3];
    const double t = 0.9, de = detuning(sys.p, t);
    sys.rhs(t, y2, f2);
    CHECK(f2[0] == y2[1]);
    CHECK(f2[1] == doctest::Approx(de * y2[2] - 12.0 * y2[0]).epsilon(1e-15));
    CHECK(f2[2] == doctest::Approx(-de * y2[1]).epsilon(1e-15));
}

TEST_CASE("scalar third-order right-hand side") {
    // flat detuning (delta0 = 0): a' = -K v
    const ThirdOrderSystem sys(make(3.5, 0.0, ConstantDetuning{}));
    double y[3] = {0.5, 0.0, -8.0}, f[3];
    sys.rhs(1.23, y, f);
    CHECK(f[0] == 0.0);
    CHECK(f[1] == -8.0);
    CHECK(f[2] == 0.0);

    // constant nonzero detuning: a' = -(delta^2 + K) v
    const ThirdOrderSystem sysc(make(2.5, 1.0, ConstantDetuning{}));
    double yc[3] = {0.2, 0.4, -1.0}, fc[3];
    sysc.rhs(0.0, yc, fc);
    CHECK(fc[2] == doctest::Approx(-13.0 * 0.4).epsilon(1e-15));
}

TEST_CASE("third-order form is singular exactly at detuning zero crossings") {
    const double w = std::sqrt(17.0);
    const ThirdOrderSystem sys(make(2.5, 1.0, MonoModulation{w}));
    double y[3] = {0.4, 0.1, -0.3}, f[3];

    const double tstar = pi / (2.0 * w);  // first crossing
    CHECK_THROWS_AS(sys.rhs(tstar, y, f), SingularDetuning);
    CHECK_THROWS_AS(sys.jacobian(tstar, y, f), SingularDetuning);
    CHECK_THROWS_AS(sys.dfdt(tstar, y, f), SingularDetuning);
    CHECK_NOTHROW(sys.rhs(0.9 * tstar, y, f));

    // identically flat detuning is not a crossing
    const ThirdOrderSystem flat(make(2.5, 0.0, MonoModulation{w}));
    CHECK_NOTHROW(flat.rhs(tstar, y, f));
    CHECK_NOTHROW(flat.dfdt(tstar, y, f));
}

TEST_CASE("analytic jacobians match finite differences") {
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> uy(-1.0, 1.0), ut(0.05, 3.0);
    for (const auto& mod : profiles) {
        const auto p = make(2.5, 1.0, mod);
        const BlochSystem a(p);
        const ThirdOrderSystem b(p);
        for (const OdeSystem* sys : {static_cast<const OdeSystem*>(&a),
                                     static_cast<const OdeSystem*>(&b)}) {
            for (int rep = 0; rep < 20; ++rep) {
                const double t = ut(rng);
                if (std::abs(detuning(p, t)) < 1e-3) continue;  // stay off the pole
                double y[3] = {uy(rng), uy(rng), uy(rng)};
                double jac[9], fp[3], fm[3];
                sys->jacobian(t, y, jac);
                for (int j = 0; j < 3; ++j) {
                    const double h = 1e-7 * std::max(1.0, std::abs(y[j]));
                    const double keep = y[j];
                    y[j] = keep + h;
                    sys->rhs(t, y, fp);
                    y[j] = keep - h;
                    sys->rhs(t, y, fm);
                    y[j] = keep;
                    for (int i = 0; i < 3; ++i)
                        CHECK(jac[3 * i + j] ==
                              doctest::Approx((fp[i] - fm[i]) / (2 * h)).epsilon(5e-7).scale(1.0));
                }
            }
        }
    }
}

TEST_CASE("explicit time derivative of f matches finite differences") {
    std::mt19937 rng(72);
    std::uniform_real_distribution<double> uy(-1.0, 1.0), ut(0.05, 3.0);
    for (const auto& mod : profiles) {
        const auto p = make(2.5, 1.0, mod);
        const BlochSystem a(p);
        const ThirdOrderSystem b(p);
        for (const OdeSystem* sys : {static_cast<const OdeSystem*>(&a),
                                     static_cast<const OdeSystem*>(&b)}) {
            for (int rep = 0; rep < 20; ++rep) {
                const double t = ut(rng);
                if (std::abs(detuning(p, t)) < 1e-3) continue;
                const double y[3] = {uy(rng), uy(rng), uy(rng)};
                double g[3], fp[3], fm[3];
                sys->dfdt(t, y, g);
                const double h = 1e-6;
                sys->rhs(t + h, y, fp);
                sys->rhs(t - h, y, fm);
                for (int i = 0; i < 3; ++i)
                    CHECK(g[i] == doctest::Approx((fp[i] - fm[i]) / (2 * h)).epsilon(1e-5).scale(1.0));
            }
        }
    }
}

TEST_CASE("initial states") {
    const auto p = make(2.5, 1.0, MonoModulation{std::sqrt(17.0)});
    const auto yb = bloch_initial_state(p);
    REQUIRE(yb.size() == 3);
    CHECK(yb[0] == 0.5);
    CHECK(yb[1] == 0.0);
    CHECK(yb[2] == 0.0);

    const auto yt = third_order_initial_state(p);
    CHECK(yt[0] == 0.5);
    CHECK(yt[1] == 0.0);
    CHECK(yt[2] == -6.0);  // -K/2, independent of the profile

    CHECK_THROWS_AS(bloch_initial_state(p, -0.5), UnsupportedInitialState);
    CHECK_THROWS_AS(third_order_initial_state(p, 0.3), UnsupportedInitialState);
}

TEST_CASE("norm-like invariant has zero time derivative under the coupled flow") {
    // B = 4 s^2 + (v^2 + c^2) / (g^2 (N + 1/2)) is conserved for any profile
    std::mt19937 rng(73);
    std::uniform_real_distribution<double> uy(-1.0, 1.0), ut(0.0, 5.0);
    for (const auto& mod : profiles) {
        const auto p = make(2.5, 1.3, mod);
        const BlochSystem sys(p);
        const double gn = p.g * p.g * (p.N + 0.5);
        for (int rep = 0; rep < 50; ++rep) {
            const double t = ut(rng);
            const double y[3] = {uy(rng), uy(rng), uy(rng)};
            double f[3];
            sys.rhs(t, y, f);
            const double dB = 8.0 * y[0] * f[0] + 2.0 * (y[1] * f[1] + y[2] * f[2]) / gn;
            CHECK(std::abs(dB) < 1e-13);
        }
    }
}

TEST_CASE("constant detuning conserves delta*s + c exactly in structure") {
    std::mt19937 rng(74);
    std::uniform_real_distribution<double> uy(-1.0, 1.0);
    const auto p = make(2.5, 1.7, ConstantDetuning{});
    const BlochSystem sys(p);
    for (int rep = 0; rep < 50; ++rep) {
        const double y[3] = {uy(rng), uy(rng), uy(rng)};
        double f[3];
        sys.rhs(0.4, y, f);
        CHECK(std::abs(p.delta0 * f[0] + f[2]) < 1e-14);
    }
}

TEST_CASE("constant-detuning closed form") {
    const auto p = make(2.5, 1.0, ConstantDetuning{});
    const double om = std::sqrt(13.0);

    CHECK(constant_detuning_sz(p, 0.0) == 0.5);
    // half an oscillation: 1/2 - K/Omega^2 = 1/2 - 12/13
    CHECK(constant_detuning_sz(p, pi / om) == doctest::Approx(-0.4230769230769231).epsilon(1e-14));
    CHECK(constant_detuning_sz(p, 2.0 * pi / om) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(constant_detuning_dsz(p, 0.0) == 0.0);

    // derivative consistency
    const double h = 1e-6, t = 0.8;
    const double fd = (constant_detuning_sz(p, t + h) - constant_detuning_sz(p, t - h)) / (2 * h);
    CHECK(constant_detuning_dsz(p, t) == doctest::Approx(fd).epsilon(1e-8));

    CHECK_THROWS_AS(constant_detuning_sz(make(2.5, 1.0, MonoModulation{1.0}), 0.1),
                    std::logic_error);
}
