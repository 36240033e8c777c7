// run.cpp -- execution of a RunSpec and its file outputs.
#include "modqed/run.hpp"

#include "modqed/csv.hpp"
#include "modqed/svg.hpp"

#include <cmath>
#include <filesystem>
#include <sstream>

namespace modqed {

double default_dt(const ModelParams& p) {
    const double om = rabi_frequency(p);
    double wmax = om;
    std::visit([&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, MonoModulation>)
            wmax = std::max(wmax, m.omega);
        else if constexpr (std::is_same_v<M, BiModulation>)
            wmax = std::max({wmax, m.omega1, m.omega2});
    }, p.mod);
    return std::min(2.0 * pi / (64.0 * om), 2.0 * pi / (10.0 * wmax));
}

void resolve_sampling(RunSpec& s) {
    if (s.n == 0) s.n = 16384;
    if (!(s.dt > 0)) s.dt = default_dt(s.params);
}

IntegrateOptions resolve_tolerances(const RunSpec& s) {
    IntegrateOptions o;
    if (s.formulation == Formulation::Oracle) o = reference_tolerances();
    if (s.atol) o.atol = *s.atol;
    if (s.rtol) o.rtol = *s.rtol;
    return o;
}

void validate_spec(const RunSpec& s) {
    const ModelParams& p = s.params;
    if (!(p.N + 0.5 > 0)) throw ValidationError("N must exceed -1/2");
    if (p.g == 0) throw ValidationError("g must be nonzero");
    std::visit([](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, MonoModulation>) {
            if (!(m.omega > 0)) throw ValidationError("omega must be positive");
        } else if constexpr (std::is_same_v<M, BiModulation>) {
            if (!(m.omega1 > 0) || !(m.omega2 > 0))
                throw ValidationError("omega1 and omega2 must be positive");
        }
    }, s.params.mod);
    if (s.n != 0 && (s.n < 16 || (s.n & (s.n - 1))))
        throw ValidationError("n must be a power of two, at least 16");
    if (s.atol && !(*s.atol > 0)) throw ValidationError("atol must be positive");
    if (s.rtol && !(*s.rtol > 0)) throw ValidationError("rtol must be positive");
    if (s.dt != 0 && !(s.dt > 0)) throw ValidationError("dt must be positive");
}

RunResult execute_run(const RunSpec& in) {
    RunSpec s = in;
    validate_spec(s);
    resolve_sampling(s);
    const IntegrateOptions opt = resolve_tolerances(s);

    RunResult r;
    r.spec = s;
    switch (s.formulation) {
        case Formulation::Regular: {
            BlochSystem sys(s.params);
            r.series = sample_uniform(sys, s.solver, bloch_initial_state(s.params), 0.0, s.dt,
                                      s.n, opt);
            break;
        }
        case Formulation::ThirdOrder: {
            ThirdOrderSystem sys(s.params);
            r.series = sample_uniform(sys, s.solver, third_order_initial_state(s.params), 0.0,
                                      s.dt, s.n, opt);
            break;
        }
        case Formulation::Oracle:
            r.series = oracle_expectations(s.params, 0.0, s.dt, s.n, opt);
            break;
    }

    r.psd = periodogram(r.series.component(0), s.dt);
    r.peaks = dominant_peaks(r.psd);
    const double vscale =
        1.0 / std::sqrt(s.params.g * s.params.g * (s.params.N + 0.5));
    r.section = poincare_section(r.series, 2.0 * pi / rabi_frequency(s.params), vscale);
    r.section_dispersion = dispersion(r.section);

    if (s.validate) {
        const TimeSeries ref = oracle_expectations(s.params, 0.0, s.dt, s.n);
        r.oracle_dev = max_abs_dev(r.series, ref, 0, 2);
    }
    return r;
}

std::string run_summary(const RunResult& r) {
    const RunSpec& s = r.spec;
    const ModelParams& p = s.params;
    std::ostringstream os;
    os.precision(10);

    os << s.label << ": N=" << p.N << " g=" << p.g << " delta0=" << p.delta0;
    std::visit([&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, ConstantDetuning>)
            os << " modulation=none";
        else if constexpr (std::is_same_v<M, MonoModulation>)
            os << " modulation=mono omega=" << m.omega;
        else
            os << " modulation=bi omega1=" << m.omega1 << " omega2=" << m.omega2;
    }, p.mod);
    os << "\n";

    os << "  K=" << coupling_sq(p) << " rabi=" << rabi_frequency(p);
    os << " formulation="
       << (s.formulation == Formulation::Regular        ? "regular"
           : s.formulation == Formulation::ThirdOrder   ? "third-order"
                                                        : "oracle");
    if (s.formulation != Formulation::Oracle)
        os << " solver=" << (s.solver == StepperKind::Rosenbrock ? "rosenbrock" : "irk");
    os << "\n";

    os << "  n=" << s.n << " dt=" << s.dt
       << " span=" << s.dt * static_cast<double>(s.n) << "\n";

    os << "  peaks:";
    const std::size_t top = std::min<std::size_t>(r.peaks.size(), 5);
    for (std::size_t i = 0; i < top; ++i)
        os << " f=" << r.peaks[i].freq << " (angular " << 2.0 * pi * r.peaks[i].freq
           << ") P=" << r.peaks[i].power << (i + 1 < top ? " |" : "");
    if (r.peaks.empty()) os << " none";
    os << "\n";

    os << "  section: " << r.section.size() << " points, dispersion=" << r.section_dispersion
       << "\n";
    if (r.oracle_dev)
        os << "  reference deviation (sz, dsz): " << *r.oracle_dev << "\n";
    return os.str();
}

void write_outputs(const RunResult& r) {
    namespace fs = std::filesystem;
    const RunSpec& s = r.spec;
    if (s.out_dir.empty()) return;
    const fs::path dir(s.out_dir);
    fs::create_directories(dir);

    const double vscale = 1.0 / std::sqrt(s.params.g * s.params.g * (s.params.N + 0.5));
    const TimeSeries& ts = r.series;
    const bool third = s.formulation == Formulation::ThirdOrder;

    {
        const std::string_view cols[] = {"t", "sz", "dsz", third ? "d2sz" : "c"};
        write_csv(dir / "timeseries.csv", cols, ts.size(), [&](std::size_t i, std::size_t j) {
            return j == 0 ? ts.t(i) : ts(i, static_cast<int>(j) - 1);
        });
    }
    {
        const std::string_view cols[] = {"sz", "v"};
        write_csv(dir / "phase.csv", cols, ts.size(), [&](std::size_t i, std::size_t j) {
            return j == 0 ? ts(i, 0) : ts(i, 1) * vscale;
        });
    }
    {
        const std::string_view cols[] = {"freq", "power"};
        write_csv(dir / "psd.csv", cols, r.psd.power.size(), [&](std::size_t i, std::size_t j) {
            return j == 0 ? r.psd.freq(i) : r.psd.power[i];
        });
    }
    {
        const std::string_view cols[] = {"bin", "freq", "power"};
        write_csv(dir / "peaks.csv", cols, r.peaks.size(), [&](std::size_t i, std::size_t j) {
            const Peak& pk = r.peaks[i];
            return j == 0 ? static_cast<double>(pk.bin) : j == 1 ? pk.freq : pk.power;
        });
    }
    {
        const std::string_view cols[] = {"sz", "v"};
        write_csv(dir / "poincare.csv", cols, r.section.size(), [&](std::size_t i, std::size_t j) {
            return r.section[i][j];
        });
    }

    if (s.svg) {
        std::vector<double> tcol(ts.size()), sz(ts.size()), v(ts.size());
        for (std::size_t i = 0; i < ts.size(); ++i) {
            tcol[i] = ts.t(i);
            sz[i] = ts(i, 0);
            v[i] = ts(i, 1) * vscale;
        }
        write_line_svg(dir / "timeseries.svg", {tcol, sz, "t", "sz", s.label + " time series"});
        write_line_svg(dir / "phase.svg", {sz, v, "sz", "v", s.label + " phase plane"});

        std::vector<double> fr(r.psd.power.size());
        for (std::size_t i = 0; i < fr.size(); ++i) fr[i] = r.psd.freq(i);
        write_line_svg(dir / "psd.svg", {fr, r.psd.power, "freq", "power", s.label + " psd"});

        std::vector<double> px(r.section.size()), py(r.section.size());
        for (std::size_t i = 0; i < r.section.size(); ++i) {
            px[i] = r.section[i][0];
            py[i] = r.section[i][1];
        }
        write_scatter_svg(dir / "poincare.svg", {px, py, "sz", "v", s.label + " section"});
    }
}

} // namespace modqed
