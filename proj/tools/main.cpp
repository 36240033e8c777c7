// main.cpp -- command-line front end.
//
// exit codes: 0 success, 1 usage/config errors, 2 runtime failures
// (integration, I/O), 3 reference validation gate exceeded.
#include "modqed/run.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
    using namespace modqed;

    CLI::App app{"two-level atom in a frequency-modulated cavity: simulation and diagnostics"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "integrate one configuration and write diagnostics");
    std::string preset_name, config_path, out_dir, formulation, solver;
    std::size_t n = 0;
    double dt = 0, atol = 0, rtol = 0;
    bool svg = false, validate = false;

    std::string preset_help = "named parameter set (";
    {
        const auto names = preset_names();
        for (std::size_t i = 0; i < names.size(); ++i)
            preset_help += names[i] + (i + 1 < names.size() ? ", " : ")");
    }
    run->add_option("--preset", preset_name, preset_help);
    run->add_option("--config", config_path, "key=value run description file");
    run->add_option("--out", out_dir, "directory for CSV (and SVG) outputs");
    run->add_option("--formulation", formulation, "regular, third-order, or oracle")
        ->check(CLI::IsMember({"regular", "third-order", "oracle"}));
    run->add_option("--solver", solver, "rosenbrock or irk")
        ->check(CLI::IsMember({"rosenbrock", "irk"}));
    run->add_option("--n", n, "number of samples (power of two)");
    run->add_option("--dt", dt, "sample spacing");
    run->add_option("--atol", atol, "absolute tolerance");
    run->add_option("--rtol", rtol, "relative tolerance");
    run->add_flag("--svg", svg, "also write SVG plots");
    run->add_flag("--validate", validate,
                  "cross-check against the amplitude reference (exit 3 beyond 1e-5)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (preset_name.empty() == config_path.empty()) {
            std::cerr << "exactly one of --preset or --config is required\n";
            return 1;
        }
        RunSpec spec = preset_name.empty() ? parse_config_file(config_path) : preset(preset_name);

        if (!formulation.empty())
            spec.formulation = formulation == "regular"       ? Formulation::Regular
                               : formulation == "third-order" ? Formulation::ThirdOrder
                                                              : Formulation::Oracle;
        if (!solver.empty())
            spec.solver =
                solver == "rosenbrock" ? StepperKind::Rosenbrock : StepperKind::ImplicitRK;
        if (n) spec.n = n;
        if (dt > 0) spec.dt = dt;
        if (atol > 0) spec.atol = atol;
        if (rtol > 0) spec.rtol = rtol;
        if (!out_dir.empty()) spec.out_dir = out_dir;
        if (svg) spec.svg = true;
        if (validate) spec.validate = true;

        const RunResult res = execute_run(spec);
        std::cout << run_summary(res);
        write_outputs(res);

        if (res.oracle_dev && *res.oracle_dev > validation_gate) {
            std::cerr << "validation gate exceeded: deviation " << *res.oracle_dev << " > "
                      << validation_gate << "\n";
            return 3;
        }
        return 0;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const NonFockN& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
