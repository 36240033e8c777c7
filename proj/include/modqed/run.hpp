// run.hpp -- end-to-end runs: named parameter sets, config files, execution,
// and file outputs.
#pragma once

#include "modqed/analysis.hpp"
#include "modqed/oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace modqed {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Formulation { Regular, ThirdOrder, Oracle };

struct RunSpec {
    std::string label = "custom";
    ModelParams params;
    Formulation formulation = Formulation::Regular;
    StepperKind solver = StepperKind::Rosenbrock;
    std::optional<double> atol, rtol;  // unset: production defaults (reference ones for Oracle)
    std::size_t n = 0;                 // samples; 0 picks the default below
    double dt = 0;                     // sample spacing; 0 picks the default below
    std::string out_dir;               // empty: no files
    bool svg = false;
    bool validate = false;             // cross-check against the amplitude reference
};

RunSpec preset(const std::string& name);  // ValidationError on an unknown name
std::vector<std::string> preset_names();

// sample spacing rule: at least 64 samples per Rabi period and 10 per period
// of the fastest frequency in play; 2^14 samples by default
double default_dt(const ModelParams& p);
void resolve_sampling(RunSpec& s);
IntegrateOptions resolve_tolerances(const RunSpec& s);

void validate_spec(const RunSpec& s);  // throws ValidationError

RunSpec parse_config_text(const std::string& text, const std::string& origin);
RunSpec parse_config_file(const std::string& path);

struct RunResult {
    RunSpec spec;  // with sampling resolved
    TimeSeries series;
    Periodogram psd;
    std::vector<Peak> peaks;
    std::vector<std::array<double, 2>> section;
    double section_dispersion = 0;
    std::optional<double> oracle_dev;  // set when spec.validate
};

inline constexpr double validation_gate = 1e-5;

RunResult execute_run(const RunSpec& spec);
std::string run_summary(const RunResult& r);
void write_outputs(const RunResult& r);  // CSVs, and SVGs when spec.svg

} // namespace modqed
