// config.cpp -- line-oriented key=value run descriptions.  Later assignments
// win, '#' starts a comment, unknown keys are errors.
#include "modqed/run.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

namespace modqed {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_num(const std::string& v, const std::string& where) {
    const char* c = v.c_str();
    char* end = nullptr;
    const double x = std::strtod(c, &end);
    if (end == c || *end != '\0')
        throw ParseError(where + ": '" + v + "' is not a number");
    return x;
}

} // namespace

RunSpec parse_config_text(const std::string& text, const std::string& origin) {
    std::optional<double> N, g, delta0, omega, omega1, omega2, atol, rtol, dt;
    std::optional<std::size_t> n;
    std::optional<std::string> modulation, formulation, solver, out;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = origin + ":" + std::to_string(lineno);

        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(where + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty()) throw ParseError(where + ": expected key=value");

        if (key == "N") N = parse_num(val, where);
        else if (key == "g") g = parse_num(val, where);
        else if (key == "delta0") delta0 = parse_num(val, where);
        else if (key == "omega") omega = parse_num(val, where);
        else if (key == "omega1") omega1 = parse_num(val, where);
        else if (key == "omega2") omega2 = parse_num(val, where);
        else if (key == "atol") atol = parse_num(val, where);
        else if (key == "rtol") rtol = parse_num(val, where);
        else if (key == "dt") dt = parse_num(val, where);
        else if (key == "n") {
            const double x = parse_num(val, where);
            if (!(x >= 1) || x != std::floor(x))
                throw ParseError(where + ": n must be a positive integer");
            n = static_cast<std::size_t>(x);
        } else if (key == "modulation") {
            if (val != "none" && val != "mono" && val != "bi")
                throw ParseError(where + ": modulation must be none, mono, or bi");
            modulation = val;
        } else if (key == "formulation") {
            if (val != "regular" && val != "third-order" && val != "oracle")
                throw ParseError(where + ": formulation must be regular, third-order, or oracle");
            formulation = val;
        } else if (key == "solver") {
            if (val != "rosenbrock" && val != "irk")
                throw ParseError(where + ": solver must be rosenbrock or irk");
            solver = val;
        } else if (key == "out") {
            out = val;
        } else {
            throw ParseError(where + ": unknown key '" + key + "'");
        }
    }

    if (!N) throw ValidationError(origin + ": N is required");

    RunSpec s;
    s.label = "custom";
    s.params.N = *N;
    s.params.g = g.value_or(1.0);
    s.params.delta0 = delta0.value_or(0.0);

    const std::string mod = modulation.value_or("none");
    if (mod == "none") {
        if (omega || omega1 || omega2)
            throw ValidationError(origin + ": omega keys need modulation=mono or bi");
        s.params.mod = ConstantDetuning{};
    } else if (mod == "mono") {
        if (!omega) throw ValidationError(origin + ": modulation=mono needs omega");
        if (omega1 || omega2)
            throw ValidationError(origin + ": modulation=mono takes omega, not omega1/omega2");
        s.params.mod = MonoModulation{*omega};
    } else {
        if (!omega1 || !omega2)
            throw ValidationError(origin + ": modulation=bi needs omega1 and omega2");
        if (omega) throw ValidationError(origin + ": modulation=bi takes omega1/omega2, not omega");
        s.params.mod = BiModulation{*omega1, *omega2};
    }

    if (formulation) {
        s.formulation = *formulation == "regular" ? Formulation::Regular
                        : *formulation == "third-order" ? Formulation::ThirdOrder
                                                        : Formulation::Oracle;
    }
    if (solver)
        s.solver = *solver == "rosenbrock" ? StepperKind::Rosenbrock : StepperKind::ImplicitRK;
    s.atol = atol;
    s.rtol = rtol;
    if (n) s.n = *n;
    if (dt) s.dt = *dt;
    if (out) s.out_dir = *out;

    validate_spec(s);
    return s;
}

RunSpec parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

} // namespace modqed
