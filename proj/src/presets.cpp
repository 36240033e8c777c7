// presets.cpp -- the named parameter sets exercised throughout: one per
// regime of interest (bare exchange, off-resonant drive, resonant drive, slow
// drive, two-tone drives).
#include "modqed/run.hpp"

#include <cmath>

namespace modqed {

RunSpec preset(const std::string& name) {
    RunSpec s;
    s.label = name;
    ModelParams& p = s.params;
    p.g = 1.0;
    if (name == "fig1") {
        p.N = 3.5; p.delta0 = 0.0; p.mod = ConstantDetuning{};
    } else if (name == "fig2") {
        p.N = 2.5; p.delta0 = 1.0; p.mod = MonoModulation{std::sqrt(17.0)};
    } else if (name == "fig3") {
        p.N = 3.5; p.delta0 = 1.0; p.mod = MonoModulation{std::sqrt(17.0)};
    } else if (name == "fig4") {
        p.N = 2.5; p.delta0 = 1.0; p.mod = MonoModulation{0.01 * std::sqrt(13.0)};
    } else if (name == "fig5") {
        p.N = 1.5; p.delta0 = 1.0; p.mod = BiModulation{std::sqrt(7.0), std::sqrt(17.0)};
    } else if (name == "fig6") {
        p.N = 1.5; p.delta0 = 1.0; p.mod = BiModulation{std::sqrt(10.0), std::sqrt(13.0)};
    } else if (name == "bi-overtone") {
        // experimental: both tones commensurate with the Rabi frequency (3 and 6)
        p.N = 1.5; p.delta0 = 1.0; p.mod = BiModulation{3.0, 6.0};
    } else {
        throw ValidationError("unknown preset '" + name + "'");
    }
    return s;
}

std::vector<std::string> preset_names() {
    return {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "bi-overtone"};
}

} // namespace modqed
