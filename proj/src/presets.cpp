#include "ghq/presets.hpp"

namespace ghq {

const std::vector<ParameterSetPreset>& parameter_presets() {
    static const std::vector<ParameterSetPreset> presets = {
        {"set1", GHParamsAlpha(0.0, 1.0, 0.0, 1.0, -0.5)},
        {"set2", GHParamsAlpha(0.00029, 138.78464, -4.90461, 0.00646, -0.5)},
        {"set3", GHParamsAlpha(0.000666, 214.4, -6.17, 0.0022, 0.8357)},
        {"set4", GHParamsAlpha(0.000048, 9.0, 2.73, 0.0161, -1.663)},
    };
    return presets;
}

std::optional<GHParamsAlpha> find_preset(std::string_view name) {
    for (const auto& preset : parameter_presets()) {
        if (preset.name == name) return preset.params;
    }
    return std::nullopt;
}

}  // namespace ghq
