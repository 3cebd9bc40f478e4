#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ghq/params.hpp"

namespace ghq {

// Named parameter sets: the standard NIG and three sets estimated from
// financial return data (EUR/USD, NYSE composite, BMW).
struct ParameterSetPreset {
    std::string name;
    GHParamsAlpha params;
};

const std::vector<ParameterSetPreset>& parameter_presets();

// Lookup by name ("set1" ... "set4"); empty if unknown.
std::optional<GHParamsAlpha> find_preset(std::string_view name);

}  // namespace ghq
