#ifndef VLS_PRESETS_H
#define VLS_PRESETS_H

#include "vls/scenario.h"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vls {

/// Names of the built-in experiments, in a stable order.
const std::vector<std::string>& PresetNames();

/// Empty if the name is unknown.
std::optional<ScenarioConfig> Preset(std::string_view name);

} // namespace vls

#endif
