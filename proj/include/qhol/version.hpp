#pragma once

#include <string_view>

namespace qhol {

inline constexpr std::string_view tool_name = "qhol";
inline constexpr std::string_view tool_version = "0.1.0";

}  // namespace qhol
