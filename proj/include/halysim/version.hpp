#pragma once

#include <string_view>

namespace halysim {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr std::string_view kVersionTag = "halysim 0.1.0";

}  // namespace halysim
