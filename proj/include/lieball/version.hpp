#pragma once

#include <string_view>

namespace lieball {

inline constexpr std::string_view kVersion = LIEBALL_VERSION;

}  // namespace lieball
