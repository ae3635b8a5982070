#pragma once

namespace qwmvc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qwmvc
