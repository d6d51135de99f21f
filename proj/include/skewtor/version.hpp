#pragma once

namespace skewtor {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace skewtor
