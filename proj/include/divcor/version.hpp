#pragma once

namespace divcor {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace divcor
