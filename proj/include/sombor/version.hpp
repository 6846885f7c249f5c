#pragma once

namespace sombor {

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace sombor
