#pragma once

namespace sixv {

inline constexpr const char* kVersion = "1.0.0";

} // namespace sixv
