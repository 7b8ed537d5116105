#pragma once

namespace rcc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rcc
