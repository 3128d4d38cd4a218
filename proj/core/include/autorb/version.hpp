#pragma once

namespace autorb {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace autorb
