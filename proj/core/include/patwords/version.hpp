#pragma once

namespace patwords {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace patwords
