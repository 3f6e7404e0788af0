#pragma once

namespace hsk {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hsk
