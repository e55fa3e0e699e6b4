#pragma once

namespace qframe {

inline constexpr const char* kVersion = "0.1.0";

} // namespace qframe
