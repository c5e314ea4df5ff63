#pragma once

namespace spintensor {

inline constexpr const char* kVersion = "0.1.0";

} // namespace spintensor
