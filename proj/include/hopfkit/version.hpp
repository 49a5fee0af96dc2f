#pragma once

namespace hopfkit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hopfkit
