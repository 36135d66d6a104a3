#pragma once

namespace fockforge {

inline constexpr const char* kToolName = "fockforge";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace fockforge
