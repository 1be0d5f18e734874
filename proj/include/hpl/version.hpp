#pragma once

namespace hpl {

inline constexpr const char* kToolName = "hpl";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace hpl
