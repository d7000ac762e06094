#pragma once

namespace levymix {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace levymix
