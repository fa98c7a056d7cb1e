#pragma once

namespace tonesearch {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace tonesearch
