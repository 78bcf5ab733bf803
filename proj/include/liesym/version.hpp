#pragma once

namespace liesym {

inline constexpr const char* kToolName = "liesym";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace liesym
