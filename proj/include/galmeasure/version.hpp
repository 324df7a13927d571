#pragma once

namespace galmeas {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace galmeas
