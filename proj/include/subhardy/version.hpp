#pragma once

namespace subhardy {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace subhardy
