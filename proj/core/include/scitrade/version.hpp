#pragma once

namespace scitrade {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace scitrade
