#pragma once

namespace rclab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rclab
