#pragma once

namespace heliumq {

inline constexpr const char* version = "0.1.0";

}  // namespace heliumq
