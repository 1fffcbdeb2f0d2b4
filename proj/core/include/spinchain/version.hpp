#pragma once

namespace spinchain {

inline constexpr const char* k_version = "0.1.0";

}  // namespace spinchain
