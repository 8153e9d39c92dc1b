#pragma once

namespace hypercong {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace hypercong
