#pragma once

namespace pmqkit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pmqkit
