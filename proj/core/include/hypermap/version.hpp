#pragma once

namespace hypermap {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace hypermap
