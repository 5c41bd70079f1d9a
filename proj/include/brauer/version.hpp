#pragma once

namespace brauer {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace brauer
