#pragma once

namespace symspec {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace symspec
