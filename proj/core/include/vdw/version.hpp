#pragma once

namespace vdw {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace vdw
