#pragma once

namespace qkdrx {

inline constexpr const char* kArtifactVersion = "0.1.0";

} // namespace qkdrx
