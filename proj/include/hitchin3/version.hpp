#pragma once

namespace hitchin3 {

inline constexpr const char* kArtifactName = "hitchin3";
inline constexpr const char* kVersion = "1.0.0";

}  // namespace hitchin3
