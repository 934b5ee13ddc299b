#pragma once

namespace mgsim {

inline constexpr const char* kVersion = "0.1.0";
/// Bumped whenever the CSV column layout changes.
inline constexpr int kCsvSchemaVersion = 1;

} // namespace mgsim
