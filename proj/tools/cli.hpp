// SPDX-License-Identifier: MIT
//
// Command-line front end. Exit codes: 0 pass, 1 mismatch or engine failure,
// 2 configuration or parse error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace apk::cli {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kConfigEnv = "APK_CONFIG";

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apk::cli
