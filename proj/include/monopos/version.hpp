#pragma once

namespace monopos {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "monopos-report/1";

}  // namespace monopos
