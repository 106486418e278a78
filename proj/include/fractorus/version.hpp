// fractorus — version constant embedded in reports.
#pragma once

namespace fractorus {

inline constexpr const char* kVersion = "0.1.0";

} // namespace fractorus
