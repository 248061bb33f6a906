#pragma once

#include <string>

#include "qnk/verifiers.hpp"

namespace qnk {

inline constexpr const char* kVersion = "1.0.0";

enum class Format { Json, Csv };

// wall_time is written only when include_timings is set (null otherwise), so
// that a report is byte-stable for a fixed config and seed.
std::string emit(const Report& r, Format f, bool include_timings = false);
Report parse_report(const std::string& text, Format f);

json to_json(const CheckResult& c, bool include_timings);
CheckResult check_from_json(const json& j);

} // namespace qnk
