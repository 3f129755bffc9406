#pragma once

#include <chrono>
#include <optional>
#include <string>

namespace mnemos {

// All instants are UTC with second resolution.
using Instant = std::chrono::sys_seconds;

// Parses ISO-8601: "YYYY-MM-DD", "YYYY-MM-DDTHH:MM:SS", optional
// fractional seconds (ignored), optional "Z" or "+HH:MM"/"-HH:MM" offset.
// Throws InvalidArgument on anything else.
Instant parse_instant(const std::string& text);
std::optional<Instant> try_parse_instant(const std::string& text);

// "YYYY-MM-DDTHH:MM:SSZ"
std::string format_instant(Instant t);

struct TimeNormalization {
    Instant timestamp;
    bool resolved;  // false: expression unrecognized, anchor returned unchanged
};

// Resolves a temporal expression against an anchor instant.
// Recognized relative forms: "today" (anchor), "yesterday" (-1 day),
// "tomorrow" (+1 day), "last week" (-7 days), "next month" (+30 days),
// "N days ago" (-N days). Absolute ISO-8601 expressions pass through.
TimeNormalization normalize_time(const std::string& expression, Instant anchor);

// Day-granularity range helpers (inclusive bounds, UTC).
Instant start_of_day(Instant t);
Instant end_of_day(Instant t);  // 23:59:59

}  // namespace mnemos
