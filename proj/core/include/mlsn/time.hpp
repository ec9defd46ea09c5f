#pragma once

#include <cstdint>
#include <string>

namespace mlsn {

// Parses "YYYY-MM-DD HH:MM:SS" (a 'T' separator and trailing 'Z' are also
// accepted). Interpreted as UTC. Throws ValidationError on malformed input
// or out-of-range fields.
double parse_utc(const std::string& text);

// Formats seconds-since-epoch as "YYYY-MM-DDTHH:MM:SSZ". Fractional
// seconds are truncated toward negative infinity.
std::string format_utc_iso(double unix_s);

// Greenwich mean sidereal time, radians in [0, 2*pi).
double gmst_rad(double unix_s);

// Days since civil epoch 1970-01-01 (proleptic Gregorian).
std::int64_t days_from_civil(int y, unsigned m, unsigned d);

}  // namespace mlsn
