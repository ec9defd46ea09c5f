#include "mlsn/time.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "mlsn/constants.hpp"
#include "mlsn/errors.hpp"

namespace mlsn {

// Howard Hinnant's algorithm; exact for the proleptic Gregorian calendar.
std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

namespace {

void civil_from_days(std::int64_t z, int& y, unsigned& m, unsigned& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp + (mp < 10 ? 3 : -9);
  y = static_cast<int>(yr + (m <= 2));
}

bool is_leap(int y) { return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0); }

unsigned days_in_month(int y, unsigned m) {
  static constexpr unsigned lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return lengths[m - 1];
}

}  // namespace

double parse_utc(const std::string& text) {
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
  char sep = 0;
  char tail[8] = {0};
  const int n = std::sscanf(text.c_str(), "%d-%d-%d%c%d:%d:%d%7s",
                            &y, &mo, &d, &sep, &h, &mi, &s, tail);
  if (n < 7 || (sep != ' ' && sep != 'T'))
    throw ValidationError("bad datetime '" + text + "', expected YYYY-MM-DD HH:MM:SS");
  if (n == 8 && std::string(tail) != "Z")
    throw ValidationError("bad datetime suffix '" + std::string(tail) + "' in '" + text + "'");
  if (mo < 1 || mo > 12) throw ValidationError("month out of range in '" + text + "'");
  if (d < 1 || d > static_cast<int>(days_in_month(y, static_cast<unsigned>(mo))))
    throw ValidationError("day out of range in '" + text + "'");
  if (h < 0 || h > 23 || mi < 0 || mi > 59 || s < 0 || s > 60)
    throw ValidationError("time of day out of range in '" + text + "'");
  const std::int64_t days = days_from_civil(y, static_cast<unsigned>(mo), static_cast<unsigned>(d));
  return static_cast<double>(days * 86400 + h * 3600 + mi * 60 + s);
}

std::string format_utc_iso(double unix_s) {
  const double floored = std::floor(unix_s);
  std::int64_t t = static_cast<std::int64_t>(floored);
  std::int64_t days = t / 86400;
  std::int64_t sod = t % 86400;
  if (sod < 0) {
    sod += 86400;
    days -= 1;
  }
  int y;
  unsigned mo, d;
  civil_from_days(days, y, mo, d);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02lld:%02lld:%02lldZ", y, mo, d,
                static_cast<long long>(sod / 3600), static_cast<long long>((sod / 60) % 60),
                static_cast<long long>(sod % 60));
  return buf;
}

double gmst_rad(double unix_s) {
  const double d = (unix_s - consts::j2000_unix_s) / 86400.0;
  double deg = std::fmod(consts::gmst_epoch_deg + consts::gmst_rate_deg_per_day * d, 360.0);
  if (deg < 0) deg += 360.0;
  return deg * consts::deg2rad;
}

}  // namespace mlsn
