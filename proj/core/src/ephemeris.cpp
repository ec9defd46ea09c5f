#include "mlsn/ephemeris.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mlsn/errors.hpp"
#include "mlsn/time.hpp"

namespace mlsn {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

double parse_double(const std::string& s, const std::string& origin, std::size_t lineno) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ValidationError(origin + ":" + std::to_string(lineno) + ": bad number '" + s + "'");
  }
}

}  // namespace

EphemerisTable EphemerisTable::load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open ephemeris file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str(), path);
}

EphemerisTable EphemerisTable::parse_csv(const std::string& content, const std::string& origin) {
  EphemerisTable table;
  std::stringstream ss(content);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (lineno == 1 && !fields.empty() && fields[0] == "sat_id") continue;  // header
    if (fields.size() != 5)
      throw ValidationError(origin + ":" + std::to_string(lineno) +
                            ": expected 5 fields, got " + std::to_string(fields.size()));
    const double t = parse_utc(fields[1]);
    EcefPosition p{parse_double(fields[2], origin, lineno), parse_double(fields[3], origin, lineno),
                   parse_double(fields[4], origin, lineno)};
    auto& rows = table.samples_[fields[0]];
    if (!rows.empty() && t <= rows.back().first)
      throw ValidationError(origin + ":" + std::to_string(lineno) + ": epochs for '" + fields[0] +
                            "' must be strictly increasing");
    rows.emplace_back(t, p);
  }
  return table;
}

EcefPosition EphemerisTable::position(const std::string& sat_id, double t_unix_s) const {
  const auto it = samples_.find(sat_id);
  if (it == samples_.end()) throw DomainError("no ephemeris for '" + sat_id + "'");
  const auto& rows = it->second;
  if (t_unix_s < rows.front().first || t_unix_s > rows.back().first)
    throw DomainError("time " + format_utc_iso(t_unix_s) + " outside ephemeris span for '" +
                      sat_id + "'");
  const auto upper = std::lower_bound(
      rows.begin(), rows.end(), t_unix_s,
      [](const std::pair<double, EcefPosition>& row, double t) { return row.first < t; });
  if (upper->first == t_unix_s) return upper->second;
  const auto lower = upper - 1;
  const double w = (t_unix_s - lower->first) / (upper->first - lower->first);
  return lower->second + (upper->second - lower->second) * w;
}

}  // namespace mlsn
