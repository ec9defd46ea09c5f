#include "mlsn/visibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mlsn/constants.hpp"
#include "mlsn/errors.hpp"

namespace mlsn {

double elevation_deg(const EcefPosition& site, const EcefPosition& target) {
  const Vec3 up = site.normalized();
  const Vec3 range = (target - site).normalized();
  const double s = std::clamp(up.dot(range), -1.0, 1.0);
  return std::asin(s) * consts::rad2deg;
}

bool los_clear(const EcefPosition& a, const EcefPosition& b, double grazing_altitude_m) {
  const double limit = consts::wgs84_a + grazing_altitude_m;
  const Vec3 ab = b - a;
  const double len2 = ab.dot(ab);
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(-a.dot(ab) / len2, 0.0, 1.0);
  const Vec3 closest = a + ab * t;
  return closest.norm() > limit;
}

std::vector<AccessRow> access_report(const Constellation& constellation, const GroundStation& gs,
                                     double t_start_unix_s, double t_end_unix_s, double step_s) {
  gs.validate();
  if (step_s <= 0.0) throw ValidationError("access report: step_s must be positive");
  if (t_end_unix_s < t_start_unix_s)
    throw ValidationError("access report: t_end must be >= t_start");
  const auto n_epochs =
      static_cast<long>(std::floor((t_end_unix_s - t_start_unix_s) / step_s + 1e-9)) + 1;
  const EcefPosition site = ground_station_ecef(gs);

  std::vector<AccessRow> rows(constellation.elements.size());
  std::vector<long> visible_count(constellation.elements.size(), 0);
  std::vector<double> elevation_sum(constellation.elements.size(), 0.0);
  for (long e = 0; e < n_epochs; ++e) {
    const double t = t_start_unix_s + static_cast<double>(e) * step_s;
    for (std::size_t i = 0; i < constellation.elements.size(); ++i) {
      const double el = elevation_deg(site, propagate_to_ecef(constellation.elements[i], t));
      if (el >= gs.min_elevation_deg) {
        ++visible_count[i];
        elevation_sum[i] += el;
      }
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].sat_id = "LEO-" + std::to_string(i);
    rows[i].access_fraction = static_cast<double>(visible_count[i]) / static_cast<double>(n_epochs);
    rows[i].mean_elevation_when_visible =
        visible_count[i] > 0 ? elevation_sum[i] / static_cast<double>(visible_count[i])
                             : std::numeric_limits<double>::quiet_NaN();
  }
  return rows;
}

}  // namespace mlsn
