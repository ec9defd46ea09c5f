#pragma once

#include <span>
#include <string>
#include <vector>

#include "mlsn/orbits.hpp"
#include "mlsn/vec3.hpp"

namespace mlsn {

// Elevation of `target` as seen from `site`, degrees. Uses the geocentric
// vertical at the site as "up"; adequate at the elevation masks used here.
double elevation_deg(const EcefPosition& site, const EcefPosition& target);

// True when the segment a-b stays above the spherical Earth plus a grazing
// margin. A segment whose closest approach to the geocenter lies outside
// the segment is limited by its endpoints, which are assumed exoatmospheric.
bool los_clear(const EcefPosition& a, const EcefPosition& b, double grazing_altitude_m);

struct AccessRow {
  std::string sat_id;
  double access_fraction = 0.0;           // of sampled epochs with elevation >= mask
  double mean_elevation_when_visible = 0.0;  // NaN when never visible
};

// Samples [t_start, t_end] inclusive at `step_s` and reports per-satellite
// visibility from `gs` against its elevation mask.
std::vector<AccessRow> access_report(const Constellation& constellation, const GroundStation& gs,
                                     double t_start_unix_s, double t_end_unix_s, double step_s);

}  // namespace mlsn
