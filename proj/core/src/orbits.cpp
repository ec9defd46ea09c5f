#include "mlsn/orbits.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mlsn/constants.hpp"
#include "mlsn/errors.hpp"
#include "mlsn/time.hpp"

namespace mlsn {

void WalkerSpec::validate() const {
  if (num_planes < 1) throw ValidationError("walker: num_planes must be >= 1");
  if (sats_per_plane < 1) throw ValidationError("walker: sats_per_plane must be >= 1");
  if (inclination_deg < 0.0 || inclination_deg > 180.0)
    throw ValidationError("walker: inclination_deg must be in [0, 180]");
  if (altitude_m <= 0.0) throw ValidationError("walker: altitude_m must be positive");
  if (raan_spread_deg < 0.0 || raan_spread_deg > 360.0)
    throw ValidationError("walker: raan_spread_deg must be in [0, 360]");
}

void GeoSlot::validate() const {
  if (longitude_deg < -180.0 || longitude_deg > 180.0)
    throw ValidationError("geo slot '" + id + "': longitude_deg must be in [-180, 180]");
}

void GroundStation::validate() const {
  if (latitude_deg < -90.0 || latitude_deg > 90.0)
    throw ValidationError("ground station '" + name + "': latitude_deg must be in [-90, 90]");
  if (longitude_deg < -180.0 || longitude_deg > 180.0)
    throw ValidationError("ground station '" + name + "': longitude_deg must be in [-180, 180]");
  if (min_elevation_deg < 0.0 || min_elevation_deg >= 90.0)
    throw ValidationError("ground station '" + name + "': min_elevation_deg must be in [0, 90)");
}

Constellation build_walker_constellation(const WalkerSpec& spec, double epoch0_unix_s) {
  spec.validate();
  Constellation c;
  c.spec = spec;
  c.elements.reserve(static_cast<std::size_t>(spec.total()));
  const double a = consts::wgs84_a + spec.altitude_m;
  const double inc = spec.inclination_deg * consts::deg2rad;
  const double raan_step = spec.raan_spread_deg / spec.num_planes * consts::deg2rad;
  const double slot_step = 360.0 / spec.sats_per_plane * consts::deg2rad;
  const double phasing = spec.phasing_offset_deg * consts::deg2rad;
  for (int p = 0; p < spec.num_planes; ++p) {
    for (int s = 0; s < spec.sats_per_plane; ++s) {
      OrbitalElements el;
      el.semi_major_axis_m = a;
      el.inclination_rad = inc;
      el.raan_rad = p * raan_step;
      el.arg_latitude_epoch_rad = s * slot_step + p * phasing;
      el.epoch0_unix_s = epoch0_unix_s;
      c.elements.push_back(el);
    }
  }
  return c;
}

double orbital_period_s(double semi_major_axis_m) {
  return 2.0 * std::numbers::pi *
         std::sqrt(semi_major_axis_m * semi_major_axis_m * semi_major_axis_m / consts::mu_earth);
}

namespace {

EcefPosition eci_to_ecef(const Vec3& eci, double t_unix_s) {
  const double theta = gmst_rad(t_unix_s);
  const double c = std::cos(theta), s = std::sin(theta);
  return {c * eci.x + s * eci.y, -s * eci.x + c * eci.y, eci.z};
}

}  // namespace

EcefPosition propagate_to_ecef(const OrbitalElements& el, double t_unix_s) {
  const double n = std::sqrt(consts::mu_earth / (el.semi_major_axis_m * el.semi_major_axis_m *
                                                 el.semi_major_axis_m));
  const double u = el.arg_latitude_epoch_rad + n * (t_unix_s - el.epoch0_unix_s);
  const double co = std::cos(el.raan_rad), so = std::sin(el.raan_rad);
  const double cu = std::cos(u), su = std::sin(u);
  const double ci = std::cos(el.inclination_rad), si = std::sin(el.inclination_rad);
  const Vec3 eci{
      el.semi_major_axis_m * (co * cu - so * su * ci),
      el.semi_major_axis_m * (so * cu + co * su * ci),
      el.semi_major_axis_m * (su * si),
  };
  return eci_to_ecef(eci, t_unix_s);
}

EcefPosition propagate_to_ecef(const GeoSlot& slot, double /*t_unix_s*/) {
  const double lon = slot.longitude_deg * consts::deg2rad;
  return {consts::geo_radius_m * std::cos(lon), consts::geo_radius_m * std::sin(lon), 0.0};
}

EcefPosition ground_station_ecef(const GroundStation& gs) {
  const double lat = gs.latitude_deg * consts::deg2rad;
  const double lon = gs.longitude_deg * consts::deg2rad;
  const double sl = std::sin(lat), cl = std::cos(lat);
  const double nrad = consts::wgs84_a / std::sqrt(1.0 - consts::wgs84_e2 * sl * sl);
  return {
      (nrad + gs.altitude_m) * cl * std::cos(lon),
      (nrad + gs.altitude_m) * cl * std::sin(lon),
      (nrad * (1.0 - consts::wgs84_e2) + gs.altitude_m) * sl,
  };
}

}  // namespace mlsn
