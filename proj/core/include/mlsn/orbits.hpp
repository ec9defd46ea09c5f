#pragma once

#include <string>
#include <vector>

#include "mlsn/vec3.hpp"

namespace mlsn {

// Walker-star shell: num_planes planes of sats_per_plane satellites each,
// circular orbits at a common altitude and inclination. Plane p gets RAAN
// p * raan_spread_deg / num_planes; slot s in a plane gets argument of
// latitude s * 360 / sats_per_plane plus the per-plane phasing offset.
struct WalkerSpec {
  int num_planes = 6;
  int sats_per_plane = 13;
  double inclination_deg = 98.98;
  double altitude_m = 1015e3;
  double raan_spread_deg = 180.0;
  double phasing_offset_deg = 0.0;

  int total() const { return num_planes * sats_per_plane; }
  void validate() const;  // throws ValidationError
};

// Circular orbit; true anomaly degenerates to argument of latitude.
struct OrbitalElements {
  double semi_major_axis_m = 0.0;
  double inclination_rad = 0.0;
  double raan_rad = 0.0;
  double arg_latitude_epoch_rad = 0.0;  // at epoch0
  double epoch0_unix_s = 0.0;
};

struct GeoSlot {
  std::string id;
  double longitude_deg = 0.0;  // east positive

  void validate() const;
};

struct GroundStation {
  std::string name;
  double latitude_deg = 0.0;
  double longitude_deg = 0.0;
  double altitude_m = 0.0;
  double min_elevation_deg = 0.0;

  void validate() const;
};

struct Constellation {
  WalkerSpec spec;
  std::vector<OrbitalElements> elements;  // plane-major: index = p * S + s

  int index_of(int plane, int slot) const { return plane * spec.sats_per_plane + slot; }
  int size() const { return static_cast<int>(elements.size()); }
};

// Element sets for the full shell, plane-major order, epoch0 = epoch0_unix_s.
Constellation build_walker_constellation(const WalkerSpec& spec, double epoch0_unix_s);

double orbital_period_s(double semi_major_axis_m);

// Two-body circular propagation to t, then rotation into the earth-fixed
// frame by GMST about +z.
EcefPosition propagate_to_ecef(const OrbitalElements& el, double t_unix_s);

// Ideal geostationary slot: equatorial, radius chosen for a sidereal-day
// period, fixed at the given longitude.
EcefPosition propagate_to_ecef(const GeoSlot& slot, double t_unix_s);

// Geodetic to ECEF on the WGS-84 ellipsoid.
EcefPosition ground_station_ecef(const GroundStation& gs);

}  // namespace mlsn
