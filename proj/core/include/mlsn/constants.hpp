#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>

namespace mlsn::consts {

inline constexpr double mu_earth = 3.986004418e14;  // m^3/s^2

// WGS-84 ellipsoid
inline constexpr double wgs84_a = 6378137.0;  // equatorial radius, m
inline constexpr double wgs84_f = 1.0 / 298.257223563;
inline constexpr double wgs84_e2 = wgs84_f * (2.0 - wgs84_f);
inline constexpr double wgs84_b = wgs84_a * (1.0 - wgs84_f);

inline constexpr double sidereal_day_s = 86164.0905;

// GMST linear model, referenced to J2000 (2000-01-01 12:00:00 UTC).
inline constexpr double j2000_unix_s = 946728000.0;
inline constexpr double gmst_epoch_deg = 280.46061837;
inline constexpr double gmst_rate_deg_per_day = 360.98564736629;

// Radius of a circular orbit whose period is one sidereal day.
inline const double geo_radius_m =
    std::cbrt(mu_earth * std::pow(sidereal_day_s / (2.0 * std::numbers::pi), 2.0));

// Effective signal propagation speed used for link delay.
inline constexpr double default_signal_speed_mps = 2.998e8;

// CCSDS size ceilings, octets.
inline constexpr std::size_t max_spp_packet_bytes = 65542;
inline constexpr std::size_t max_tc_frame_bytes = 1024;

inline constexpr double deg2rad = std::numbers::pi / 180.0;
inline constexpr double rad2deg = 180.0 / std::numbers::pi;

}  // namespace mlsn::consts
