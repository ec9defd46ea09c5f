#include <gtest/gtest.h>

#include <cmath>

#include "mlsn/constants.hpp"
#include "mlsn/errors.hpp"
#include "mlsn/time.hpp"
#include "mlsn/visibility.hpp"

using namespace mlsn;

namespace {
const EcefPosition kSite{consts::wgs84_a, 0.0, 0.0};
}

TEST(Elevation, CardinalCases) {
  // Straight overhead.
  EXPECT_NEAR(elevation_deg(kSite, {consts::wgs84_a + 1000e3, 0.0, 0.0}), 90.0, 1e-9);
  // On the geocentric horizon.
  EXPECT_NEAR(elevation_deg(kSite, {consts::wgs84_a, 1000e3, 0.0}), 0.0, 1e-9);
  // 45 degrees up.
  EXPECT_NEAR(elevation_deg(kSite, {consts::wgs84_a + 500e3, 500e3, 0.0}), 45.0, 1e-9);
  // Below the horizon.
  EXPECT_LT(elevation_deg(kSite, {consts::wgs84_a - 200e3, 2000e3, 0.0}), 0.0);
  EXPECT_NEAR(elevation_deg(kSite, {0.0, 0.0, 0.0}), -90.0, 1e-9);
}

TEST(LineOfSight, BlockedThroughEarth) {
  EXPECT_FALSE(los_clear({7000e3, 0, 0}, {-7000e3, 0, 0}, 100e3));
  // Grazing margin boundary: closest approach at |x|.
  EXPECT_TRUE(los_clear({6.49e6, 7000e3, 0}, {6.49e6, -7000e3, 0}, 100e3));
  EXPECT_FALSE(los_clear({6.47e6, 7000e3, 0}, {6.47e6, -7000e3, 0}, 100e3));
  // Same chord clears once the margin shrinks.
  EXPECT_TRUE(los_clear({6.47e6, 7000e3, 0}, {6.47e6, -7000e3, 0}, 50e3));
}

TEST(LineOfSight, EndpointLimitedSegments) {
  // Radial segment: closest point is an endpoint, well above the limit.
  EXPECT_TRUE(los_clear({7000e3, 0, 0}, {8000e3, 0, 0}, 100e3));
  // Degenerate zero-length segment.
  EXPECT_TRUE(los_clear({7000e3, 0, 0}, {7000e3, 0, 0}, 100e3));
  EXPECT_FALSE(los_clear({6000e3, 0, 0}, {6000e3, 0, 0}, 100e3));
  // Symmetry.
  EXPECT_EQ(los_clear({6.47e6, 7000e3, 0}, {6.47e6, -7000e3, 0}, 100e3),
            los_clear({6.47e6, -7000e3, 0}, {6.47e6, 7000e3, 0}, 100e3));
}

TEST(AccessReport, ShapeAndBounds) {
  const auto c = build_walker_constellation(WalkerSpec{}, parse_utc("2022-01-01 00:00:00"));
  const GroundStation gs{"Iqaluit", 63.75, -68.52, 0.0, 30.0};
  const double t0 = parse_utc("2022-01-01 00:00:00");
  const auto rows = access_report(c, gs, t0, t0 + 3600.0, 600.0);
  ASSERT_EQ(rows.size(), 78u);
  EXPECT_EQ(rows[0].sat_id, "LEO-0");
  EXPECT_EQ(rows[77].sat_id, "LEO-77");
  for (const auto& r : rows) {
    EXPECT_GE(r.access_fraction, 0.0);
    EXPECT_LE(r.access_fraction, 1.0);
    if (r.access_fraction == 0.0)
      EXPECT_TRUE(std::isnan(r.mean_elevation_when_visible));
    else
      EXPECT_GE(r.mean_elevation_when_visible, gs.min_elevation_deg);
  }
}

TEST(AccessReport, InclusiveEndpointsAndValidation) {
  const auto c = build_walker_constellation(WalkerSpec{}, 0.0);
  const GroundStation gs{"Iqaluit", 63.75, -68.52, 0.0, 30.0};
  // Zero-length window still samples the single start epoch.
  const auto rows = access_report(c, gs, 0.0, 0.0, 600.0);
  for (const auto& r : rows)
    EXPECT_TRUE(r.access_fraction == 0.0 || r.access_fraction == 1.0);
  EXPECT_THROW(access_report(c, gs, 0.0, 100.0, 0.0), ValidationError);
  EXPECT_THROW(access_report(c, gs, 100.0, 0.0, 600.0), ValidationError);
}

// A mid-inclination shell serves a station poleward of its inclination very
// poorly, while the polar shell covers the high-latitude station well. This
// pins the coverage contrast that motivates the polar constellation choice.
TEST(AccessReport, InclinationLatitudeContrast) {
  const double t0 = parse_utc("2022-01-01 00:00:00");
  const double t1 = t0 + 86400.0;

  WalkerSpec inclined;
  inclined.num_planes = 6;
  inclined.sats_per_plane = 11;
  inclined.inclination_deg = 53.0;
  inclined.altitude_m = 550e3;
  const auto shell53 = build_walker_constellation(inclined, t0);

  const GroundStation yellowknife{"Yellowknife", 62.45, -114.37, 0.0, 25.0};
  const GroundStation vancouver{"Vancouver", 49.28, -123.12, 0.0, 25.0};

  double yk_total = 0.0;
  for (const auto& r : access_report(shell53, yellowknife, t0, t1, 60.0)) {
    EXPECT_EQ(r.access_fraction, 0.0);  // station lies above the inclination
    yk_total += r.access_fraction;
  }

  double van_total = 0.0;
  std::size_t van_nonzero = 0;
  for (const auto& r : access_report(shell53, vancouver, t0, t1, 60.0)) {
    EXPECT_LT(r.access_fraction, 0.05);
    van_total += r.access_fraction;
    if (r.access_fraction > 0.0) ++van_nonzero;
  }
  EXPECT_EQ(van_nonzero, 66u);
  EXPECT_GT(van_total / 66.0, 0.005);
  EXPECT_GT(van_total, yk_total);

  // The polar shell reaches the high-latitude station from every slot.
  const auto polar = build_walker_constellation(WalkerSpec{}, t0);
  const GroundStation iqaluit{"Iqaluit", 63.75, -68.52, 0.0, 30.0};
  for (const auto& r : access_report(polar, iqaluit, t0, t1, 60.0)) {
    EXPECT_GT(r.access_fraction, 0.005);
    EXPECT_LT(r.access_fraction, 0.05);
    EXPECT_GT(r.mean_elevation_when_visible, 30.0);
  }
}
