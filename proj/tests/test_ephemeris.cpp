#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "mlsn/ephemeris.hpp"
#include "mlsn/errors.hpp"
#include "mlsn/time.hpp"

using namespace mlsn;

namespace {

const char* kCsv =
    "sat_id,epoch_iso8601,x_m,y_m,z_m\n"
    "LEO-0,2022-01-01T00:00:00Z,7000000,0,0\n"
    "LEO-0,2022-01-01T00:01:00Z,7000000,100000,0\n"
    "LEO-0,2022-01-01T00:02:00Z,7000000,200000,60000\n"
    "LEO-5,2022-01-01T00:00:00Z,0,7100000,0\n";

}  // namespace

TEST(Ephemeris, ParseAndExactLookup) {
  const auto table = EphemerisTable::parse_csv(kCsv, "inline");
  EXPECT_EQ(table.sat_count(), 2u);
  EXPECT_TRUE(table.has("LEO-0"));
  EXPECT_TRUE(table.has("LEO-5"));
  EXPECT_FALSE(table.has("LEO-1"));

  const double t0 = parse_utc("2022-01-01 00:00:00");
  const auto p = table.position("LEO-0", t0);
  EXPECT_DOUBLE_EQ(p.x, 7000000.0);
  EXPECT_DOUBLE_EQ(p.y, 0.0);
  const auto p2 = table.position("LEO-0", t0 + 120.0);
  EXPECT_DOUBLE_EQ(p2.y, 200000.0);
  EXPECT_DOUBLE_EQ(p2.z, 60000.0);
}

TEST(Ephemeris, LinearInterpolationBetweenSamples) {
  const auto table = EphemerisTable::parse_csv(kCsv, "inline");
  const double t0 = parse_utc("2022-01-01 00:00:00");
  const auto mid = table.position("LEO-0", t0 + 30.0);
  EXPECT_DOUBLE_EQ(mid.x, 7000000.0);
  EXPECT_DOUBLE_EQ(mid.y, 50000.0);
  EXPECT_DOUBLE_EQ(mid.z, 0.0);
  const auto q = table.position("LEO-0", t0 + 90.0);
  EXPECT_DOUBLE_EQ(q.y, 150000.0);
  EXPECT_DOUBLE_EQ(q.z, 30000.0);
}

TEST(Ephemeris, OutOfSpanAndUnknownIdThrow) {
  const auto table = EphemerisTable::parse_csv(kCsv, "inline");
  const double t0 = parse_utc("2022-01-01 00:00:00");
  EXPECT_THROW(table.position("LEO-0", t0 - 1.0), DomainError);
  EXPECT_THROW(table.position("LEO-0", t0 + 121.0), DomainError);
  EXPECT_THROW(table.position("LEO-9", t0), DomainError);
  // Single-sample satellite: only its exact epoch is inside the span.
  EXPECT_DOUBLE_EQ(table.position("LEO-5", t0).y, 7100000.0);
  EXPECT_THROW(table.position("LEO-5", t0 + 1.0), DomainError);
}

TEST(Ephemeris, RejectsMalformedRows) {
  EXPECT_THROW(EphemerisTable::parse_csv("LEO-0,2022-01-01T00:00:00Z,1,2\n", "x"), ValidationError);
  EXPECT_THROW(EphemerisTable::parse_csv("LEO-0,2022-01-01T00:00:00Z,a,2,3\n", "x"),
               ValidationError);
  EXPECT_THROW(EphemerisTable::parse_csv("LEO-0,not-a-date,1,2,3\n", "x"), ValidationError);
  // Non-increasing epochs for the same satellite.
  const char* dup =
      "LEO-0,2022-01-01T00:01:00Z,1,2,3\n"
      "LEO-0,2022-01-01T00:01:00Z,4,5,6\n";
  EXPECT_THROW(EphemerisTable::parse_csv(dup, "x"), ValidationError);
}

TEST(Ephemeris, HeaderOptionalAndBlankLinesSkipped) {
  const char* bare =
      "\nLEO-0,2022-01-01T00:00:00Z,1,2,3\n\n"
      "LEO-0,2022-01-01T00:01:00Z,4,5,6\n";
  const auto table = EphemerisTable::parse_csv(bare, "inline");
  EXPECT_EQ(table.sat_count(), 1u);
  EXPECT_TRUE(EphemerisTable::parse_csv("", "inline").empty());
}

TEST(Ephemeris, LoadCsvFromDisk) {
  const auto path = std::filesystem::temp_directory_path() / "mlsn_ephem_test.csv";
  {
    std::ofstream out(path);
    out << kCsv;
  }
  const auto table = EphemerisTable::load_csv(path.string());
  EXPECT_EQ(table.sat_count(), 2u);
  std::filesystem::remove(path);
  EXPECT_THROW(EphemerisTable::load_csv(path.string()), ValidationError);
}
