#pragma once

#include <span>
#include <string>
#include <vector>

#include "mlsn/metrics.hpp"
#include "mlsn/orbits.hpp"
#include "mlsn/topology.hpp"

namespace mlsn {

// Full description of one sweep. Field defaults are the shipped baseline
// mission; see configs/default.toml for the file schema.
struct SweepConfig {
  double t_start_unix_s = 0.0;
  double t_end_unix_s = 0.0;
  double sample_step_s = 600.0;

  WalkerSpec walker;
  std::vector<GeoSlot> geo_slots;
  GroundStation gs;

  LinkRates rates;
  TopologyOptions topology;

  double frame_bytes = 1024.0;
  double spp_length_bytes = 0.0;  // 0 disables SPP totals

  DelayConstants delays;
  ScenarioParams scenario_params() const;

  double phi_leo_isl = 0.998;
  double phi_geo_isl = 0.999;
  double phi_geo_leo = 0.999;
  double phi_ground = 1.0;
  ReliabilityModel reliability_model = ReliabilityModel::Series;
  std::vector<double> phi1_sweep{0.998, 0.995, 0.99, 0.98};

  std::vector<std::string> enabled_scenarios{"S1", "S2", "S3", "S4"};
  std::string output_dir = "out";
  int threads = 0;  // 0 = hardware concurrency
  bool emit_snapshots = false;
  std::string ephemeris_csv;  // optional position override table

  // Enabled scenarios in config order, materialized from the built-in set.
  std::vector<Scenario> scenarios() const;
  long epoch_count() const;

  void validate() const;  // throws ValidationError naming the offending key
};

// Baseline mission configuration (identical to configs/default.toml).
SweepConfig default_config();

// Reads a TOML-style or JSON config file (format auto-detected), applies
// `overrides` ("section.key=value" strings), validates nothing beyond
// structure; call validate() before running.
SweepConfig load_config(const std::string& path, std::span<const std::string> overrides = {});

// As load_config but from an in-memory document (used by tests and the
// override round-trip check).
SweepConfig parse_config(const std::string& content, const std::string& origin,
                         std::span<const std::string> overrides = {});

}  // namespace mlsn
