#pragma once

#include <span>
#include <string>
#include <vector>

#include "mlsn/config.hpp"
#include "mlsn/metrics.hpp"

namespace mlsn {

// Aggregates use NaN as the empty-set marker; counts are always valid.
struct DestinationStats {
  int destination = 0;
  long ok = 0;
  double mean_latency_s = 0.0;
  double mean_reliability = 0.0;
  double mean_relay_hops = 0.0;
  double mean_path_length_m = 0.0;
  double mean_spp_total_latency_s = 0.0;
};

struct SchemeStats {
  std::string scheme;
  long entries = 0;
  long ok = 0;
  long no_contact = 0;
  long unreachable = 0;
  double mean_latency_s = 0.0;
  double mean_reliability = 0.0;
  double mean_relay_hops = 0.0;
  double mean_path_length_m = 0.0;
  double mean_spp_total_latency_s = 0.0;
  int min_relay_hops = -1;  // over OK entries; -1 when none
  int max_relay_hops = -1;
  std::vector<DestinationStats> per_destination;
};

// LLM and GLM used in parallel, over entries where both succeeded.
struct CompositeStats {
  long both_ok = 0;
  double mean_latency_s = 0.0;
  double mean_reliability = 0.0;
  double min_reliability = 0.0;
};

// Per-scheme means restricted to the common OK set, for symmetric
// comparison when one scheme fails epochs the other survives.
struct IntersectionStats {
  long both_ok = 0;
  double llm_mean_latency_s = 0.0;
  double glm_mean_latency_s = 0.0;
  double llm_mean_path_length_m = 0.0;
  double glm_mean_path_length_m = 0.0;
};

struct ScenarioStats {
  std::string scenario;
  SchemeStats llm;
  SchemeStats glm;
  CompositeStats composite;
  IntersectionStats intersection;
  double glm_llm_path_length_ratio = 0.0;
};

struct Phi1Point {
  double phi1 = 0.0;
  double llm_mean_reliability = 0.0;
};

struct SweepStats {
  long epochs = 0;
  long destinations = 0;
  long no_contact_epochs = 0;
  double no_contact_epoch_fraction = 0.0;
  std::vector<ScenarioStats> scenarios;
  std::vector<Phi1Point> phi1_sweep;
};

// One MissionResult per (epoch, destination, scheme, scenario), in exactly
// that order (epoch-major). Parallelised over epochs; output order and
// content are independent of thread count.
std::vector<MissionResult> run_sweep(const SweepConfig& config);

SweepStats aggregate(std::span<const MissionResult> results, const SweepConfig& config);

// Writes results_<scenario>.csv, stats.json, the per-destination plot
// series, and (when enabled) snapshot edge dumps into out_dir.
void export_outputs(std::span<const MissionResult> results, const SweepStats& stats,
                    const SweepConfig& config, const std::string& out_dir);

void write_access_report_csv(const SweepConfig& config, const std::string& out_path);

// Fixed-width-free deterministic float formatting shared by all writers.
std::string format_double(double value);

}  // namespace mlsn
