#pragma once

#include <span>
#include <string>

#include "mlsn/constants.hpp"
#include "mlsn/routing.hpp"

namespace mlsn {

struct DelayConstants {
  double queuing_delay_s = 0.0;        // m, charged once per hop
  double processing_delay_s = 100e-6;  // k, charged once per hop
  double signal_speed_mps = consts::default_signal_speed_mps;
};

// How per-hop link reliabilities combine along one path. Series is the
// physically meaningful default; ParallelForm (1 - product of complements)
// is kept selectable because it appears in some treatments.
enum class ReliabilityModel { Series, ParallelForm };

std::string to_string(ReliabilityModel model);  // "series" / "parallel"
ReliabilityModel reliability_model_from_string(const std::string& name);

// D = sum over hops of (d/c + 8*M/r + m + k). M is the on-air frame size
// in bytes.
double path_latency(const Path& path, double frame_bytes, const DelayConstants& consts);

double path_reliability(const Path& path, ReliabilityModel model = ReliabilityModel::Series);

// 1 - product(1 - phi_j) over redundant alternatives.
double parallel_reliability(std::span<const double> values);

// Total latency of a segmented SPP of spp_length bytes sent sequentially
// over `path` in frames of at most frame_bytes.
double spp_mission_latency(const Path& path, double spp_length_bytes, double frame_bytes,
                           const DelayConstants& consts);

struct MissionResult {
  double epoch_unix_s = 0.0;
  int destination = -1;  // LEO index; id "LEO-<destination>"
  std::string scheme;
  std::string scenario;
  PathStatus status = PathStatus::Unreachable;
  // Metrics are NaN (and relay_hop_count -1) unless status is OK.
  double latency_s = 0.0;
  double reliability = 0.0;
  int relay_hop_count = -1;
  double path_length_m = 0.0;
  double spp_total_latency_s = 0.0;  // NaN when SPP evaluation is off

  bool ok() const { return status == PathStatus::Ok; }
};

// spp_length_bytes = 0 disables the segmented-SPP figure.
MissionResult evaluate_mission(double epoch_unix_s, int destination, const std::string& scenario,
                               const Path& path, double frame_bytes, const DelayConstants& consts,
                               ReliabilityModel model = ReliabilityModel::Series,
                               double spp_length_bytes = 0.0);

// Parallel LLM+GLM composite: latency = min, reliability = redundant
// combination, labeled "LLM-GLM". One failed input degrades to the healthy
// one unchanged; both failed propagates the first failure.
MissionResult compose_parallel(const MissionResult& llm, const MissionResult& glm);

}  // namespace mlsn
