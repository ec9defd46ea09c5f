#include "mlsn/metrics.hpp"

#include <cmath>
#include <limits>

#include "mlsn/ccsds.hpp"
#include "mlsn/errors.hpp"

namespace mlsn {

namespace {
constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();
}

std::string to_string(ReliabilityModel model) {
  return model == ReliabilityModel::Series ? "series" : "parallel";
}

ReliabilityModel reliability_model_from_string(const std::string& name) {
  if (name == "series") return ReliabilityModel::Series;
  if (name == "parallel") return ReliabilityModel::ParallelForm;
  throw ValidationError("unknown reliability model '" + name + "' (use series|parallel)");
}

double path_latency(const Path& path, double frame_bytes, const DelayConstants& consts) {
  if (path.hops.empty()) throw ValidationError("path_latency: empty path");
  if (!(frame_bytes > 0.0)) throw ValidationError("path_latency: frame size must be positive");
  double total = 0.0;
  for (const Hop& h : path.hops)
    total += h.distance_m / consts.signal_speed_mps + 8.0 * frame_bytes / h.rate_bps +
             consts.queuing_delay_s + consts.processing_delay_s;
  return total;
}

double path_reliability(const Path& path, ReliabilityModel model) {
  if (path.hops.empty()) throw ValidationError("path_reliability: empty path");
  if (model == ReliabilityModel::Series) {
    double phi = 1.0;
    for (const Hop& h : path.hops) phi *= h.phi;
    return phi;
  }
  double miss = 1.0;
  for (const Hop& h : path.hops) miss *= 1.0 - h.phi;
  return 1.0 - miss;
}

double parallel_reliability(std::span<const double> values) {
  if (values.empty()) throw ValidationError("parallel_reliability: empty list");
  double miss = 1.0;
  for (double v : values) {
    if (v < 0.0 || v > 1.0)
      throw ValidationError("parallel_reliability: value outside [0, 1]");
    miss *= 1.0 - v;
  }
  return 1.0 - miss;
}

double spp_mission_latency(const Path& path, double spp_length_bytes, double frame_bytes,
                           const DelayConstants& consts) {
  const auto plan = plan_segmentation(static_cast<std::size_t>(spp_length_bytes),
                                      static_cast<std::size_t>(frame_bytes));
  // All frames except possibly the last share one size, so the total is an
  // exact multiple of the single-frame latency plus one remainder term.
  const std::size_t n = plan.frame_payload_sizes.size();
  const std::size_t tail = plan.frame_payload_sizes.back();
  const double full = path_latency(path, frame_bytes, consts);
  if (tail == static_cast<std::size_t>(frame_bytes)) return static_cast<double>(n) * full;
  return static_cast<double>(n - 1) * full + path_latency(path, static_cast<double>(tail), consts);
}

MissionResult evaluate_mission(double epoch_unix_s, int destination, const std::string& scenario,
                               const Path& path, double frame_bytes, const DelayConstants& consts,
                               ReliabilityModel model, double spp_length_bytes) {
  MissionResult r;
  r.epoch_unix_s = epoch_unix_s;
  r.destination = destination;
  r.scheme = to_string(path.scheme);
  r.scenario = scenario;
  r.status = path.status;
  r.latency_s = nan_v;
  r.reliability = nan_v;
  r.path_length_m = nan_v;
  r.spp_total_latency_s = nan_v;
  if (!path.ok()) return r;
  r.latency_s = path_latency(path, frame_bytes, consts);
  r.reliability = path_reliability(path, model);
  r.relay_hop_count = path.relay_hop_count;
  r.path_length_m = path.total_length_m;
  if (spp_length_bytes > 0.0)
    r.spp_total_latency_s = spp_mission_latency(path, spp_length_bytes, frame_bytes, consts);
  return r;
}

MissionResult compose_parallel(const MissionResult& llm, const MissionResult& glm) {
  if (llm.epoch_unix_s != glm.epoch_unix_s || llm.destination != glm.destination)
    throw DomainError("compose_parallel: results are for different missions");
  if (!llm.ok() && !glm.ok()) {
    MissionResult r = llm;
    r.scheme = "LLM-GLM";
    return r;
  }
  if (!llm.ok()) return glm;
  if (!glm.ok()) return llm;
  MissionResult r = llm.latency_s <= glm.latency_s ? llm : glm;
  r.scheme = "LLM-GLM";
  r.latency_s = std::min(llm.latency_s, glm.latency_s);
  const double vals[] = {llm.reliability, glm.reliability};
  r.reliability = parallel_reliability(vals);
  if (!std::isnan(llm.spp_total_latency_s) && !std::isnan(glm.spp_total_latency_s))
    r.spp_total_latency_s = std::min(llm.spp_total_latency_s, glm.spp_total_latency_s);
  return r;
}

}  // namespace mlsn
