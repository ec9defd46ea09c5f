#pragma once

// Shared helpers for the test binaries: independent oracles coded against
// the same contracts as the library but with different algorithms, plus
// small builders for synthetic snapshots.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "mlsn/config.hpp"
#include "mlsn/metrics.hpp"
#include "mlsn/routing.hpp"
#include "mlsn/topology.hpp"

namespace testsupport {

// Floyd-Warshall min-plus closure over LEO_LEO edges only; O(n^3) is fine
// for the constellation sizes this oracle sees.
struct IslDistanceOracle {
  std::vector<std::vector<double>> dist;

  explicit IslDistanceOracle(const mlsn::NetworkSnapshot& snap) {
    const std::size_t n = snap.nodes.size();
    const double inf = std::numeric_limits<double>::infinity();
    dist.assign(n, std::vector<double>(n, inf));
    for (std::size_t i = 0; i < n; ++i) dist[i][i] = 0.0;
    for (const mlsn::Edge& e : snap.edges) {
      if (e.cls != mlsn::LinkClass::LeoLeo) continue;
      dist[e.a][e.b] = std::min(dist[e.a][e.b], e.distance_m);
      dist[e.b][e.a] = dist[e.a][e.b];
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (dist[i][k] + dist[k][j] < dist[i][j]) dist[i][j] = dist[i][k] + dist[k][j];
  }
};

// Mirrors the routing contract (direct hop when visible, else entry +
// minimum ISL route) without any of the library's path machinery.
struct LlmLengthOracle {
  double total_length_m = 0.0;
  bool reachable = false;
  bool direct = false;
};

inline LlmLengthOracle llm_length_oracle(const mlsn::NetworkSnapshot& snap, int dest_leo) {
  LlmLengthOracle out;
  const int dest = snap.leo_node(dest_leo);
  const mlsn::Edge* direct = snap.find_edge(snap.gs_node(), dest);
  if (direct) {
    out.reachable = true;
    out.direct = true;
    out.total_length_m = direct->distance_m;
    return out;
  }
  const auto entry = mlsn::select_entry_satellite(snap, mlsn::NodeKind::Leo);
  if (!entry) return out;
  const IslDistanceOracle oracle(snap);
  const double isl = oracle.dist[static_cast<std::size_t>(*entry)][static_cast<std::size_t>(dest)];
  if (!std::isfinite(isl)) return out;
  out.reachable = true;
  out.total_length_m = snap.find_edge(snap.gs_node(), *entry)->distance_m + isl;
  return out;
}

// Naive latency/reliability evaluators with deliberately different
// accumulation order from the library (grouped terms instead of per-hop
// sums).
inline double naive_latency(const mlsn::Path& path, double frame_bytes,
                            const mlsn::DelayConstants& c) {
  double dist_sum = 0.0;
  double inv_rate_sum = 0.0;
  for (const mlsn::Hop& h : path.hops) {
    dist_sum += h.distance_m;
    inv_rate_sum += 1.0 / h.rate_bps;
  }
  const double n = static_cast<double>(path.hops.size());
  return dist_sum / c.signal_speed_mps + 8.0 * frame_bytes * inv_rate_sum +
         n * (c.queuing_delay_s + c.processing_delay_s);
}

inline double naive_reliability(const mlsn::Path& path) {
  double phi = 1.0;
  for (auto it = path.hops.rbegin(); it != path.hops.rend(); ++it) phi *= it->phi;
  return phi;
}

// Table-driven CRC-16/CCITT-FALSE, independent of the library's bit loop.
inline std::uint16_t table_crc16(const std::uint8_t* data, std::size_t len) {
  static const auto table = [] {
    std::array<std::uint16_t, 256> t{};
    for (int i = 0; i < 256; ++i) {
      std::uint16_t crc = static_cast<std::uint16_t>(i << 8);
      for (int b = 0; b < 8; ++b)
        crc = (crc & 0x8000) ? static_cast<std::uint16_t>((crc << 1) ^ 0x1021)
                             : static_cast<std::uint16_t>(crc << 1);
      t[static_cast<std::size_t>(i)] = crc;
    }
    return t;
  }();
  std::uint16_t crc = 0xFFFF;
  for (std::size_t i = 0; i < len; ++i)
    crc = static_cast<std::uint16_t>((crc << 8) ^ table[((crc >> 8) ^ data[i]) & 0xFF]);
  return crc;
}

// Synthetic single-ground-station snapshot with hand-placed satellites.
// Satellite k sits along a ray from the site at elevation elev_deg[k]
// (geocentric-up convention), range 2000 km.
inline mlsn::NetworkSnapshot synthetic_gs_snapshot(const std::vector<double>& leo_elev_deg,
                                                   double mask_deg) {
  using namespace mlsn;
  NetworkSnapshot snap;
  const double a = consts::wgs84_a;
  const Vec3 site{a, 0.0, 0.0};
  snap.nodes.push_back({NodeKind::Ground, "GS", site});
  snap.leo_count = static_cast<int>(leo_elev_deg.size());
  for (std::size_t k = 0; k < leo_elev_deg.size(); ++k) {
    const double el = leo_elev_deg[k] * consts::deg2rad;
    const Vec3 dir{std::sin(el), std::cos(el), 0.0};  // up = +x at this site
    Node n{NodeKind::Leo, "LEO-" + std::to_string(k), site + dir * 2.0e6};
    snap.nodes.push_back(n);
  }
  for (std::size_t k = 0; k < leo_elev_deg.size(); ++k) {
    if (leo_elev_deg[k] < mask_deg) continue;
    Edge e;
    e.a = 0;
    e.b = snap.leo_node(static_cast<int>(k));
    e.cls = LinkClass::GsLeo;
    e.distance_m = distance(site, snap.nodes[static_cast<std::size_t>(e.b)].pos);
    e.rate_bps = 1e6;
    e.phi = 1.0;
    snap.edges.push_back(e);
  }
  snap.rebuild_adjacency();
  return snap;
}

// Small randomized constellation + station for optimality checks. Orbits
// are raised well above LEO so ring ISLs survive the LOS prune often
// enough to make routes interesting.
inline mlsn::SweepConfig random_small_config(std::mt19937& rng) {
  mlsn::SweepConfig cfg;  // defaults, then shrink
  std::uniform_int_distribution<int> planes(1, 3);
  std::uniform_int_distribution<int> sats(2, 4);
  std::uniform_real_distribution<double> alt(8000e3, 20000e3);
  std::uniform_real_distribution<double> incl(20.0, 100.0);
  std::uniform_real_distribution<double> lat(-70.0, 70.0);
  std::uniform_real_distribution<double> lon(-180.0, 180.0);
  std::uniform_real_distribution<double> mask(5.0, 25.0);
  cfg.walker.num_planes = planes(rng);
  cfg.walker.sats_per_plane = sats(rng);  // at most 3 x 4 = 12 satellites
  cfg.walker.altitude_m = alt(rng);
  cfg.walker.inclination_deg = incl(rng);
  cfg.gs.latitude_deg = lat(rng);
  cfg.gs.longitude_deg = lon(rng);
  cfg.gs.min_elevation_deg = mask(rng);
  return cfg;
}

}  // namespace testsupport
