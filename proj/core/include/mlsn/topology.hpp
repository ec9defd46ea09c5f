#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mlsn/ephemeris.hpp"
#include "mlsn/orbits.hpp"
#include "mlsn/vec3.hpp"

namespace mlsn {

enum class LinkClass { GsLeo, GsGeo, LeoLeo, GeoGeo, GeoLeo };

std::string to_string(LinkClass cls);  // "GS_LEO", "GS_GEO", ...
LinkClass link_class_from_string(const std::string& name);

enum class LinkTechKind { RfKa, RfKu, RfL, Fso };

std::string to_string(LinkTechKind kind);  // "RF_KA", "RF_KU", "RF_L", "FSO"
LinkTechKind link_tech_from_string(const std::string& name);

struct LinkTech {
  LinkTechKind kind = LinkTechKind::RfKa;
  double rate_bps = 0.0;

  void validate() const;
};

// Per-link-class technology assignment plus the shared delay/reliability
// parameters of one experiment column.
struct Scenario {
  std::string name;
  std::map<LinkClass, LinkTech> tech;
  double frame_bytes = 1024.0;
  double queuing_delay_s = 0.0;       // m
  double processing_delay_s = 100e-6; // k
  double phi_ground = 1.0;   // ground-to-space hops, both layers
  double phi_leo_isl = 0.998;
  double phi_geo_isl = 0.999;
  double phi_geo_leo = 0.999;

  double rate_for(LinkClass cls) const;
  double phi_for(LinkClass cls) const;
  void validate() const;  // throws ValidationError naming the offending field
};

// Default transmission rates per technology.
struct LinkRates {
  double rf_ka_bps = 324e6;
  double rf_ku_bps = 324e6;
  double rf_l_bps = 150e3;
  double fso_bps = 1.8e9;
};

struct ScenarioParams {
  double frame_bytes = 1024.0;
  double queuing_delay_s = 0.0;
  double processing_delay_s = 100e-6;
  double phi_ground = 1.0;
  double phi_leo_isl = 0.998;
  double phi_geo_isl = 0.999;
  double phi_geo_leo = 0.999;
};

// The four built-in technology mixes S1..S4.
std::vector<Scenario> builtin_scenarios(const LinkRates& rates, const ScenarioParams& params);

enum class NodeKind { Ground, Leo, Geo };

struct Node {
  NodeKind kind = NodeKind::Ground;
  std::string id;      // "GS", "LEO-<i>", "GEO-<j>"
  EcefPosition pos;
};

struct Edge {
  int a = 0;  // node indices, a < b
  int b = 0;
  LinkClass cls = LinkClass::LeoLeo;
  double distance_m = 0.0;
  double rate_bps = 0.0;  // filled by annotate_scenario
  double phi = 1.0;       // filled by annotate_scenario
};

struct TopologyOptions {
  double grazing_altitude_m = 100e3;
  // GEO feeder links use their own mask; the station mask applies to LEO.
  double gs_geo_min_elevation_deg = 5.0;
};

// One epoch of the network. Node 0 is the ground station, then the LEO
// shell in constellation order, then the GEO slots in config order.
struct NetworkSnapshot {
  double epoch_unix_s = 0.0;
  std::string scenario;  // empty until annotated
  int leo_count = 0;
  int geo_count = 0;
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  // adjacency[n] = (neighbor node, edge index), sorted by neighbor.
  std::vector<std::vector<std::pair<int, int>>> adjacency;

  int gs_node() const { return 0; }
  int leo_node(int i) const { return 1 + i; }
  int geo_node(int j) const { return 1 + leo_count + j; }

  const Edge* find_edge(int node_a, int node_b) const;
  void rebuild_adjacency();
};

// +grid neighbors of (plane, slot): previous/next slot in plane (ring) and
// same slot in the adjacent planes. The seam between the first and last
// plane carries no links (counter-rotating in a star pattern).
std::vector<std::pair<int, int>> plus_grid_neighbors(int plane, int slot, const WalkerSpec& spec);

// Geometry only: positions, candidate edges, distances. Rates and phi are
// zeroed until a scenario is applied. When `ephemeris` is given, satellites
// whose id appears in it take their position from the table instead of the
// propagator.
NetworkSnapshot build_geometry(double epoch_unix_s, const Constellation& constellation,
                               std::span<const GeoSlot> geo_slots, const GroundStation& gs,
                               const TopologyOptions& options = {},
                               const EphemerisTable* ephemeris = nullptr);

void annotate_scenario(NetworkSnapshot& snapshot, const Scenario& scenario);

NetworkSnapshot build_snapshot(double epoch_unix_s, const Constellation& constellation,
                               std::span<const GeoSlot> geo_slots, const GroundStation& gs,
                               const Scenario& scenario, const TopologyOptions& options = {},
                               const EphemerisTable* ephemeris = nullptr);

}  // namespace mlsn
