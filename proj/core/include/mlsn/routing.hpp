#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mlsn/topology.hpp"

namespace mlsn {

enum class Scheme { Llm, Glm };

std::string to_string(Scheme scheme);  // "LLM" / "GLM"

enum class PathStatus { Ok, NoContact, Unreachable };

std::string to_string(PathStatus status);  // "OK" / "NoContact" / "Unreachable"

struct Hop {
  int from = 0;  // node indices into the snapshot
  int to = 0;
  LinkClass cls = LinkClass::GsLeo;
  double distance_m = 0.0;
  double rate_bps = 0.0;
  double phi = 1.0;
};

struct Path {
  Scheme scheme = Scheme::Llm;
  PathStatus status = PathStatus::Unreachable;
  std::vector<Hop> hops;
  double total_length_m = 0.0;
  int relay_hop_count = 0;  // max(0, hops - 1)

  bool ok() const { return status == PathStatus::Ok; }
};

// Endpoint of the GS edge to `layer` with maximum elevation; ties broken by
// lowest node index; nullopt when the GS has no edge to that layer.
std::optional<int> select_entry_satellite(const NetworkSnapshot& snapshot, NodeKind layer);

// LLM: direct GS_LEO hop when the GS sees the destination; otherwise the
// GS_LEO hop to the entry satellite followed by the minimum-total-distance
// route over LEO_LEO edges. Deterministic: distance ties resolve to the
// lower-index predecessor.
Path compute_llm_path(const NetworkSnapshot& snapshot, int destination_leo);

// GLM: GS_GEO hop to the entry GEO, minimum-distance GEO_GEO crosslinks to
// the serving GEO (the visible GEO with the shortest final descent, lowest
// index on ties; unreachable candidates are skipped), then the GEO_LEO hop.
Path compute_glm_path(const NetworkSnapshot& snapshot, int destination_leo);

// Batch forms sharing one shortest-path relaxation; element i corresponds
// to destination LEO i.
std::vector<Path> compute_llm_paths(const NetworkSnapshot& snapshot);
std::vector<Path> compute_glm_paths(const NetworkSnapshot& snapshot);

}  // namespace mlsn
