#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mlsn/vec3.hpp"

namespace mlsn {

// Optional externally supplied positions. CSV columns:
//   sat_id,epoch_iso8601,x_m,y_m,z_m
// Rows for one sat_id must be strictly increasing in time. Lookups between
// samples interpolate linearly per axis; lookups outside a sat's sampled
// span throw DomainError.
class EphemerisTable {
 public:
  static EphemerisTable load_csv(const std::string& path);
  static EphemerisTable parse_csv(const std::string& content, const std::string& origin);

  bool empty() const { return samples_.empty(); }
  bool has(const std::string& sat_id) const { return samples_.count(sat_id) > 0; }
  std::size_t sat_count() const { return samples_.size(); }

  EcefPosition position(const std::string& sat_id, double t_unix_s) const;

 private:
  std::map<std::string, std::vector<std::pair<double, EcefPosition>>> samples_;
};

}  // namespace mlsn
