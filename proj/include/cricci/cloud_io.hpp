#pragma once

#include <string>

#include "cricci/point_cloud.hpp"

namespace cricci {

// Cloud file pair: <base>.csv with header x0,...,x{N-1}[,weight][,rho]
// and <base>.manifest.json with keys
//   {"n", "ambient_dim", "has_weights", "has_rho", "provenance"}.
// Values are written at 17 significant digits so a save/load round trip
// reproduces every double bit-exactly.

/// Loads a cloud pair. `path_base` may include or omit the ".csv" suffix.
PointCloud load_cloud(const std::string& path_base);

/// Writes <base>.csv and <base>.manifest.json. Weights are always
/// written; the rho column appears iff the cloud carries density values.
void save_cloud(const PointCloud& cloud, const std::string& path_base);

}  // namespace cricci
