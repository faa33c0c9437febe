#include "cricci/point_cloud.hpp"

#include <atomic>
#include <cmath>

#include "cricci/numerics.hpp"

namespace cricci {

namespace {
std::uint64_t next_cloud_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}
}  // namespace

PointCloud::PointCloud(std::size_t ambient_dim, std::vector<double> coords,
                       std::vector<double> weights,
                       std::optional<std::vector<double>> density_log,
                       nlohmann::ordered_json provenance)
    : dim_(ambient_dim),
      coords_(std::move(coords)),
      weights_(std::move(weights)),
      density_log_(std::move(density_log)),
      provenance_(std::move(provenance)),
      id_(next_cloud_id()) {
  if (dim_ == 0) throw schema_error("point cloud: ambient_dim must be positive");
  if (coords_.size() % dim_ != 0)
    throw schema_error("point cloud: coordinate buffer is not a multiple of ambient_dim");
  n_ = coords_.size() / dim_;
  if (n_ == 0) throw schema_error("point cloud: no points");

  if (weights_.empty())
    weights_.assign(n_, 1.0 / static_cast<double>(n_));
  if (weights_.size() != n_)
    throw schema_error("point cloud: weights length != point count");
  if (density_log_ && density_log_->size() != n_)
    throw schema_error("point cloud: density_log length != point count");

  KahanAccum mass;
  for (std::size_t i = 0; i < n_; ++i) {
    const double w = weights_[i];
    if (!std::isfinite(w) || w < 0.0)
      throw schema_error("point cloud: weights must be finite and >= 0");
    mass.add(w);
  }
  total_mass_ = mass.total();
  if (total_mass_ <= 0.0)
    throw degenerate_error("point cloud: degenerate measure (all weights zero)");

  for (double c : coords_)
    if (!std::isfinite(c)) throw schema_error("point cloud: non-finite coordinate");
  if (density_log_)
    for (double r : *density_log_)
      if (!std::isfinite(r)) throw schema_error("point cloud: non-finite density value");
}

PointCloud::ProbeResult PointCloud::with_probes(
    const std::vector<std::vector<double>>& pts) const {
  std::vector<double> coords = coords_;
  std::vector<double> weights = weights_;
  std::optional<std::vector<double>> rho = density_log_;
  std::vector<std::size_t> indices;
  indices.reserve(pts.size());
  for (const auto& p : pts) {
    if (p.size() != dim_)
      throw schema_error("probe point: dimension mismatch (expected " +
                         std::to_string(dim_) + ", got " +
                         std::to_string(p.size()) + ")");
    indices.push_back(weights.size());
    coords.insert(coords.end(), p.begin(), p.end());
    weights.push_back(0.0);
    if (rho) rho->push_back(0.0);  // placeholder; probes carry no measure
  }
  return {PointCloud(dim_, std::move(coords), std::move(weights), std::move(rho),
                     provenance_),
          std::move(indices)};
}

ScalarField::ScalarField(const PointCloud& cloud, std::vector<double> values)
    : values_(std::move(values)), cloud_id_(cloud.id()) {
  if (values_.size() != cloud.size())
    throw schema_error("scalar field: length != cloud size");
}

ScalarField ambient_linear_field(const PointCloud& cloud,
                                 std::span<const double> direction,
                                 double offset) {
  if (direction.size() != cloud.ambient_dim())
    throw schema_error("ambient_linear_field: direction dimension mismatch");
  std::vector<double> values(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i)
    values[i] = dot(direction, cloud.point(i)) + offset;
  return ScalarField(cloud, std::move(values));
}

double chordal_distance(const PointCloud& cloud, std::size_t i, std::size_t j) {
  return std::sqrt(squared_distance(cloud.point(i), cloud.point(j)));
}

}  // namespace cricci
