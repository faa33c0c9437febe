#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"

#include "cricci/errors.hpp"

namespace cricci {

/// A weighted point cloud in ambient Euclidean space.
///
/// Coordinates are stored row-major (n x ambient_dim). Weights carry
/// the measure and are deliberately unnormalized: every operator built
/// on top is a ratio of kernel sums, so total mass never needs to be 1.
/// Points with weight exactly 0 are "probe points" -- evaluation sites
/// that carry no measure and therefore perturb nothing.
///
/// Immutable after construction; safe for concurrent reads.
class PointCloud {
 public:
  PointCloud(std::size_t ambient_dim, std::vector<double> coords,
             std::vector<double> weights = {},
             std::optional<std::vector<double>> density_log = std::nullopt,
             nlohmann::ordered_json provenance = nullptr);

  std::size_t size() const { return n_; }
  std::size_t ambient_dim() const { return dim_; }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  const std::vector<double>& coords() const { return coords_; }
  const std::vector<double>& weights() const { return weights_; }
  double weight(std::size_t i) const { return weights_[i]; }
  bool is_probe(std::size_t i) const { return weights_[i] == 0.0; }

  const std::optional<std::vector<double>>& density_log() const {
    return density_log_;
  }
  const nlohmann::ordered_json& provenance() const { return provenance_; }

  /// Sum of all weights (cached at construction).
  double total_mass() const { return total_mass_; }

  /// Identity token used to bind ScalarFields to the cloud they were
  /// built on. Unique per constructed instance.
  std::uint64_t id() const { return id_; }

  struct ProbeResult;
  /// Returns a new cloud with `pts` appended at weight 0 plus their
  /// indices. Existing weights and measure are untouched.
  ProbeResult with_probes(const std::vector<std::vector<double>>& pts) const;

 private:
  std::size_t dim_;
  std::size_t n_;
  std::vector<double> coords_;
  std::vector<double> weights_;
  std::optional<std::vector<double>> density_log_;
  nlohmann::ordered_json provenance_;
  double total_mass_;
  std::uint64_t id_;
};

struct PointCloud::ProbeResult {
  PointCloud cloud;
  std::vector<std::size_t> indices;
};

/// Values of a scalar function over a cloud's points, aligned by index
/// and bound to the cloud via its id.
class ScalarField {
 public:
  ScalarField(const PointCloud& cloud, std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }
  std::uint64_t cloud_id() const { return cloud_id_; }

 private:
  std::vector<double> values_;
  std::uint64_t cloud_id_;
};

/// values[i] = <direction, points[i]> + offset.
ScalarField ambient_linear_field(const PointCloud& cloud,
                                 std::span<const double> direction,
                                 double offset = 0.0);

/// Euclidean distance between two cloud points.
double chordal_distance(const PointCloud& cloud, std::size_t i, std::size_t j);

}  // namespace cricci
