#pragma once

#include <utility>
#include <vector>

#include "cricci/kernel_ops.hpp"
#include "cricci/manifold.hpp"
#include "cricci/point_cloud.hpp"

namespace cricci {

enum class Normalization { raw, unit };
enum class DistanceMode { chordal, intrinsic };

std::string to_string(Normalization n);
std::string to_string(DistanceMode m);
Normalization normalization_from_string(const std::string& s);
DistanceMode distance_mode_from_string(const std::string& s);

/// A pair of base points (indices into a cloud; probes allowed) for the
/// comparison fields below. Unit normalization requires d(x, y) > 0;
/// intrinsic distances require an oracle covering both points.
struct BasePair {
  std::size_t x_index = 0;
  std::size_t y_index = 0;
  Normalization normalization = Normalization::unit;
  DistanceMode distance_mode = DistanceMode::chordal;
};

/// Distance-built comparison field over the cloud:
///   raw:  f(z) = (d^2(x,y) - d^2(y,z) + d^2(z,x)) / 2
///   unit: F(z) = (d^2(y,z) - d^2(x,z) - d^2(x,y)) / (2 d(x,y))
/// In Euclidean geometry these reduce to <y-x, z-x> and -<(y-x)/|y-x|, z-x>;
/// constants and signs are invisible to the quadratic, offset-invariant
/// Gamma2 downstream.
ScalarField base_field(const PointCloud& cloud, const BasePair& pair,
                       const ManifoldOracle* oracle = nullptr);

struct CoarseRicciEstimate {
  BasePair pair;
  double t = 0.0;
  double alpha = 0.0;
  double value = 0.0;
  double theta_x = 0.0;       // kernel density at the base point
  double kernel_mass = 0.0;   // total effective kernel-side mass
  EvalPolicy policy;

  nlohmann::ordered_json to_json() const;
};

/// Gamma2(f_pair, f_pair) evaluated at the pair's first point: the
/// coarse Ricci curvature of the cache's operator at (x, y). Unit
/// normalization recovers curvature values directly; raw normalization
/// scales with d^2(x, y).
CoarseRicciEstimate coarse_ricci(const KernelCache& cache, const BasePair& pair,
                                 const ManifoldOracle* oracle = nullptr);

/// Raw-normalization estimates along the geodesic of `g`: probes are
/// placed at the base point and at gamma(s) for every s in `s_grid`
/// (one augmented cloud, one cache), then each pair (x, gamma(s)) is
/// evaluated. s values must be positive, sorted, and within the
/// injectivity radius.
std::vector<CoarseRicciEstimate> ricci_profile(
    const KernelCache& cache, const ManifoldOracle& oracle,
    const GeodesicSpec& g, const std::vector<double>& s_grid,
    DistanceMode distance_mode = DistanceMode::chordal);

/// Half the finite-difference second derivative at s = 0 of a profile
/// of (s, value) samples on a uniform grid {h, 2h, ...}, taking the
/// limit value at 0 as 0. Exact on quadratics: K s^2 -> K.
double second_derivative_estimate(
    const std::vector<std::pair<double, double>>& profile);

}  // namespace cricci
