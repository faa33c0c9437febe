#include "cricci/coarse_ricci.hpp"

#include <algorithm>
#include <cmath>

#include "cricci/numerics.hpp"

namespace cricci {

std::string to_string(Normalization n) {
  return n == Normalization::raw ? "raw" : "unit";
}

std::string to_string(DistanceMode m) {
  return m == DistanceMode::chordal ? "chordal" : "intrinsic";
}

Normalization normalization_from_string(const std::string& s) {
  if (s == "raw") return Normalization::raw;
  if (s == "unit") return Normalization::unit;
  throw invalid_argument_error("unknown normalization: " + s);
}

DistanceMode distance_mode_from_string(const std::string& s) {
  if (s == "chordal") return DistanceMode::chordal;
  if (s == "intrinsic") return DistanceMode::intrinsic;
  throw invalid_argument_error("unknown distance mode: " + s);
}

namespace {

double pair_distance(const PointCloud& cloud, const BasePair& pair,
                     std::size_t i, std::size_t j, const ManifoldOracle* oracle) {
  if (pair.distance_mode == DistanceMode::chordal)
    return chordal_distance(cloud, i, j);
  return oracle->geodesic_distance(cloud.point(i), cloud.point(j));
}

}  // namespace

ScalarField base_field(const PointCloud& cloud, const BasePair& pair,
                       const ManifoldOracle* oracle) {
  const std::size_t n = cloud.size();
  if (pair.x_index >= n || pair.y_index >= n)
    throw invalid_argument_error("base_field: pair index out of range");
  if (pair.distance_mode == DistanceMode::intrinsic && oracle == nullptr)
    throw invalid_argument_error(
        "base_field: intrinsic distances need a manifold oracle");

  const double dxy = pair_distance(cloud, pair, pair.x_index, pair.y_index, oracle);
  if (pair.normalization == Normalization::unit && !(dxy > 0.0))
    throw degenerate_error(
        "base_field: unit normalization requires distinct base points");

  const double dxy_sq = sq(dxy);
  std::vector<double> values(n);
  for (std::size_t z = 0; z < n; ++z) {
    const double dyz_sq = sq(pair_distance(cloud, pair, pair.y_index, z, oracle));
    const double dxz_sq = sq(pair_distance(cloud, pair, pair.x_index, z, oracle));
    if (pair.normalization == Normalization::raw)
      values[z] = 0.5 * (dxy_sq - dyz_sq + dxz_sq);
    else
      values[z] = 0.5 * (dyz_sq - dxz_sq - dxy_sq) / dxy;
  }
  return ScalarField(cloud, std::move(values));
}

nlohmann::ordered_json CoarseRicciEstimate::to_json() const {
  nlohmann::ordered_json j;
  j["x"] = pair.x_index;
  j["y"] = pair.y_index;
  j["t"] = t;
  j["alpha"] = alpha;
  j["normalization"] = to_string(pair.normalization);
  j["distance_mode"] = to_string(pair.distance_mode);
  j["value"] = value;
  j["theta_x"] = theta_x;
  return j;
}

CoarseRicciEstimate coarse_ricci(const KernelCache& cache, const BasePair& pair,
                                 const ManifoldOracle* oracle) {
  const ScalarField field = base_field(cache.cloud(), pair, oracle);
  const double value = cache.gamma2_at(field, pair.x_index);
  if (!std::isfinite(value))
    throw numeric_error("coarse_ricci: non-finite estimate at t=" +
                        fmt_g17(cache.t()) + ", pair (" +
                        std::to_string(pair.x_index) + ", " +
                        std::to_string(pair.y_index) + ")");
  CoarseRicciEstimate est;
  est.pair = pair;
  est.t = cache.t();
  est.alpha = cache.alpha();
  est.value = value;
  est.theta_x = cache.theta()[pair.x_index];
  est.kernel_mass = cache.effective_mass();
  est.policy = cache.policy();
  return est;
}

std::vector<CoarseRicciEstimate> ricci_profile(const KernelCache& cache,
                                               const ManifoldOracle& oracle,
                                               const GeodesicSpec& g,
                                               const std::vector<double>& s_grid,
                                               DistanceMode distance_mode) {
  oracle.validate_geodesic(g);
  if (s_grid.empty())
    throw insufficient_data_error("ricci_profile: empty arclength grid");
  if (!std::is_sorted(s_grid.begin(), s_grid.end()))
    throw invalid_argument_error("ricci_profile: arclengths must be sorted");
  const double inj = oracle.spec().injectivity_radius();
  for (double s : s_grid)
    if (!(s > 0.0) || s > inj)
      throw invalid_argument_error(
          "ricci_profile: arclength outside (0, injectivity radius]");

  // One augmentation covers the base point and the whole grid; the
  // probes carry no mass, so they do not interact.
  std::vector<std::vector<double>> probes;
  probes.push_back(g.base);
  for (double s : s_grid) probes.push_back(oracle.geodesic_point(g, s));
  auto augmented = cache.cloud().with_probes(probes);
  KernelCache probe_cache(std::move(augmented.cloud), cache.t(), cache.alpha(),
                          cache.policy());

  std::vector<CoarseRicciEstimate> out;
  out.reserve(s_grid.size());
  for (std::size_t k = 0; k < s_grid.size(); ++k) {
    BasePair pair;
    pair.x_index = augmented.indices[0];
    pair.y_index = augmented.indices[k + 1];
    pair.normalization = Normalization::raw;
    pair.distance_mode = distance_mode;
    out.push_back(coarse_ricci(probe_cache, pair, &oracle));
  }
  return out;
}

double second_derivative_estimate(
    const std::vector<std::pair<double, double>>& profile) {
  if (profile.size() < 3)
    throw insufficient_data_error(
        "second_derivative_estimate: need at least 3 profile points");
  std::vector<std::pair<double, double>> sorted = profile;
  std::sort(sorted.begin(), sorted.end());
  const double h = sorted[0].first;
  if (!(h > 0.0))
    throw invalid_argument_error("second_derivative_estimate: arclengths must be positive");
  if (std::abs(sorted[1].first - 2.0 * h) > 1e-9 * h)
    throw invalid_argument_error(
        "second_derivative_estimate: grid must be uniform ({h, 2h, ...})");
  // Three-point stencil at 0 with value(0) = 0 (the raw field collapses
  // to the zero field as s -> 0), halved.
  const double second = (sorted[1].second - 2.0 * sorted[0].second) / sq(h);
  return 0.5 * second;
}

}  // namespace cricci
