#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "cricci/point_cloud.hpp"

namespace cricci {

enum class ManifoldKind { circle, sphere, flat_torus, product };
enum class SampleMode { quadrature, iid };

std::string to_string(ManifoldKind kind);
std::string to_string(SampleMode mode);
SampleMode sample_mode_from_string(const std::string& s);

/// Log-density rho describing the measure e^{-rho} dvol.
struct DensitySpec {
  enum class Kind { uniform, ambient_linear, custom };

  Kind kind = Kind::uniform;
  std::vector<double> direction;  // ambient_linear: rho(x) = <direction, x>
  std::vector<double> table;      // custom: per-point values, no closed form

  static DensitySpec uniform() { return {}; }
  static DensitySpec ambient_linear(std::vector<double> a);

  bool is_uniform() const { return kind == Kind::uniform; }

  /// rho(x). Throws unsupported_error for custom tables (no pointwise
  /// closed form).
  double log_density(std::span<const double> x) const;

  nlohmann::ordered_json to_json() const;
  static DensitySpec from_json(const nlohmann::json& j);
};

/// Reference manifolds with closed-form geometry: the circle of radius
/// r in R^2, the round sphere S^d of radius r in R^{d+1}, the flat
/// 2-torus embedded in R^4 as a product of two circles, and products of
/// the above (ambient dimensions concatenate).
struct ManifoldSpec {
  ManifoldKind kind = ManifoldKind::sphere;
  int dim = 2;                 // intrinsic dimension d
  std::vector<double> radii;   // circle/sphere: {r}; flat_torus: {r1, r2}
  std::vector<ManifoldSpec> factors;  // product only

  static ManifoldSpec circle(double r);
  static ManifoldSpec sphere(int d, double r);
  static ManifoldSpec flat_torus(double r1, double r2);
  static ManifoldSpec product(std::vector<ManifoldSpec> factors);

  int intrinsic_dim() const;
  int ambient_dim() const;
  double injectivity_radius() const;
  /// max ||x|| over the manifold; used as a rejection-sampling envelope.
  double bounding_radius() const;

  nlohmann::ordered_json to_json() const;
  static ManifoldSpec from_json(const nlohmann::json& j);
};

/// Unit-speed geodesic data: base point on the manifold and a unit
/// tangent direction at it (both ambient vectors).
struct GeodesicSpec {
  std::vector<double> base;
  std::vector<double> direction;

  nlohmann::ordered_json to_json() const;
  static GeodesicSpec from_json(const nlohmann::json& j);
};

/// Analytic oracle bundle for a ManifoldSpec: sampling/quadrature,
/// geodesics, intrinsic distance, and closed-form (weighted) Ricci
/// values used as validation targets.
class ManifoldOracle {
 public:
  explicit ManifoldOracle(ManifoldSpec spec);

  const ManifoldSpec& spec() const { return spec_; }

  /// Generates a reference cloud. Quadrature mode returns nodes with
  /// weights proportional to local area elements (circle/torus: exact
  /// uniform parameter grids; sphere d=2: Fibonacci lattice with equal
  /// weights); iid mode samples from e^{-rho} dvol (normalized) with
  /// weights 1/n. density_log is populated when the density is
  /// non-uniform. The actual point count may be rounded to the nearest
  /// realizable grid size in quadrature mode (e.g. m^2 on the torus).
  PointCloud generate_cloud(std::size_t n, SampleMode mode, std::uint64_t seed,
                            const DensitySpec& density = {}) const;

  bool on_manifold(std::span<const double> p, double tol = 1e-12) const;
  /// Validates base-on-manifold, unit length, and tangency (1e-12).
  void validate_geodesic(const GeodesicSpec& g) const;

  /// gamma(s) for the unit-speed geodesic described by g.
  std::vector<double> geodesic_point(const GeodesicSpec& g, double s) const;

  /// Intrinsic distance between two on-manifold points.
  double geodesic_distance(std::span<const double> x,
                           std::span<const double> y) const;

  /// Ric(v, v) for the unit tangent v of g. Sphere: (d-1)/r^2; circle
  /// and flat torus: 0; products combine block-diagonally.
  double analytic_ricci(const GeodesicSpec& g) const;

  /// Bakry-Emery tensor (Ric + Hess rho)(v, v) for a twice
  /// differentiable density (uniform or ambient_linear).
  double analytic_ricci_infinity(const GeodesicSpec& g,
                                 const DensitySpec& density) const;

  /// Hess rho(v, v) of the restricted density, closed form.
  double hessian_log_density(const GeodesicSpec& g,
                             const DensitySpec& density) const;

  /// Estimated mesh norm (covering radius) of a cloud's positive-weight
  /// points, via a deterministic set of uniform probe draws.
  double mesh_norm_estimate(const PointCloud& cloud,
                            std::size_t probe_count = 1024,
                            std::uint64_t seed = 0x6d657368) const;

 private:
  ManifoldSpec spec_;
};

}  // namespace cricci
