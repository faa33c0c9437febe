#include "cricci/manifold.hpp"

#include <algorithm>
#include <cmath>

#include "cricci/numerics.hpp"

namespace cricci {

namespace {

double wrap_angle(double a) {
  // remainder maps into [-pi, pi]
  return std::remainder(a, 2.0 * M_PI);
}

double clamp1(double v) { return std::min(1.0, std::max(-1.0, v)); }

}  // namespace

std::string to_string(ManifoldKind kind) {
  switch (kind) {
    case ManifoldKind::circle: return "circle";
    case ManifoldKind::sphere: return "sphere";
    case ManifoldKind::flat_torus: return "flat_torus";
    case ManifoldKind::product: return "product";
  }
  return "?";
}

std::string to_string(SampleMode mode) {
  return mode == SampleMode::quadrature ? "quadrature" : "iid";
}

SampleMode sample_mode_from_string(const std::string& s) {
  if (s == "quadrature") return SampleMode::quadrature;
  if (s == "iid") return SampleMode::iid;
  throw invalid_argument_error("unknown sample mode: " + s);
}

// ---------------------------------------------------------------------------
// DensitySpec

DensitySpec DensitySpec::ambient_linear(std::vector<double> a) {
  DensitySpec d;
  d.kind = Kind::ambient_linear;
  d.direction = std::move(a);
  for (double c : d.direction)
    if (!std::isfinite(c))
      throw invalid_argument_error("density: non-finite direction component");
  return d;
}

double DensitySpec::log_density(std::span<const double> x) const {
  switch (kind) {
    case Kind::uniform:
      return 0.0;
    case Kind::ambient_linear:
      if (direction.size() != x.size())
        throw schema_error("density: direction dimension mismatch");
      return dot(direction, x);
    case Kind::custom:
      throw unsupported_error("density: custom tables have no pointwise closed form");
  }
  return 0.0;
}

nlohmann::ordered_json DensitySpec::to_json() const {
  nlohmann::ordered_json j;
  switch (kind) {
    case Kind::uniform:
      j["kind"] = "uniform";
      j["a"] = nullptr;
      break;
    case Kind::ambient_linear:
      j["kind"] = "ambient_linear";
      j["a"] = direction;
      break;
    case Kind::custom:
      j["kind"] = "custom";
      j["a"] = nullptr;
      break;
  }
  return j;
}

DensitySpec DensitySpec::from_json(const nlohmann::json& j) {
  if (j.is_null()) return uniform();
  const std::string kind = j.value("kind", "uniform");
  if (kind == "uniform") return uniform();
  if (kind == "ambient_linear") {
    if (!j.contains("a") || !j.at("a").is_array())
      throw schema_error("density: ambient_linear requires an 'a' array");
    return ambient_linear(j.at("a").get<std::vector<double>>());
  }
  if (kind == "custom") {
    DensitySpec d;
    d.kind = Kind::custom;
    if (j.contains("table") && j.at("table").is_array())
      d.table = j.at("table").get<std::vector<double>>();
    return d;
  }
  throw schema_error("density: unknown kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// ManifoldSpec

ManifoldSpec ManifoldSpec::circle(double r) {
  if (!(r > 0.0)) throw invalid_argument_error("circle: radius must be positive");
  ManifoldSpec s;
  s.kind = ManifoldKind::circle;
  s.dim = 1;
  s.radii = {r};
  return s;
}

ManifoldSpec ManifoldSpec::sphere(int d, double r) {
  if (d < 1) throw invalid_argument_error("sphere: dimension must be >= 1");
  if (!(r > 0.0)) throw invalid_argument_error("sphere: radius must be positive");
  ManifoldSpec s;
  s.kind = ManifoldKind::sphere;
  s.dim = d;
  s.radii = {r};
  return s;
}

ManifoldSpec ManifoldSpec::flat_torus(double r1, double r2) {
  if (!(r1 > 0.0) || !(r2 > 0.0))
    throw invalid_argument_error("flat_torus: both radii must be positive");
  ManifoldSpec s;
  s.kind = ManifoldKind::flat_torus;
  s.dim = 2;
  s.radii = {r1, r2};
  return s;
}

ManifoldSpec ManifoldSpec::product(std::vector<ManifoldSpec> factors) {
  if (factors.size() < 2)
    throw invalid_argument_error("product: needs at least two factors");
  ManifoldSpec s;
  s.kind = ManifoldKind::product;
  s.factors = std::move(factors);
  s.dim = 0;
  for (const auto& f : s.factors) s.dim += f.intrinsic_dim();
  return s;
}

int ManifoldSpec::intrinsic_dim() const { return dim; }

int ManifoldSpec::ambient_dim() const {
  switch (kind) {
    case ManifoldKind::circle: return 2;
    case ManifoldKind::sphere: return dim + 1;
    case ManifoldKind::flat_torus: return 4;
    case ManifoldKind::product: {
      int n = 0;
      for (const auto& f : factors) n += f.ambient_dim();
      return n;
    }
  }
  return 0;
}

double ManifoldSpec::injectivity_radius() const {
  switch (kind) {
    case ManifoldKind::circle: return M_PI * radii[0];
    case ManifoldKind::sphere: return M_PI * radii[0];
    case ManifoldKind::flat_torus: return M_PI * std::min(radii[0], radii[1]);
    case ManifoldKind::product: {
      double r = std::numeric_limits<double>::infinity();
      for (const auto& f : factors) r = std::min(r, f.injectivity_radius());
      return r;
    }
  }
  return 0.0;
}

double ManifoldSpec::bounding_radius() const {
  switch (kind) {
    case ManifoldKind::circle: return radii[0];
    case ManifoldKind::sphere: return radii[0];
    case ManifoldKind::flat_torus:
      return std::sqrt(sq(radii[0]) + sq(radii[1]));
    case ManifoldKind::product: {
      double s = 0.0;
      for (const auto& f : factors) s += sq(f.bounding_radius());
      return std::sqrt(s);
    }
  }
  return 0.0;
}

nlohmann::ordered_json ManifoldSpec::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = to_string(kind);
  j["d"] = dim;
  if (kind == ManifoldKind::flat_torus) {
    j["radii"] = radii;
  } else if (kind == ManifoldKind::product) {
    nlohmann::ordered_json fs = nlohmann::ordered_json::array();
    for (const auto& f : factors) fs.push_back(f.to_json());
    j["factors"] = fs;
  } else {
    j["radius"] = radii[0];
  }
  return j;
}

ManifoldSpec ManifoldSpec::from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "circle") return circle(j.value("radius", 1.0));
  if (kind == "sphere") return sphere(j.value("d", 2), j.value("radius", 1.0));
  if (kind == "flat_torus") {
    const auto radii = j.at("radii").get<std::vector<double>>();
    if (radii.size() != 2) throw schema_error("flat_torus: radii must have 2 entries");
    return flat_torus(radii[0], radii[1]);
  }
  if (kind == "product") {
    std::vector<ManifoldSpec> fs;
    for (const auto& f : j.at("factors")) fs.push_back(from_json(f));
    return product(std::move(fs));
  }
  throw schema_error("manifold: unknown kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// GeodesicSpec

nlohmann::ordered_json GeodesicSpec::to_json() const {
  nlohmann::ordered_json j;
  j["base"] = base;
  j["direction"] = direction;
  return j;
}

GeodesicSpec GeodesicSpec::from_json(const nlohmann::json& j) {
  GeodesicSpec g;
  g.base = j.at("base").get<std::vector<double>>();
  g.direction = j.at("direction").get<std::vector<double>>();
  return g;
}

// ---------------------------------------------------------------------------
// Oracle internals: every operation recurses over the factor structure,
// treating flat_torus as two circle slices.

namespace {

struct Slice {
  std::span<const double> of(std::span<const double> v) const {
    return v.subspan(offset, extent);
  }
  std::size_t offset, extent;
};

// Walks atomic round factors (circle or sphere); fn(radius, x_k, v_k).
template <class Fn>
void for_each_round_factor(const ManifoldSpec& spec, std::span<const double> x,
                           std::span<const double> v, Fn&& fn,
                           std::size_t offset = 0) {
  switch (spec.kind) {
    case ManifoldKind::circle:
    case ManifoldKind::sphere: {
      const std::size_t n = static_cast<std::size_t>(spec.ambient_dim());
      fn(spec, x.subspan(offset, n), v.empty() ? v : v.subspan(offset, n));
      return;
    }
    case ManifoldKind::flat_torus: {
      const ManifoldSpec c1 = ManifoldSpec::circle(spec.radii[0]);
      const ManifoldSpec c2 = ManifoldSpec::circle(spec.radii[1]);
      fn(c1, x.subspan(offset, 2), v.empty() ? v : v.subspan(offset, 2));
      fn(c2, x.subspan(offset + 2, 2), v.empty() ? v : v.subspan(offset + 2, 2));
      return;
    }
    case ManifoldKind::product: {
      std::size_t off = offset;
      for (const auto& f : spec.factors) {
        for_each_round_factor(f, x, v, fn, off);
        off += static_cast<std::size_t>(f.ambient_dim());
      }
      return;
    }
  }
}

double manifold_defect(const ManifoldSpec& spec, std::span<const double> p) {
  double defect = 0.0;
  for_each_round_factor(spec, p, {}, [&](const ManifoldSpec& f,
                                         std::span<const double> xk,
                                         std::span<const double>) {
    defect = std::max(defect, std::abs(norm2(xk) - f.radii[0]));
  });
  return defect;
}

double tangency_defect(const ManifoldSpec& spec, std::span<const double> x,
                       std::span<const double> v) {
  double defect = 0.0;
  for_each_round_factor(
      spec, x, v,
      [&](const ManifoldSpec& f, std::span<const double> xk,
          std::span<const double> vk) {
        // normal at xk is xk / r for round factors
        defect = std::max(defect, std::abs(dot(vk, xk)) / f.radii[0]);
      });
  return defect;
}

void advance_geodesic(const ManifoldSpec& spec, std::span<const double> x,
                      std::span<const double> v, double s,
                      std::span<double> out) {
  // v may have any norm c <= 1 here (a factor's share of a unit product
  // velocity); the factor advances by arclength c * s.
  switch (spec.kind) {
    case ManifoldKind::circle:
    case ManifoldKind::sphere: {
      const double r = spec.radii[0];
      const double c = norm2(v);
      if (c == 0.0) {
        std::copy(x.begin(), x.end(), out.begin());
        return;
      }
      const double phase = c * s / r;
      const double ca = std::cos(phase), sa = std::sin(phase);
      for (std::size_t k = 0; k < x.size(); ++k)
        out[k] = x[k] * ca + (v[k] / c) * r * sa;
      return;
    }
    case ManifoldKind::flat_torus: {
      advance_geodesic(ManifoldSpec::circle(spec.radii[0]), x.subspan(0, 2),
                       v.subspan(0, 2), s, out.subspan(0, 2));
      advance_geodesic(ManifoldSpec::circle(spec.radii[1]), x.subspan(2, 2),
                       v.subspan(2, 2), s, out.subspan(2, 2));
      return;
    }
    case ManifoldKind::product: {
      std::size_t off = 0;
      for (const auto& f : spec.factors) {
        const auto n = static_cast<std::size_t>(f.ambient_dim());
        advance_geodesic(f, x.subspan(off, n), v.subspan(off, n), s,
                         out.subspan(off, n));
        off += n;
      }
      return;
    }
  }
}

double intrinsic_distance(const ManifoldSpec& spec, std::span<const double> x,
                          std::span<const double> y) {
  switch (spec.kind) {
    case ManifoldKind::circle: {
      const double r = spec.radii[0];
      const double a = std::atan2(x[1], x[0]);
      const double b = std::atan2(y[1], y[0]);
      return r * std::abs(wrap_angle(a - b));
    }
    case ManifoldKind::sphere: {
      const double r = spec.radii[0];
      return r * std::acos(clamp1(dot(x, y) / (r * r)));
    }
    case ManifoldKind::flat_torus: {
      const double d1 = intrinsic_distance(ManifoldSpec::circle(spec.radii[0]),
                                           x.subspan(0, 2), y.subspan(0, 2));
      const double d2 = intrinsic_distance(ManifoldSpec::circle(spec.radii[1]),
                                           x.subspan(2, 2), y.subspan(2, 2));
      return std::sqrt(sq(d1) + sq(d2));
    }
    case ManifoldKind::product: {
      double acc = 0.0;
      std::size_t off = 0;
      for (const auto& f : spec.factors) {
        const auto n = static_cast<std::size_t>(f.ambient_dim());
        acc += sq(intrinsic_distance(f, x.subspan(off, n), y.subspan(off, n)));
        off += n;
      }
      return std::sqrt(acc);
    }
  }
  return 0.0;
}

double ricci_of(const ManifoldSpec& spec, std::span<const double> x,
                std::span<const double> v) {
  double acc = 0.0;
  for_each_round_factor(spec, x, v,
                        [&](const ManifoldSpec& f, std::span<const double>,
                            std::span<const double> vk) {
                          if (f.kind == ManifoldKind::sphere && f.dim >= 2)
                            acc += (f.dim - 1) / sq(f.radii[0]) * dot(vk, vk);
                          // circles contribute 0
                        });
  return acc;
}

// Quadrature node sets per atomic factor.
struct Nodes {
  std::vector<double> coords;  // flat, count x dim
  std::vector<double> weights;
  std::size_t dim = 0;
  std::size_t count() const { return dim == 0 ? 0 : coords.size() / dim; }
};

Nodes circle_nodes(double r, std::size_t m) {
  Nodes nd;
  nd.dim = 2;
  nd.coords.reserve(2 * m);
  nd.weights.assign(m, 2.0 * M_PI * r / static_cast<double>(m));
  for (std::size_t k = 0; k < m; ++k) {
    const double a = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(m);
    nd.coords.push_back(r * std::cos(a));
    nd.coords.push_back(r * std::sin(a));
  }
  return nd;
}

Nodes fibonacci_sphere_nodes(double r, std::size_t m) {
  // Offset Fibonacci lattice: quasi-uniform, equal weights 4*pi*r^2/m.
  Nodes nd;
  nd.dim = 3;
  nd.coords.reserve(3 * m);
  nd.weights.assign(m, 4.0 * M_PI * r * r / static_cast<double>(m));
  const double golden = M_PI * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < m; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(m);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * static_cast<double>(i);
    nd.coords.push_back(r * rho * std::cos(phi));
    nd.coords.push_back(r * rho * std::sin(phi));
    nd.coords.push_back(r * z);
  }
  return nd;
}

Nodes tensor_nodes(const Nodes& a, const Nodes& b) {
  Nodes nd;
  nd.dim = a.dim + b.dim;
  const std::size_t na = a.count(), nb = b.count();
  nd.coords.reserve(nd.dim * na * nb);
  nd.weights.reserve(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      nd.coords.insert(nd.coords.end(), a.coords.begin() + i * a.dim,
                       a.coords.begin() + (i + 1) * a.dim);
      nd.coords.insert(nd.coords.end(), b.coords.begin() + j * b.dim,
                       b.coords.begin() + (j + 1) * b.dim);
      nd.weights.push_back(a.weights[i] * b.weights[j]);
    }
  }
  return nd;
}

Nodes quadrature_nodes(const ManifoldSpec& spec, std::size_t n) {
  switch (spec.kind) {
    case ManifoldKind::circle:
      return circle_nodes(spec.radii[0], n);
    case ManifoldKind::sphere:
      if (spec.dim != 2)
        throw unsupported_error(
            "quadrature: only the 2-sphere has a lattice rule; use iid mode");
      return fibonacci_sphere_nodes(spec.radii[0], n);
    case ManifoldKind::flat_torus: {
      const std::size_t m = std::max<std::size_t>(
          2, static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n)))));
      return tensor_nodes(circle_nodes(spec.radii[0], m),
                          circle_nodes(spec.radii[1], m));
    }
    case ManifoldKind::product: {
      const double total_dim = spec.intrinsic_dim();
      Nodes acc;
      bool first = true;
      for (const auto& f : spec.factors) {
        const double share =
            std::pow(static_cast<double>(n), f.intrinsic_dim() / total_dim);
        const std::size_t m = std::max<std::size_t>(
            2, static_cast<std::size_t>(std::llround(share)));
        Nodes fn = quadrature_nodes(f, m);
        acc = first ? std::move(fn) : tensor_nodes(acc, fn);
        first = false;
      }
      return acc;
    }
  }
  throw unsupported_error("quadrature: unhandled manifold kind");
}

void sample_uniform_point(const ManifoldSpec& spec, std::mt19937_64& rng,
                          std::span<double> out) {
  switch (spec.kind) {
    case ManifoldKind::circle: {
      const double a = uniform_in(rng, 0.0, 2.0 * M_PI);
      out[0] = spec.radii[0] * std::cos(a);
      out[1] = spec.radii[0] * std::sin(a);
      return;
    }
    case ManifoldKind::sphere: {
      const std::size_t n = static_cast<std::size_t>(spec.ambient_dim());
      double norm_sq = 0.0;
      do {
        norm_sq = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          out[k] = normal01(rng);
          norm_sq += sq(out[k]);
        }
      } while (norm_sq == 0.0);
      const double scale = spec.radii[0] / std::sqrt(norm_sq);
      for (std::size_t k = 0; k < n; ++k) out[k] *= scale;
      return;
    }
    case ManifoldKind::flat_torus: {
      sample_uniform_point(ManifoldSpec::circle(spec.radii[0]), rng,
                           out.subspan(0, 2));
      sample_uniform_point(ManifoldSpec::circle(spec.radii[1]), rng,
                           out.subspan(2, 2));
      return;
    }
    case ManifoldKind::product: {
      std::size_t off = 0;
      for (const auto& f : spec.factors) {
        const auto n = static_cast<std::size_t>(f.ambient_dim());
        sample_uniform_point(f, rng, out.subspan(off, n));
        off += n;
      }
      return;
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// ManifoldOracle

ManifoldOracle::ManifoldOracle(ManifoldSpec spec) : spec_(std::move(spec)) {
  if (spec_.kind != ManifoldKind::product && spec_.radii.empty())
    throw invalid_argument_error("manifold: missing radius");
}

bool ManifoldOracle::on_manifold(std::span<const double> p, double tol) const {
  if (p.size() != static_cast<std::size_t>(spec_.ambient_dim())) return false;
  return manifold_defect(spec_, p) <= tol * std::max(1.0, spec_.bounding_radius());
}

void ManifoldOracle::validate_geodesic(const GeodesicSpec& g) const {
  const auto dim = static_cast<std::size_t>(spec_.ambient_dim());
  if (g.base.size() != dim || g.direction.size() != dim)
    throw invalid_argument_error("geodesic: ambient dimension mismatch");
  if (!on_manifold(g.base))
    throw invalid_argument_error("geodesic: base point is not on the manifold");
  if (std::abs(norm2(g.direction) - 1.0) > 1e-12)
    throw invalid_argument_error("geodesic: direction must be unit length");
  if (tangency_defect(spec_, g.base, g.direction) > 1e-12)
    throw invalid_argument_error("geodesic: direction is not tangent");
}

std::vector<double> ManifoldOracle::geodesic_point(const GeodesicSpec& g,
                                                   double s) const {
  validate_geodesic(g);
  std::vector<double> out(g.base.size());
  advance_geodesic(spec_, g.base, g.direction, s, out);
  return out;
}

double ManifoldOracle::geodesic_distance(std::span<const double> x,
                                         std::span<const double> y) const {
  if (!on_manifold(x) || !on_manifold(y))
    throw invalid_argument_error("geodesic_distance: point not on the manifold");
  return intrinsic_distance(spec_, x, y);
}

double ManifoldOracle::analytic_ricci(const GeodesicSpec& g) const {
  validate_geodesic(g);
  return ricci_of(spec_, g.base, g.direction);
}

double ManifoldOracle::hessian_log_density(const GeodesicSpec& g,
                                           const DensitySpec& density) const {
  validate_geodesic(g);
  switch (density.kind) {
    case DensitySpec::Kind::uniform:
      return 0.0;
    case DensitySpec::Kind::ambient_linear: {
      if (density.direction.size() != g.base.size())
        throw schema_error("density: direction dimension mismatch");
      // Restriction of a linear function to a round factor of radius r
      // has Hessian -<a_k, x_k>/r^2 * g on that factor.
      double acc = 0.0;
      std::span<const double> a(density.direction);
      std::size_t cursor = 0;
      for_each_round_factor(
          spec_, g.base, g.direction,
          [&](const ManifoldSpec& f, std::span<const double> xk,
              std::span<const double> vk) {
            const auto ak = a.subspan(cursor, xk.size());
            cursor += xk.size();
            acc += -dot(ak, xk) / sq(f.radii[0]) * dot(vk, vk);
          });
      return acc;
    }
    case DensitySpec::Kind::custom:
      throw unsupported_error("density: custom tables have no analytic Hessian");
  }
  return 0.0;
}

double ManifoldOracle::analytic_ricci_infinity(const GeodesicSpec& g,
                                               const DensitySpec& density) const {
  return analytic_ricci(g) + hessian_log_density(g, density);
}

PointCloud ManifoldOracle::generate_cloud(std::size_t n, SampleMode mode,
                                          std::uint64_t seed,
                                          const DensitySpec& density) const {
  if (n < 2) throw degenerate_error("generate_cloud: need at least 2 points");
  if (density.kind == DensitySpec::Kind::custom)
    throw unsupported_error("generate_cloud: cannot sample a custom density table");

  const auto dim = static_cast<std::size_t>(spec_.ambient_dim());
  std::vector<double> coords;
  std::vector<double> weights;
  std::optional<std::vector<double>> rho;
  if (!density.is_uniform()) rho.emplace();

  if (mode == SampleMode::quadrature) {
    Nodes nd = quadrature_nodes(spec_, n);
    coords = std::move(nd.coords);
    weights = std::move(nd.weights);
    if (!density.is_uniform()) {
      const std::size_t count = weights.size();
      rho->reserve(count);
      for (std::size_t i = 0; i < count; ++i) {
        const double r = density.log_density(
            std::span<const double>(coords).subspan(i * dim, dim));
        rho->push_back(r);
        weights[i] *= std::exp(-r);
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    // Rejection envelope: e^{-rho} <= e^{|a| R} over the manifold.
    double log_envelope = 0.0;
    if (!density.is_uniform())
      log_envelope = norm2(density.direction) * spec_.bounding_radius();
    coords.reserve(n * dim);
    std::vector<double> pt(dim);
    for (std::size_t i = 0; i < n; ++i) {
      while (true) {
        sample_uniform_point(spec_, rng, pt);
        if (density.is_uniform()) break;
        const double r = density.log_density(pt);
        if (canonical_u01(rng) < std::exp(-r - log_envelope)) break;
      }
      coords.insert(coords.end(), pt.begin(), pt.end());
      if (rho) rho->push_back(density.log_density(pt));
    }
    weights.assign(n, 1.0 / static_cast<double>(n));
  }

  nlohmann::ordered_json provenance = spec_.to_json();
  provenance["mode"] = to_string(mode);
  provenance["seed"] = seed;
  provenance["density"] = density.to_json();

  return PointCloud(dim, std::move(coords), std::move(weights), std::move(rho),
                    std::move(provenance));
}

double ManifoldOracle::mesh_norm_estimate(const PointCloud& cloud,
                                          std::size_t probe_count,
                                          std::uint64_t seed) const {
  if (cloud.ambient_dim() != static_cast<std::size_t>(spec_.ambient_dim()))
    throw schema_error("mesh_norm_estimate: cloud/manifold dimension mismatch");
  std::mt19937_64 rng(seed);
  const auto dim = cloud.ambient_dim();
  std::vector<double> pt(dim);
  double covering = 0.0;
  for (std::size_t p = 0; p < probe_count; ++p) {
    sample_uniform_point(spec_, rng, pt);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      if (cloud.is_probe(i)) continue;
      best = std::min(best, squared_distance(pt, cloud.point(i)));
    }
    covering = std::max(covering, best);
  }
  return std::sqrt(covering);
}

}  // namespace cricci
