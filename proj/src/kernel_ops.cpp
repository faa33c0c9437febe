#include "cricci/kernel_ops.hpp"

#include <cmath>

#include "cricci/numerics.hpp"

namespace cricci {

EvalPolicy EvalPolicy::blocked(std::size_t block) {
  if (block == 0) throw invalid_argument_error("policy: block size must be positive");
  EvalPolicy p;
  p.kind = PolicyKind::blocked;
  p.block_size = block;
  return p;
}

EvalPolicy EvalPolicy::truncated(double tau0) {
  if (!(tau0 > 0.0))
    throw invalid_argument_error("policy: truncation radius must be positive");
  EvalPolicy p;
  p.kind = PolicyKind::truncated;
  p.radius = tau0;
  return p;
}

EvalPolicy EvalPolicy::parse(const std::string& text) {
  if (text == "dense") return dense();
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "blocked") {
    if (arg.empty()) return blocked(256);
    return blocked(static_cast<std::size_t>(std::stoull(arg)));
  }
  if (head == "truncated") {
    double tau0;
    if (!parse_double(arg, tau0))
      throw invalid_argument_error("policy: truncated:<tau0> needs a number");
    return truncated(tau0);
  }
  throw invalid_argument_error("policy: expected dense|blocked:<B>|truncated:<tau0>, got '" +
                               text + "'");
}

std::string EvalPolicy::to_string() const {
  switch (kind) {
    case PolicyKind::dense: return "dense";
    case PolicyKind::blocked: return "blocked:" + std::to_string(block_size);
    case PolicyKind::truncated: return "truncated:" + fmt_g17(radius);
  }
  return "?";
}

namespace {

// Row reduction core shared by every operator: iterates j in ascending
// index order, skipping zero-mass points and (for truncated policies)
// pairs beyond the cutoff radius, and feeds kw = ew_j * K_ij through a
// compensated blocked accumulator. M simultaneous sums per traversal.
template <std::size_t M, class Term>
std::array<double, M> reduce_row(const double* coords, std::size_t n,
                                 std::size_t dim, const double* ew,
                                 std::size_t i, double inv2t, double tau_sq,
                                 std::size_t block, Term&& term) {
  BlockedAccum<M> acc(block);
  const double* xi = coords + i * dim;
  std::array<double, M> contrib;
  for (std::size_t j = 0; j < n; ++j) {
    const double wj = ew[j];
    if (wj == 0.0) continue;
    const double* xj = coords + j * dim;
    double d2 = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      const double dk = xi[k] - xj[k];
      d2 += dk * dk;
    }
    if (d2 > tau_sq) continue;
    const double kw = wj * std::exp(-d2 * inv2t);
    term(j, kw, contrib);
    acc.add(contrib);
  }
  return acc.total();
}

constexpr std::size_t kNoBlocking = std::numeric_limits<std::size_t>::max();

}  // namespace

KernelCache::KernelCache(std::shared_ptr<const PointCloud> cloud, double t,
                         double alpha, EvalPolicy policy)
    : cloud_(std::move(cloud)), t_(t), alpha_(alpha), policy_(policy) {
  if (!cloud_) throw invalid_argument_error("kernel cache: null cloud");
  if (!(t_ > 0.0)) throw invalid_argument_error("kernel cache: invalid scale t (must be > 0)");
  if (!(alpha_ >= 0.0 && alpha_ <= 1.0))
    throw invalid_argument_error("kernel cache: alpha must lie in [0, 1]");
  build();
}

KernelCache::KernelCache(PointCloud cloud, double t, double alpha,
                         EvalPolicy policy)
    : KernelCache(std::make_shared<const PointCloud>(std::move(cloud)), t, alpha,
                  policy) {}

void KernelCache::build() {
  const std::size_t n = cloud_->size();
  const double* coords = cloud_->coords().data();
  const double* w = cloud_->weights().data();
  const std::size_t dim = cloud_->ambient_dim();
  const double inv2t = 1.0 / (2.0 * t_);
  const double tau_sq =
      policy_.kind == PolicyKind::truncated ? sq(policy_.radius)
                                            : std::numeric_limits<double>::infinity();
  const std::size_t block =
      policy_.kind == PolicyKind::blocked ? policy_.block_size : kNoBlocking;

  std::vector<double> base(n);
  parallel_for(n, [&](std::size_t i) {
    base[i] = reduce_row<1>(coords, n, dim, w, i, inv2t, tau_sq, block,
                            [](std::size_t, double kw, std::array<double, 1>& c) {
                              c[0] = kw;
                            })[0];
  });
  for (std::size_t i = 0; i < n; ++i) {
    if (std::isnan(base[i]))
      throw numeric_error("kernel cache: theta is NaN at index " + std::to_string(i));
    if (base[i] <= 0.0)
      throw degenerate_error("kernel cache: degenerate scale, theta underflowed to zero at index " +
                             std::to_string(i));
  }

  if (alpha_ == 0.0) {
    // theta^0 == 1: the alpha-normalized quantities coincide with the
    // plain ones, including their bits.
    eff_weights_ = cloud_->weights();
    theta_base_ = std::make_shared<ScalarField>(*cloud_, base);
    theta_alpha_ = std::make_shared<ScalarField>(*cloud_, std::move(base));
  } else {
    eff_weights_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      eff_weights_[i] = w[i] * std::pow(base[i], -alpha_);
    std::vector<double> alpha_field(n);
    parallel_for(n, [&](std::size_t i) {
      alpha_field[i] =
          reduce_row<1>(coords, n, dim, eff_weights_.data(), i, inv2t, tau_sq, block,
                        [](std::size_t, double kw, std::array<double, 1>& c) {
                          c[0] = kw;
                        })[0];
    });
    for (std::size_t i = 0; i < n; ++i)
      if (!std::isfinite(alpha_field[i]) || alpha_field[i] <= 0.0)
        throw numeric_error("kernel cache: theta_alpha invalid at index " +
                            std::to_string(i));
    theta_base_ = std::make_shared<ScalarField>(*cloud_, std::move(base));
    theta_alpha_ = std::make_shared<ScalarField>(*cloud_, std::move(alpha_field));
  }

  KahanAccum mass;
  for (double v : eff_weights_) mass.add(v);
  eff_mass_ = mass.total();
}

double KernelCache::truncation_bound() const {
  if (policy_.kind != PolicyKind::truncated) return 0.0;
  return eff_mass_ * std::exp(-sq(policy_.radius) / (2.0 * t_));
}

void KernelCache::check_field(const ScalarField& f) const {
  if (f.cloud_id() != cloud_->id() || f.size() != cloud_->size())
    throw schema_error("kernel operator: field is not aligned with the cache's cloud");
}

double KernelCache::theta_row(std::size_t i, const double* weights) const {
  const double inv2t = 1.0 / (2.0 * t_);
  const double tau_sq =
      policy_.kind == PolicyKind::truncated ? sq(policy_.radius)
                                            : std::numeric_limits<double>::infinity();
  const std::size_t block =
      policy_.kind == PolicyKind::blocked ? policy_.block_size : kNoBlocking;
  return reduce_row<1>(cloud_->coords().data(), cloud_->size(), cloud_->ambient_dim(),
                       weights, i, inv2t, tau_sq, block,
                       [](std::size_t, double kw, std::array<double, 1>& c) {
                         c[0] = kw;
                       })[0];
}

double KernelCache::l_row(std::size_t i, const std::vector<double>& f) const {
  const double inv2t = 1.0 / (2.0 * t_);
  const double tau_sq =
      policy_.kind == PolicyKind::truncated ? sq(policy_.radius)
                                            : std::numeric_limits<double>::infinity();
  const std::size_t block =
      policy_.kind == PolicyKind::blocked ? policy_.block_size : kNoBlocking;
  const double fi = f[i];
  const double* fv = f.data();
  const auto s = reduce_row<1>(cloud_->coords().data(), cloud_->size(),
                               cloud_->ambient_dim(), eff_weights_.data(), i, inv2t,
                               tau_sq, block,
                               [fv, fi](std::size_t j, double kw, std::array<double, 1>& c) {
                                 c[0] = kw * (fv[j] - fi);
                               });
  return (2.0 / t_) * (s[0] / theta_alpha_->values()[i]);
}

double KernelCache::gamma_row(std::size_t i, const std::vector<double>& f,
                              const std::vector<double>& h) const {
  const double inv2t = 1.0 / (2.0 * t_);
  const double tau_sq =
      policy_.kind == PolicyKind::truncated ? sq(policy_.radius)
                                            : std::numeric_limits<double>::infinity();
  const std::size_t block =
      policy_.kind == PolicyKind::blocked ? policy_.block_size : kNoBlocking;
  const double fi = f[i];
  const double hi = h[i];
  const double* fv = f.data();
  const double* hv = h.data();
  const auto s = reduce_row<1>(
      cloud_->coords().data(), cloud_->size(), cloud_->ambient_dim(),
      eff_weights_.data(), i, inv2t, tau_sq, block,
      [fv, hv, fi, hi](std::size_t j, double kw, std::array<double, 1>& c) {
        c[0] = kw * (fv[j] - fi) * (hv[j] - hi);
      });
  return (1.0 / t_) * (s[0] / theta_alpha_->values()[i]);
}

ScalarField KernelCache::apply_L(const ScalarField& f) const {
  check_field(f);
  const std::size_t n = cloud_->size();
  std::vector<double> out(n);
  const auto& fv = f.values();
  parallel_for(n, [&](std::size_t i) { out[i] = l_row(i, fv); });
  return ScalarField(*cloud_, std::move(out));
}

ScalarField KernelCache::gamma(const ScalarField& f, const ScalarField& h) const {
  check_field(f);
  check_field(h);
  const std::size_t n = cloud_->size();
  std::vector<double> out(n);
  const auto& fv = f.values();
  const auto& hv = h.values();
  parallel_for(n, [&](std::size_t i) { out[i] = gamma_row(i, fv, hv); });
  return ScalarField(*cloud_, std::move(out));
}

ScalarField KernelCache::gamma_via_identity(const ScalarField& f,
                                            const ScalarField& h) const {
  check_field(f);
  check_field(h);
  const std::size_t n = cloud_->size();
  std::vector<double> prod(n);
  for (std::size_t i = 0; i < n; ++i) prod[i] = f[i] * h[i];
  const ScalarField fh(*cloud_, std::move(prod));
  const ScalarField l_fh = apply_L(fh);
  const ScalarField l_f = apply_L(f);
  const ScalarField l_h = apply_L(h);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = 0.5 * (l_fh[i] - l_f[i] * h[i] - f[i] * l_h[i]);
  return ScalarField(*cloud_, std::move(out));
}

ScalarField KernelCache::gamma2(const ScalarField& f, const ScalarField& h) const {
  check_field(f);
  check_field(h);
  const std::size_t n = cloud_->size();
  const ScalarField lf = apply_L(f);
  const ScalarField lh = apply_L(h);
  const ScalarField g = gamma(f, h);
  const auto& fv = f.values();
  const auto& hv = h.values();
  const auto& lfv = lf.values();
  const auto& lhv = lh.values();
  const auto& gv = g.values();
  std::vector<double> out(n);
  parallel_for(n, [&](std::size_t i) {
    const double lg = l_row(i, gv);
    const double g1 = gamma_row(i, lfv, hv);
    const double g2 = gamma_row(i, fv, lhv);
    out[i] = 0.5 * (lg - (g1 + g2));
  });
  return ScalarField(*cloud_, std::move(out));
}

double KernelCache::gamma2_at(const ScalarField& f, std::size_t i) const {
  check_field(f);
  if (i >= cloud_->size())
    throw invalid_argument_error("gamma2_at: index out of range");
  const ScalarField lf = apply_L(f);
  const ScalarField g = gamma(f, f);
  const auto& fv = f.values();
  const auto& lfv = lf.values();
  // Same combination as gamma2() so the two routes agree bit-for-bit.
  const double lg = l_row(i, g.values());
  const double g1 = gamma_row(i, lfv, fv);
  const double g2 = gamma_row(i, fv, lfv);
  return 0.5 * (lg - (g1 + g2));
}

double KernelCache::apply_L_at(const ScalarField& f, std::size_t i) const {
  check_field(f);
  if (i >= cloud_->size())
    throw invalid_argument_error("apply_L_at: index out of range");
  return l_row(i, f.values());
}

double KernelCache::gamma_at(const ScalarField& f, const ScalarField& h,
                             std::size_t i) const {
  check_field(f);
  check_field(h);
  if (i >= cloud_->size())
    throw invalid_argument_error("gamma_at: index out of range");
  return gamma_row(i, f.values(), h.values());
}

}  // namespace cricci
