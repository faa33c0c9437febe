#pragma once

#include <limits>
#include <memory>
#include <string>

#include "cricci/point_cloud.hpp"

namespace cricci {

enum class PolicyKind { dense, blocked, truncated };

/// Kernel evaluation strategy. All three traverse kernel rows in the
/// same fixed index order with compensated summation, so each policy is
/// deterministic and independent of worker count; `blocked` additionally
/// folds terms through a two-level block reduction, and `truncated`
/// drops pairs farther than `radius` apart, certifying the dropped mass
/// with the Gaussian tail bound (total mass) * exp(-radius^2 / (2t)).
struct EvalPolicy {
  PolicyKind kind = PolicyKind::dense;
  std::size_t block_size = 256;
  double radius = std::numeric_limits<double>::infinity();

  static EvalPolicy dense() { return {}; }
  static EvalPolicy blocked(std::size_t block);
  static EvalPolicy truncated(double tau0);

  /// "dense" | "blocked:<B>" | "truncated:<tau0>"
  static EvalPolicy parse(const std::string& text);
  std::string to_string() const;
};

/// Gaussian kernel structure of a cloud at scale t with diffusion-maps
/// style alpha normalization:
///
///   theta[i]       = sum_j w_j exp(-|x_i - x_j|^2 / (2t))
///   theta_alpha[i] = sum_j w_j theta[j]^{-alpha} exp(-|x_i - x_j|^2 / (2t))
///
/// and the derived operators
///
///   L f(i)        = (2/t) (1/theta_alpha[i]) sum_j ew_j (f_j - f_i) K_ij
///   Gamma(f,h)(i) = (1/t) (1/theta_alpha[i]) sum_j ew_j (f_j - f_i)(h_j - h_i) K_ij
///   Gamma2(f,h)   = (L Gamma(f,h) - Gamma(Lf, h) - Gamma(f, Lh)) / 2
///
/// with ew_j = w_j theta[j]^{-alpha}. alpha = 0 reduces bit-exactly to
/// the unweighted operator (theta^0 == 1). Zero-weight probe points
/// never contribute to any sum but are valid evaluation sites.
///
/// Immutable after construction; operator calls are pure and may run
/// concurrently on a shared cache.
class KernelCache {
 public:
  KernelCache(std::shared_ptr<const PointCloud> cloud, double t,
              double alpha = 0.0, EvalPolicy policy = {});
  KernelCache(PointCloud cloud, double t, double alpha = 0.0,
              EvalPolicy policy = {});

  const PointCloud& cloud() const { return *cloud_; }
  std::shared_ptr<const PointCloud> cloud_ptr() const { return cloud_; }
  double t() const { return t_; }
  double alpha() const { return alpha_; }
  const EvalPolicy& policy() const { return policy_; }

  const ScalarField& theta() const { return *theta_base_; }
  const ScalarField& theta_alpha() const { return *theta_alpha_; }
  const std::vector<double>& effective_weights() const { return eff_weights_; }
  /// Sum of effective weights (equals total cloud mass when alpha = 0).
  double effective_mass() const { return eff_mass_; }

  /// Certified per-evaluation truncation error for a unit-sup integrand;
  /// zero for exact policies.
  double truncation_bound() const;

  ScalarField apply_L(const ScalarField& f) const;
  ScalarField gamma(const ScalarField& f, const ScalarField& h) const;
  /// Same bilinear form computed literally as (L(fh) - (Lf)h - f(Lh))/2;
  /// agrees with gamma() up to floating-point cancellation.
  ScalarField gamma_via_identity(const ScalarField& f, const ScalarField& h) const;
  ScalarField gamma2(const ScalarField& f, const ScalarField& h) const;

  /// Single-site Gamma2(f,f)(i); bit-identical to gamma2(f, f)[i] but
  /// skips the three full output fields.
  double gamma2_at(const ScalarField& f, std::size_t i) const;

  double apply_L_at(const ScalarField& f, std::size_t i) const;
  double gamma_at(const ScalarField& f, const ScalarField& h, std::size_t i) const;

 private:
  void build();
  void check_field(const ScalarField& f) const;
  double theta_row(std::size_t i, const double* weights) const;
  double l_row(std::size_t i, const std::vector<double>& f) const;
  double gamma_row(std::size_t i, const std::vector<double>& f,
                   const std::vector<double>& h) const;

  std::shared_ptr<const PointCloud> cloud_;
  double t_;
  double alpha_;
  EvalPolicy policy_;
  std::vector<double> eff_weights_;
  double eff_mass_ = 0.0;
  std::shared_ptr<ScalarField> theta_base_;
  std::shared_ptr<ScalarField> theta_alpha_;
};

}  // namespace cricci
