#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace cricci {

/// Kahan compensated accumulator.
struct KahanAccum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  double total() const { return sum; }
};

/// Compensated accumulator for M parallel sums with an optional fixed
/// block schedule: terms are Kahan-summed within blocks of `block_size`
/// and block totals are Kahan-summed in order. The reduction order is a
/// pure function of the input order, so results never depend on thread
/// count. `block_size` of SIZE_MAX degenerates to a single Kahan pass.
template <std::size_t M>
class BlockedAccum {
 public:
  explicit BlockedAccum(std::size_t block_size) : block_(block_size) {}

  void add(const std::array<double, M>& v) {
    for (std::size_t m = 0; m < M; ++m) inner_[m].add(v[m]);
    if (++count_ == block_) flush();
  }

  std::array<double, M> total() const {
    std::array<double, M> out{};
    for (std::size_t m = 0; m < M; ++m) {
      KahanAccum t = outer_[m];
      t.add(inner_[m].total());
      out[m] = t.total();
    }
    return out;
  }

 private:
  void flush() {
    for (std::size_t m = 0; m < M; ++m) {
      outer_[m].add(inner_[m].total());
      inner_[m] = KahanAccum{};
    }
    count_ = 0;
  }

  std::array<KahanAccum, M> inner_{};
  std::array<KahanAccum, M> outer_{};
  std::size_t block_;
  std::size_t count_ = 0;
};

/// Caps the worker count used by row-parallel loops. 0 restores the
/// hardware default. Worker count never changes numeric results.
void set_max_threads(unsigned n);
unsigned max_threads();

/// Runs body(i) for i in [0, n), statically chunked over worker
/// threads. Each index is processed exactly once by one worker, so the
/// outcome is independent of the partitioning. Exceptions from body are
/// rethrown on the calling thread (first one wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Shortest round-trippable decimal form at 17 significant digits.
std::string fmt_g17(double v);

/// Locale-independent double parse; returns false on trailing garbage.
bool parse_double(std::string_view text, double& out);

// Deterministic sampling helpers. The standard distributions are
// implementation-defined, so clouds and tests draw through these
// explicit transforms instead.
inline double canonical_u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * canonical_u01(rng);
}

/// Standard normal via Box-Muller (no state beyond the generator).
double normal01(std::mt19937_64& rng);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
  std::size_t count = 0;
};

/// Ordinary least squares y ~ intercept + slope * x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

inline double sq(double v) { return v * v; }

double squared_distance(std::span<const double> a, std::span<const double> b);
double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);

}  // namespace cricci
