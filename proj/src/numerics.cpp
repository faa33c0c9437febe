#include "cricci/numerics.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "cricci/errors.hpp"

namespace cricci {

namespace {
std::atomic<unsigned> g_max_threads{0};

unsigned hardware_threads() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1u : hc;
}
}  // namespace

void set_max_threads(unsigned n) { g_max_threads.store(n); }

unsigned max_threads() {
  const unsigned cap = g_max_threads.load();
  return cap == 0 ? hardware_threads() : cap;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  if (n == 0) return;
  const std::size_t workers =
      std::min<std::size_t>(std::max<unsigned>(1u, max_threads()), n);
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }

  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = n * w / workers;
    const std::size_t hi = n * (w + 1) / workers;
    pool.emplace_back([&, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool parse_double(std::string_view text, double& out) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

double normal01(std::mt19937_64& rng) {
  // Box-Muller; u1 shifted away from zero so the log is finite.
  const double u1 = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  const double u2 = canonical_u01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw invalid_argument_error("fit_line: size mismatch");
  if (x.size() < 2) throw insufficient_data_error("fit_line: need >= 2 points");
  const std::size_t n = x.size();
  KahanAccum sx, sy;
  for (std::size_t i = 0; i < n; ++i) {
    sx.add(x[i]);
    sy.add(y[i]);
  }
  const double mx = sx.total() / static_cast<double>(n);
  const double my = sy.total() / static_cast<double>(n);
  KahanAccum sxx, sxy;
  for (std::size_t i = 0; i < n; ++i) {
    sxx.add(sq(x[i] - mx));
    sxy.add((x[i] - mx) * (y[i] - my));
  }
  if (sxx.total() == 0.0)
    throw invalid_argument_error("fit_line: degenerate abscissae");
  LineFit fit;
  fit.slope = sxy.total() / sxx.total();
  fit.intercept = my - fit.slope * mx;
  fit.count = n;
  KahanAccum res;
  for (std::size_t i = 0; i < n; ++i)
    res.add(sq(y[i] - (fit.intercept + fit.slope * x[i])));
  fit.rms_residual = std::sqrt(res.total() / static_cast<double>(n));
  return fit;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double d2 = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d2 += sq(a[k] - b[k]);
  return d2;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

}  // namespace cricci
