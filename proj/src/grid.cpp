#include "specdiff/grid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "specdiff/errors.hpp"

namespace specdiff {
namespace {

constexpr double kSamplingTolerance = 1e-9;  // relative to interval length

// cos(pi n / N) with the n <-> N-n mirror applied first, so the grid is
// exactly antisymmetric about the interval midpoint.
double cosine_node(std::size_t n, std::size_t order) {
  if (2 * n == order) return 0.0;
  if (2 * n < order) return std::cos(std::numbers::pi * double(n) / double(order));
  return -std::cos(std::numbers::pi * double(order - n) / double(order));
}

std::string preview(const std::vector<double>& pts) {
  std::ostringstream os;
  os.precision(12);
  os << "[";
  const std::size_t shown = pts.size() > 8 ? 8 : pts.size();
  for (std::size_t i = 0; i < shown; ++i) {
    if (i) os << ", ";
    os << pts[i];
  }
  if (shown < pts.size()) os << ", ...";
  os << "]";
  return os.str();
}

[[noreturn]] void fail_sampling(const char* what, GridKind kind, std::size_t count,
                                double a, double b) {
  std::ostringstream os;
  os << "invalid sampling: " << what << "; ";
  if (kind == GridKind::PeriodicEquispaced) {
    os << "a periodic grid of " << count << " samples on [" << a << ", " << b
       << ") looks like t_n = a + n*(b-a)/M, e.g. " << preview(fourier_points(count, a, b));
  } else {
    os << "a Chebyshev grid of " << count << " samples on [" << a << ", " << b
       << "] looks like t_n = cos(pi*n/N)*(b-a)/2 + (b+a)/2 (descending), e.g. "
       << preview(chebyshev_points(count - 1, a, b));
  }
  throw invalid_sampling(os.str());
}

}  // namespace

std::vector<double> GridSpec::points() const {
  if (kind == GridKind::PeriodicEquispaced) return fourier_points(count, a, b);
  return chebyshev_points(count - 1, a, b);
}

std::vector<double> fourier_points(std::size_t m, double a, double b) {
  if (m < 2) throw std::invalid_argument("fourier_points: need at least 2 samples");
  if (!(b > a)) throw std::invalid_argument("fourier_points: require b > a");
  std::vector<double> t(m);
  const double h = (b - a) / double(m);
  for (std::size_t n = 0; n < m; ++n) t[n] = a + double(n) * h;
  return t;
}

std::vector<double> chebyshev_points(std::size_t n, double a, double b) {
  if (n < 1) throw std::invalid_argument("chebyshev_points: need order N >= 1");
  if (!(b > a)) throw std::invalid_argument("chebyshev_points: require b > a");
  std::vector<double> t(n + 1);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  for (std::size_t i = 0; i <= n; ++i) t[i] = cosine_node(i, n) * half + mid;
  t[0] = b;
  t[n] = a;
  return t;
}

GridSpec infer_grid(std::span<const double> t, GridKind kind) {
  if (t.size() < 2) throw std::invalid_argument("infer_grid: need at least 2 samples");

  if (kind == GridKind::PeriodicEquispaced) {
    const std::size_t m = t.size();
    const double a = t[0];
    const double h = t[1] - t[0];
    const double b = a + double(m) * h;
    if (!(h > 0.0))
      fail_sampling("periodic samples must ascend", kind, m,
                    t.front(), t.front() + double(m) * std::abs(h) + 1.0);
    const double tol = kSamplingTolerance * (b - a);
    for (std::size_t n = 0; n < m; ++n) {
      if (std::abs(t[n] - (a + double(n) * h)) > tol)
        fail_sampling("locations are not equispaced on [a, b)", kind, m, a, b);
    }
    return {kind, a, b, m};
  }

  const std::size_t order = t.size() - 1;
  const double b = t.front();
  const double a = t.back();
  if (!(b > a))
    fail_sampling("cosine grid must descend from b to a", kind, t.size(),
                  std::min(a, b), std::max(a, b) + (a == b ? 1.0 : 0.0));
  const double tol = kSamplingTolerance * (b - a);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  for (std::size_t n = 0; n <= order; ++n) {
    if (std::abs(t[n] - (cosine_node(n, order) * half + mid)) > tol)
      fail_sampling("locations are not cosine-spaced", kind, t.size(), a, b);
  }
  return {kind, a, b, t.size()};
}

double scale_correction(const GridSpec& grid, unsigned order) {
  if (order < 1) throw std::invalid_argument("scale_correction: order must be >= 1");
  const double scale = grid.kind == GridKind::PeriodicEquispaced
                           ? (grid.b - grid.a) / (2.0 * std::numbers::pi)
                           : (grid.b - grid.a) / 2.0;
  double out = 1.0;
  for (unsigned i = 0; i < order; ++i) out *= scale;
  return out;
}

}  // namespace specdiff
