#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace specdiff {

enum class GridKind { PeriodicEquispaced, ChebyshevCosine };

/// A validated sample grid on [a, b). Periodic grids exclude b; Chebyshev
/// cosine grids include both endpoints and run from b down to a.
struct GridSpec {
  GridKind kind;
  double a;
  double b;
  std::size_t count;  // M samples (periodic) or N+1 samples (Chebyshev)

  std::vector<double> points() const;
};

/// t_n = a + n (b - a) / M for n = 0..M-1; the endpoint b is excluded.
std::vector<double> fourier_points(std::size_t m, double a, double b);

/// t_n = cos(pi n / N) (b - a)/2 + (b + a)/2 for n = 0..N, strictly
/// decreasing: t_0 = b, t_N = a. Returns N+1 points.
std::vector<double> chebyshev_points(std::size_t n, double a, double b);

/// Recovers {a, b, count} from sample locations, validating them against
/// the implied grid to 1e-9 relative to the interval length. Throws
/// invalid_sampling with a correctly sampled example grid on mismatch.
GridSpec infer_grid(std::span<const double> t, GridKind kind);

/// scale^order, scale = (b-a)/2pi (periodic) or (b-a)/2 (Chebyshev).
/// Canonical-domain derivatives are divided by this to recover d/dt.
double scale_correction(const GridSpec& grid, unsigned order);

}  // namespace specdiff
