#include "specdiff/chebyshev.hpp"

#include <stdexcept>

#include "specdiff/transforms.hpp"

namespace specdiff {
namespace {

void check_grid(std::size_t signal_length, const GridSpec& grid) {
  if (grid.kind != GridKind::ChebyshevCosine)
    throw std::invalid_argument("cheb_derivative: grid must be Chebyshev-cosine");
  if (grid.count != signal_length)
    throw std::invalid_argument("cheb_derivative: signal length does not match the grid");
  if (signal_length < 2)
    throw std::invalid_argument("cheb_derivative: need at least 2 samples");
}

std::vector<double> derivative_coefficients(std::span<const double> y, unsigned order,
                                            const std::optional<FilterMask>& mask) {
  auto a = cheb_coefficients(y);
  if (mask) {
    if (mask->gains.size() != a.size())
      throw std::invalid_argument("cheb_derivative: mask length must be N+1");
    for (std::size_t k = 0; k < a.size(); ++k) a[k] *= mask->gains[k];
  }
  for (unsigned i = 0; i < order; ++i) a = cheb_series_derivative(a);
  return a;
}

}  // namespace

std::vector<double> cheb_coefficients(std::span<const double> y) {
  if (y.size() < 2) throw std::invalid_argument("cheb_coefficients: need at least 2 samples");
  const std::size_t n = y.size() - 1;
  const double m = 2.0 * double(n);
  auto a = dct1(y, Direction::Forward);
  a[0] /= m;
  for (std::size_t k = 1; k < n; ++k) a[k] *= 2.0 / m;
  a[n] /= m;
  return a;
}

std::vector<double> cheb_series_derivative(std::span<const double> a) {
  if (a.empty()) return {};
  const std::size_t len = a.size();
  std::vector<double> b(len, 0.0);
  for (std::size_t k = len - 1; k >= 1; --k)
    b[k - 1] = (k + 1 < len ? b[k + 1] : 0.0) + 2.0 * double(k) * a[k];
  b[0] *= 0.5;
  return b;
}

std::vector<double> cheb_eval_cosine_grid(std::span<const double> a, std::size_t grid_order) {
  if (a.empty()) throw std::invalid_argument("cheb_eval_cosine_grid: empty series");
  if (a.size() > grid_order + 1)
    throw std::invalid_argument("cheb_eval_cosine_grid: series longer than the grid can hold");
  const double m = 2.0 * double(grid_order);
  std::vector<double> spectrum(grid_order + 1, 0.0);
  spectrum[0] = a[0] * m;
  for (std::size_t k = 1; k < a.size(); ++k)
    spectrum[k] = k == grid_order ? a[k] * m : a[k] * m / 2.0;
  return dct1(spectrum, Direction::Inverse);
}

std::vector<double> cheb_derivative(std::span<const double> y, const GridSpec& grid,
                                    unsigned order, const std::optional<FilterMask>& mask) {
  check_grid(y.size(), grid);
  const auto a = derivative_coefficients(y, order, mask);
  auto out = cheb_eval_cosine_grid(a, y.size() - 1);
  if (order >= 1) {
    const double scale = scale_correction(grid, order);
    for (auto& v : out) v /= scale;
  }
  return out;
}

std::vector<cplx> cheb_derivative(std::span<const cplx> y, const GridSpec& grid,
                                  unsigned order, const std::optional<FilterMask>& mask) {
  check_grid(y.size(), grid);
  std::vector<double> re(y.size()), im(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    re[i] = y[i].real();
    im[i] = y[i].imag();
  }
  const auto dre = cheb_derivative(std::span<const double>(re), grid, order, mask);
  const auto dim = cheb_derivative(std::span<const double>(im), grid, order, mask);
  std::vector<cplx> out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = cplx{dre[i], dim[i]};
  return out;
}

}  // namespace specdiff
