#include "specdiff/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "specdiff/errors.hpp"

namespace specdiff {
namespace {

// j^r without trig: cycles through {1, j, -1, -j}.
cplx imag_unit_power(unsigned r) {
  switch (r % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

double int_pow(double base, unsigned e) {
  double out = 1.0;
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

void check_grid(std::size_t signal_length, const GridSpec& grid) {
  if (grid.kind != GridKind::PeriodicEquispaced)
    throw std::invalid_argument("fourier_derivative: grid must be periodic-equispaced");
  if (grid.count != signal_length)
    throw std::invalid_argument("fourier_derivative: signal length does not match the grid");
  if (signal_length < 2)
    throw std::invalid_argument("fourier_derivative: need at least 2 samples");
}

std::vector<cplx> derivative_spectrum_pipeline(std::span<const cplx> y, unsigned order,
                                               const std::optional<FilterMask>& mask) {
  auto spectrum = dft(y, Direction::Forward);
  if (mask) spectrum = apply_mask(std::move(spectrum), *mask);
  if (order >= 1) {
    const auto mult = wavenumber_multipliers(y.size(), order);
    for (std::size_t k = 0; k < spectrum.size(); ++k) spectrum[k] *= mult[k];
  }
  return dft(spectrum, Direction::Inverse);
}

}  // namespace

std::vector<cplx> wavenumber_multipliers(std::size_t m, unsigned order) {
  if (m < 2) throw std::invalid_argument("wavenumber_multipliers: need M >= 2");
  if (order < 1) throw std::invalid_argument("wavenumber_multipliers: order must be >= 1");
  std::vector<cplx> mult(m);
  const cplx jpow = imag_unit_power(order);
  for (std::size_t k = 0; k < m; ++k) {
    if (2 * k < m) {
      mult[k] = jpow * int_pow(double(k), order);
    } else if (2 * k == m) {
      mult[k] = order % 2 == 0 ? jpow * int_pow(double(k), order) : cplx{0.0, 0.0};
    } else {
      mult[k] = jpow * int_pow(double(k) - double(m), order);
    }
  }
  return mult;
}

std::vector<cplx> fourier_derivative(std::span<const cplx> y, const GridSpec& grid,
                                     unsigned order, const std::optional<FilterMask>& mask) {
  check_grid(y.size(), grid);
  auto deriv = derivative_spectrum_pipeline(y, order, mask);
  if (order >= 1) {
    const double scale = scale_correction(grid, order);
    for (auto& v : deriv) v /= scale;
  }
  return deriv;
}

std::vector<double> fourier_derivative(std::span<const double> y, const GridSpec& grid,
                                       unsigned order, const std::optional<FilterMask>& mask) {
  check_grid(y.size(), grid);
  std::vector<cplx> z(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) z[i] = cplx{y[i], 0.0};
  const auto deriv = derivative_spectrum_pipeline(z, order, mask);

  double max_real = 0.0;
  double max_imag = 0.0;
  double max_input = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    max_real = std::max(max_real, std::abs(deriv[i].real()));
    max_imag = std::max(max_imag, std::abs(deriv[i].imag()));
    max_input = std::max(max_input, std::abs(y[i]));
  }
  // Residue attributable to roundoff: eps-level noise through the transform
  // pair, amplified by at most (M/2)^order.
  const double m = double(y.size());
  const double noise_floor = 1e3 * std::numeric_limits<double>::epsilon() * m *
                             int_pow(0.5 * m, order) * max_input;
  if (max_imag > 1e-8 * max_real && max_imag > noise_floor) {
    std::ostringstream os;
    os << "fourier_derivative: imaginary residue " << max_imag
       << " is not negligible against " << max_real;
    throw numeric_contamination(os.str());
  }

  const double scale = order >= 1 ? scale_correction(grid, order) : 1.0;
  std::vector<double> out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = deriv[i].real() / scale;
  return out;
}

}  // namespace specdiff
