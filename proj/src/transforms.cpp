#include "specdiff/transforms.hpp"

#include <stdexcept>

namespace specdiff {
namespace {

template <typename T>
std::vector<T> even_extend_impl(std::span<const T> y) {
  if (y.size() < 2) throw std::invalid_argument("even_extend: need at least 2 samples");
  const std::size_t n = y.size() - 1;
  std::vector<T> ext(2 * n);
  for (std::size_t i = 0; i <= n; ++i) ext[i] = y[i];
  for (std::size_t i = 1; i < n; ++i) ext[2 * n - i] = y[i];
  return ext;
}

}  // namespace

std::vector<double> even_extend(std::span<const double> y) { return even_extend_impl(y); }
std::vector<cplx> even_extend(std::span<const cplx> y) { return even_extend_impl(y); }

std::vector<double> dct1(std::span<const double> y, Direction direction) {
  const auto ext = even_extend(y);
  const auto spectrum = dft(std::span<const double>(ext), direction);
  std::vector<double> out(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) out[k] = spectrum[k].real();
  return out;
}

std::vector<double> dst1_eval(std::span<const double> interior_modes) {
  if (interior_modes.empty())
    throw std::invalid_argument("dst1_eval: no interior modes (need N >= 2)");
  const std::size_t n = interior_modes.size() + 1;
  const std::size_t m = 2 * n;
  // Odd spectrum: V_k = -j W_k, V_{M-k} = +j W_k, so the inverse DFT is
  // (1/M) * 2 sum W_k sin(k theta_n); rescale by M afterwards.
  std::vector<cplx> v(m, cplx{0.0, 0.0});
  for (std::size_t k = 1; k < n; ++k) {
    v[k] = cplx{0.0, -interior_modes[k - 1]};
    v[m - k] = cplx{0.0, interior_modes[k - 1]};
  }
  const auto samples = dft(std::span<const cplx>(v), Direction::Inverse);
  std::vector<double> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i] = samples[i].real() * double(m);
  out[0] = 0.0;
  out[n] = 0.0;
  return out;
}

}  // namespace specdiff
