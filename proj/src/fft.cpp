#include "specdiff/fft.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace specdiff {
namespace {

// Largest prime handled by the mixed-radix path; anything bigger goes
// through Bluestein so the whole transform stays O(M log M).
constexpr std::size_t kMaxMixedRadixPrime = 61;

// exp(-j 2pi k / n), computed after folding k/n into [-1/8, 1/8] so that
// mirror entries of the root table are exactly symmetric.
cplx cis_neg(std::size_t k, std::size_t n) {
  const double f = double(k) / double(n);
  const double m = std::round(4.0 * f);
  const double g = 2.0 * std::numbers::pi * (f - 0.25 * m);
  const double c = std::cos(g);
  const double s = std::sin(g);
  switch (static_cast<int>(m) & 3) {
    case 0: return {c, -s};
    case 1: return {-s, -c};
    case 2: return {-c, s};
    default: return {s, c};
  }
}

std::vector<cplx> root_table(std::size_t n) {
  std::vector<cplx> w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = cis_neg(k, n);
  return w;
}

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> f;
  for (std::size_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    while (n % p == 0) {
      f.push_back(p);
      n /= p;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

// Recursive decimation-in-time over the leading factor. Sub-transforms land
// contiguously in `out`; the combine is q column DFTs of length p, with
// roots read from the shared top-level table (W_n^j == table[j * stride]).
void fft_mixed(const cplx* in, std::size_t stride, cplx* out, std::size_t n,
               std::span<const std::size_t> factors, std::span<const cplx> table) {
  if (n == 1) {
    out[0] = in[0];
    return;
  }
  const std::size_t p = factors.front();
  const std::size_t q = n / p;
  for (std::size_t r = 0; r < p; ++r)
    fft_mixed(in + r * stride, stride * p, out + r * q, q, factors.subspan(1), table);

  std::vector<cplx> z(p);
  for (std::size_t t = 0; t < q; ++t) {
    for (std::size_t r = 0; r < p; ++r)
      z[r] = table[(r * t) % n * stride] * out[r * q + t];
    for (std::size_t s = 0; s < p; ++s) {
      cplx acc{0.0, 0.0};
      for (std::size_t r = 0; r < p; ++r)
        acc += z[r] * table[(r * s * q) % n * stride];
      out[s * q + t] = acc;
    }
  }
}

std::vector<cplx> fft_smooth(std::span<const cplx> x, std::span<const std::size_t> factors) {
  const auto table = root_table(x.size());
  std::vector<cplx> out(x.size());
  fft_mixed(x.data(), 1, out.data(), x.size(), factors, table);
  return out;
}

std::vector<cplx> fft_pow2(std::span<const cplx> x) {
  const std::vector<std::size_t> twos(static_cast<std::size_t>(std::countr_zero(x.size())), 2);
  return fft_smooth(x, twos);
}

std::vector<cplx> inverse_of_forward(std::span<const cplx> spectrum,
                                     std::vector<cplx> (*forward)(std::span<const cplx>)) {
  std::vector<cplx> tmp(spectrum.begin(), spectrum.end());
  for (auto& v : tmp) v = std::conj(v);
  auto out = forward(tmp);
  const double inv = 1.0 / double(spectrum.size());
  for (auto& v : out) v = std::conj(v) * inv;
  return out;
}

// Chirp-z: nk = (n^2 + k^2 - (k - n)^2) / 2 turns the DFT into a linear
// convolution, evaluated by zero-padded power-of-two FFTs. The quadratic
// phase j^2 is reduced mod 2n, where the chirp is periodic.
std::vector<cplx> fft_bluestein(std::span<const cplx> x) {
  const std::size_t n = x.size();
  const std::size_t padded = std::bit_ceil(2 * n - 1);

  std::vector<cplx> chirp(n);
  for (std::size_t j = 0; j < n; ++j) chirp[j] = cis_neg((j * j) % (2 * n), 2 * n);

  std::vector<cplx> a(padded, cplx{0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) a[j] = x[j] * chirp[j];

  std::vector<cplx> b(padded, cplx{0.0, 0.0});
  b[0] = std::conj(chirp[0]);
  for (std::size_t j = 1; j < n; ++j) b[j] = b[padded - j] = std::conj(chirp[j]);

  auto fa = fft_pow2(a);
  const auto fb = fft_pow2(b);
  for (std::size_t j = 0; j < padded; ++j) fa[j] *= fb[j];
  const auto conv = inverse_of_forward(fa, &fft_pow2);

  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = conv[k] * chirp[k];
  return out;
}

std::vector<cplx> fft_forward(std::span<const cplx> x) {
  const std::size_t n = x.size();
  if (n == 1) return {x[0]};
  const auto factors = prime_factors(n);
  if (factors.back() <= kMaxMixedRadixPrime) return fft_smooth(x, factors);
  return fft_bluestein(x);
}

}  // namespace

std::vector<cplx> dft(std::span<const cplx> y, Direction direction) {
  if (y.empty()) throw std::invalid_argument("dft: input must not be empty");
  if (direction == Direction::Forward) return fft_forward(y);
  return inverse_of_forward(y, &fft_forward);
}

std::vector<cplx> dft(std::span<const double> y, Direction direction) {
  std::vector<cplx> z(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) z[i] = cplx{y[i], 0.0};
  return dft(z, direction);
}

}  // namespace specdiff
