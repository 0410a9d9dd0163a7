#pragma once

// Independent reference implementations used only by tests: direct
// O(N^2) summation for every transform, closed-form basis identities,
// and Fornberg finite-difference weights. Nothing here calls into the
// library's transform path.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace oracles {

using cplx = std::complex<double>;

inline std::vector<cplx> naive_dft(const std::vector<cplx>& y, bool inverse) {
  const std::size_t m = y.size();
  std::vector<cplx> out(m);
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t k = 0; k < m; ++k) {
    cplx acc{0.0, 0.0};
    for (std::size_t n = 0; n < m; ++n) {
      const double angle = sign * 2.0 * std::numbers::pi * double(n) * double(k) / double(m);
      acc += y[n] * cplx{std::cos(angle), std::sin(angle)};
    }
    out[k] = inverse ? acc / double(m) : acc;
  }
  return out;
}

inline std::vector<double> naive_dct1_forward(const std::vector<double>& y) {
  const std::size_t n = y.size() - 1;
  std::vector<double> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    double acc = y[0] + (k % 2 == 0 ? 1.0 : -1.0) * y[n];
    for (std::size_t i = 1; i < n; ++i)
      acc += 2.0 * y[i] * std::cos(std::numbers::pi * double(i) * double(k) / double(n));
    out[k] = acc;
  }
  return out;
}

inline std::vector<double> naive_dct1_inverse(const std::vector<double>& spectrum) {
  auto out = naive_dct1_forward(spectrum);
  const double m = 2.0 * double(spectrum.size() - 1);
  for (auto& v : out) v /= m;
  return out;
}

inline std::vector<double> naive_dst1(const std::vector<double>& interior) {
  const std::size_t n = interior.size() + 1;
  std::vector<double> out(n + 1, 0.0);
  for (std::size_t i = 0; i <= n; ++i) {
    double acc = 0.0;
    for (std::size_t k = 1; k < n; ++k)
      acc += 2.0 * interior[k - 1] *
             std::sin(std::numbers::pi * double(i) * double(k) / double(n));
    out[i] = acc;
  }
  return out;
}

inline double cheb_t(unsigned k, double x) {
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (unsigned i = 2; i <= k; ++i) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

inline double cheb_series_value(const std::vector<double>& a, double x) {
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * cheb_t(unsigned(k), x);
  return acc;
}

// x^p as a Chebyshev series: 2^{1-p} sum_j C(p, j) T_{p-2j}, the T_0 term
// halved.
inline std::vector<double> monomial_to_cheb(unsigned p) {
  std::vector<double> a(p + 1, 0.0);
  double binom = 1.0;  // C(p, 0)
  const double scale = p == 0 ? 1.0 : std::pow(2.0, 1.0 - double(p));
  for (unsigned j = 0; 2 * j <= p; ++j) {
    const unsigned mode = p - 2 * j;
    a[mode] += scale * binom * (mode == 0 ? 0.5 : 1.0);
    binom *= double(p - j) / double(j + 1);
  }
  if (p == 0) a[0] = 1.0;
  return a;
}

// Weights of a finite-difference stencil on arbitrary nodes (Fornberg's
// recurrence). Returns w such that f^{(order)}(x0) ~= sum_i w[i] f(nodes[i]).
inline std::vector<double> fd_weights(double x0, const std::vector<double>& nodes,
                                      unsigned order) {
  const std::size_t n = nodes.size();
  std::vector<std::vector<double>> c(n, std::vector<double>(order + 1, 0.0));
  c[0][0] = 1.0;
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t mn = std::min<std::size_t>(i, order);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn + 1; k-- > 0;)
          c[i][k] =
              c1 * ((k > 0 ? double(k) * c[i - 1][k - 1] : 0.0) - c5 * c[i - 1][k]) / c2;
      }
      for (std::size_t k = mn + 1; k-- > 0;)
        c[j][k] = (c4 * c[j][k] - (k > 0 ? double(k) * c[j][k - 1] : 0.0)) / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = c[i][order];
  return w;
}

inline std::vector<double> random_reals(std::size_t n, unsigned seed, double lo = -1.0,
                                        double hi = 1.0) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> out(n);
  for (auto& v : out) v = dist(rng);
  return out;
}

inline std::vector<cplx> random_complexes(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<cplx> out(n);
  for (auto& v : out) v = cplx{dist(rng), dist(rng)};
  return out;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs(const std::vector<double>& a) {
  double m = 0.0;
  for (const double v : a) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace oracles
