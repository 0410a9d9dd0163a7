#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <specdiff/fft.hpp>

#include "oracles.hpp"

using specdiff::Direction;
using specdiff::cplx;
using specdiff::dft;

namespace {

std::vector<std::size_t> lengths_under_test() {
  std::vector<std::size_t> m;
  for (std::size_t i = 1; i <= 64; ++i) m.push_back(i);
  for (std::size_t i : {97, 101, 128, 347, 360, 997, 1000, 1024}) m.push_back(i);
  return m;
}

}  // namespace

TEST_CASE("dft examples") {
  const std::vector<cplx> constant{1, 1, 1, 1};
  auto y = dft(std::span<const cplx>(constant), Direction::Forward);
  CHECK(std::abs(y[0] - cplx{4, 0}) < 1e-14);
  for (int k : {1, 2, 3}) CHECK(std::abs(y[k]) < 1e-14);

  const std::vector<cplx> impulse{1, 0, 0, 0};
  y = dft(std::span<const cplx>(impulse), Direction::Forward);
  for (int k : {0, 1, 2, 3}) CHECK(std::abs(y[k] - cplx{1, 0}) < 1e-14);

  const std::vector<double> ridge{1, 2, 3, 2};
  y = dft(std::span<const double>(ridge), Direction::Forward);
  CHECK(std::abs(y[0] - cplx{8, 0}) < 1e-13);
  CHECK(std::abs(y[1] - cplx{-2, 0}) < 1e-13);
  CHECK(std::abs(y[2]) < 1e-13);
  CHECK(std::abs(y[3] - cplx{-2, 0}) < 1e-13);
}

TEST_CASE("dft rejects empty input") {
  const std::vector<cplx> empty;
  CHECK_THROWS_AS(dft(std::span<const cplx>(empty), Direction::Forward),
                  std::invalid_argument);
}

TEST_CASE("dft matches the direct-summation oracle at every length") {
  for (const std::size_t m : lengths_under_test()) {
    const auto y = oracles::random_complexes(m, 1000 + unsigned(m));
    const auto fast = dft(std::span<const cplx>(y), Direction::Forward);
    const auto slow = oracles::naive_dft(y, false);
    CHECK_MESSAGE(oracles::max_abs_diff(fast, slow) < 1e-10, "forward, M=", m);

    const auto fast_inv = dft(std::span<const cplx>(y), Direction::Inverse);
    const auto slow_inv = oracles::naive_dft(y, true);
    CHECK_MESSAGE(oracles::max_abs_diff(fast_inv, slow_inv) < 1e-10, "inverse, M=", m);
  }
}

TEST_CASE("forward/inverse round-trip") {
  for (const std::size_t m : lengths_under_test()) {
    const auto y = oracles::random_complexes(m, 77 + unsigned(m));
    const auto back = dft(std::span<const cplx>(dft(std::span<const cplx>(y), Direction::Forward)),
                          Direction::Inverse);
    CHECK_MESSAGE(oracles::max_abs_diff(back, y) < 1e-11, "M=", m);
  }
}

TEST_CASE("linearity") {
  for (const std::size_t m : {16u, 33u, 97u}) {
    const auto u = oracles::random_complexes(m, 5);
    const auto v = oracles::random_complexes(m, 6);
    const cplx alpha{0.3, -1.1};
    const cplx beta{-0.7, 0.2};
    std::vector<cplx> mix(m);
    for (std::size_t i = 0; i < m; ++i) mix[i] = alpha * u[i] + beta * v[i];

    const auto tu = dft(std::span<const cplx>(u), Direction::Forward);
    const auto tv = dft(std::span<const cplx>(v), Direction::Forward);
    const auto tmix = dft(std::span<const cplx>(mix), Direction::Forward);
    std::vector<cplx> expect(m);
    for (std::size_t i = 0; i < m; ++i) expect[i] = alpha * tu[i] + beta * tv[i];
    CHECK(oracles::max_abs_diff(tmix, expect) < 1e-11);
  }
}

TEST_CASE("Parseval") {
  for (const std::size_t m : {8u, 24u, 100u, 347u}) {
    const auto y = oracles::random_complexes(m, 9 + unsigned(m));
    const auto spectrum = dft(std::span<const cplx>(y), Direction::Forward);
    double time_energy = 0.0, freq_energy = 0.0;
    for (const auto& v : y) time_energy += std::norm(v);
    for (const auto& v : spectrum) freq_energy += std::norm(v);
    CHECK(std::abs(time_energy - freq_energy / double(m)) < 1e-10 * time_energy);
  }
}

TEST_CASE("a large prime length is far from quadratic") {
  // 99991 is prime; the direct sum would need ~1e10 operations. A loose
  // wall-clock bound still separates O(M log M) from O(M^2) by orders of
  // magnitude.
  const std::size_t m = 99991;
  const auto y = oracles::random_complexes(m, 3);
  const auto start = std::chrono::steady_clock::now();
  const auto spectrum = dft(std::span<const cplx>(y), Direction::Forward);
  const auto back = dft(std::span<const cplx>(spectrum), Direction::Inverse);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(seconds < 5.0);
  CHECK(oracles::max_abs_diff(back, y) < 1e-9);
}

TEST_CASE("real input has a conjugate-symmetric spectrum") {
  for (const std::size_t m : {12u, 31u, 64u}) {
    const auto y = oracles::random_reals(m, 21 + unsigned(m));
    const auto spectrum = dft(std::span<const double>(y), Direction::Forward);
    for (std::size_t k = 1; k < m; ++k) {
      const double larger = std::max(std::abs(spectrum[k]), std::abs(spectrum[m - k]));
      CHECK(std::abs(spectrum[k] - std::conj(spectrum[m - k])) <= 1e-12 * std::max(larger, 1.0));
    }
  }
}
