#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <specdiff/errors.hpp>
#include <specdiff/grid.hpp>

#include "oracles.hpp"

using namespace specdiff;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("fourier_points") {
  auto t = fourier_points(4, 0.0, 2.0 * pi);
  REQUIRE(t.size() == 4);
  CHECK(t[0] == 0.0);
  CHECK(t[1] == doctest::Approx(pi / 2).epsilon(1e-15));
  CHECK(t[2] == doctest::Approx(pi).epsilon(1e-15));
  CHECK(t[3] == doctest::Approx(3 * pi / 2).epsilon(1e-15));

  t = fourier_points(4, 4.0, 8.0);
  CHECK(t == std::vector<double>{4.0, 5.0, 6.0, 7.0});

  t = fourier_points(2, -1.0, 1.0);
  CHECK(t == std::vector<double>{-1.0, 0.0});

  CHECK_THROWS_AS(fourier_points(1, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(fourier_points(4, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(fourier_points(4, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("chebyshev_points") {
  auto t = chebyshev_points(2, -1.0, 1.0);
  REQUIRE(t.size() == 3);
  CHECK(t[0] == 1.0);
  CHECK(t[1] == 0.0);
  CHECK(t[2] == -1.0);

  t = chebyshev_points(2, 1.0, 4.0);
  CHECK(t == std::vector<double>{4.0, 2.5, 1.0});

  t = chebyshev_points(1, -1.0, 1.0);
  CHECK(t == std::vector<double>{1.0, -1.0});

  CHECK_THROWS_AS(chebyshev_points(0, -1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(chebyshev_points(4, 1.0, -1.0), std::invalid_argument);

  for (std::size_t n = 2; n <= 40; ++n) {
    t = chebyshev_points(n, -3.0, 7.5);
    for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i] < t[i - 1]);
  }
}

TEST_CASE("infer_grid recovers periodic grids") {
  const std::vector<double> canonical{0.0, pi / 2, pi, 3 * pi / 2};
  const auto spec = infer_grid(canonical, GridKind::PeriodicEquispaced);
  CHECK(spec.kind == GridKind::PeriodicEquispaced);
  CHECK(spec.a == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(spec.b == doctest::Approx(2 * pi).epsilon(1e-12));
  CHECK(spec.count == 4);
}

TEST_CASE("infer_grid recovers chebyshev grids") {
  const std::vector<double> canonical{1.0, 0.0, -1.0};
  const auto spec = infer_grid(canonical, GridKind::ChebyshevCosine);
  CHECK(spec.kind == GridKind::ChebyshevCosine);
  CHECK(spec.a == -1.0);
  CHECK(spec.b == 1.0);
  CHECK(spec.count == 3);
}

TEST_CASE("infer_grid round-trips generated grids") {
  for (const unsigned seed : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 8u}) {
    const auto r = oracles::random_reals(3, seed, -10.0, 10.0);
    const double a = std::min(r[0], r[1]);
    const double b = std::max(r[0], r[1]) + 0.5;
    const std::size_t count = 2 + unsigned(std::abs(r[2]) * 10.0);

    const auto ft = fourier_points(count, a, b);
    const auto fspec = infer_grid(ft, GridKind::PeriodicEquispaced);
    CHECK(std::abs(fspec.a - a) <= 1e-9 * (b - a));
    CHECK(std::abs(fspec.b - b) <= 1e-9 * (b - a));
    CHECK(fspec.count == count);

    const auto ct = chebyshev_points(count - 1, a, b);
    const auto cspec = infer_grid(ct, GridKind::ChebyshevCosine);
    CHECK(std::abs(cspec.a - a) <= 1e-9 * (b - a));
    CHECK(std::abs(cspec.b - b) <= 1e-9 * (b - a));
    CHECK(cspec.count == count);
  }
}

TEST_CASE("infer_grid rejects bad samplings") {
  // ascending order: a cosine grid must descend
  const std::vector<double> ascending{-1.0, 0.0, 1.0};
  CHECK_THROWS_AS(infer_grid(ascending, GridKind::ChebyshevCosine), invalid_sampling);

  // DCT-II style half-index points must not pass for the cosine grid
  std::vector<double> half_index(9);
  for (std::size_t n = 0; n < 9; ++n)
    half_index[n] = std::cos(pi * (double(n) + 0.5) / 9.0);
  CHECK_THROWS_AS(infer_grid(half_index, GridKind::ChebyshevCosine), invalid_sampling);

  // a single perturbed sample breaks equispacing
  auto t = fourier_points(16, 0.0, 2 * pi);
  t[7] += 1e-6;
  CHECK_THROWS_AS(infer_grid(t, GridKind::PeriodicEquispaced), invalid_sampling);

  // cosine-sampled data offered as a periodic grid
  const auto ct = chebyshev_points(8, 0.0, 1.0);
  CHECK_THROWS_AS(infer_grid(ct, GridKind::PeriodicEquispaced), invalid_sampling);

  const std::vector<double> lonely{1.0};
  CHECK_THROWS_AS(infer_grid(lonely, GridKind::PeriodicEquispaced), std::invalid_argument);
}

TEST_CASE("validation tolerance separates roundoff from real mismatch") {
  std::mt19937 rng(2025);
  std::uniform_int_distribution<std::size_t> pick_count(3, 40);
  std::uniform_real_distribution<double> pick_a(-5.0, 5.0);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t count = pick_count(rng);
    const double a = pick_a(rng);
    const double b = a + 0.5 + std::abs(pick_a(rng));
    const bool cheb = trial % 2 == 0;
    const GridKind kind = cheb ? GridKind::ChebyshevCosine : GridKind::PeriodicEquispaced;
    auto t = cheb ? chebyshev_points(count - 1, a, b) : fourier_points(count, a, b);
    std::uniform_int_distribution<std::size_t> pick_index(1, count - 2);
    const std::size_t hit = pick_index(rng);

    // noise well under the tolerance must pass
    auto nudged = t;
    nudged[hit] += 1e-11 * (b - a);
    CHECK_NOTHROW(infer_grid(nudged, kind));

    // and a bump well over it must be rejected
    auto bumped = t;
    bumped[hit] += 1e-7 * (b - a);
    CHECK_THROWS_AS(infer_grid(bumped, kind), invalid_sampling);
  }
}

TEST_CASE("invalid-sampling message shows a valid example grid") {
  const std::vector<double> ascending{-1.0, 0.0, 1.0};
  try {
    infer_grid(ascending, GridKind::ChebyshevCosine);
    FAIL("expected invalid_sampling");
  } catch (const invalid_sampling& err) {
    const std::string msg = err.what();
    CHECK(msg.find("cos") != std::string::npos);
    CHECK(msg.find("[") != std::string::npos);  // the example grid itself
  }

  auto t = fourier_points(4, 0.0, 1.0);
  t[2] += 0.3;
  try {
    infer_grid(t, GridKind::PeriodicEquispaced);
    FAIL("expected invalid_sampling");
  } catch (const invalid_sampling& err) {
    const std::string msg = err.what();
    CHECK(msg.find("t_n = a + n*(b-a)/M") != std::string::npos);
  }
}

TEST_CASE("scale_correction") {
  CHECK(scale_correction({GridKind::PeriodicEquispaced, 0.0, 2 * pi, 8}, 1) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(scale_correction({GridKind::PeriodicEquispaced, 0.0, 4 * pi, 8}, 2) ==
        doctest::Approx(4.0).epsilon(1e-14));
  CHECK(scale_correction({GridKind::ChebyshevCosine, 1.0, 4.0, 9}, 1) ==
        doctest::Approx(1.5).epsilon(1e-15));

  // scale(g, nu) == scale(g, 1)^nu
  const GridSpec g{GridKind::ChebyshevCosine, -2.0, 5.0, 17};
  const double base = scale_correction(g, 1);
  double power = base;
  for (unsigned nu = 2; nu <= 8; ++nu) {
    power *= base;
    CHECK(scale_correction(g, nu) == doctest::Approx(power).epsilon(1e-14));
  }

  CHECK_THROWS_AS(scale_correction(g, 0), std::invalid_argument);
}
