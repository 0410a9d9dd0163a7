#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

namespace specdiff {

using Rational = boost::multiprecision::cpp_rational;

/// Dense polynomial with exact rational coefficients; trailing zeros are
/// trimmed so equality is structural.
class RationalPoly {
public:
  RationalPoly() = default;  // zero polynomial
  explicit RationalPoly(std::vector<Rational> coeffs);
  static RationalPoly constant(Rational value);
  static RationalPoly monomial(std::size_t degree, Rational coefficient);

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  Rational coefficient(std::size_t i) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  RationalPoly derivative() const;
  Rational operator()(const Rational& x) const;
  double operator()(double x) const;

  RationalPoly operator+(const RationalPoly& rhs) const;
  RationalPoly operator-(const RationalPoly& rhs) const;
  RationalPoly operator*(const RationalPoly& rhs) const;
  RationalPoly operator*(const Rational& scalar) const;
  RationalPoly operator-() const;
  bool operator==(const RationalPoly& rhs) const = default;

  /// Exact polynomial division. Returns false when the remainder is
  /// nonzero, leaving `quotient` unspecified.
  static bool divide(const RationalPoly& numerator, const RationalPoly& divisor,
                     RationalPoly& quotient);

  std::string str(const char* variable = "x") const;

private:
  void trim();
  std::vector<Rational> coeffs_;  // coeffs_[i] multiplies x^i
};

/// A(cos t) + B(cos t) sin t. Canonical: powers of sin beyond the first are
/// rewritten through sin^2 = 1 - cos^2, so the representation is unique.
struct TrigPoly {
  RationalPoly a;  // cosine-polynomial part
  RationalPoly b;  // coefficient of sin t

  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  /// d/dt (A + B s) = (B'(c^2 - 1) + B c) + (-A') s, primes in c = cos t.
  TrigPoly theta_derivative() const;

  TrigPoly times_sin() const;
  bool divisible_by_sin() const;
  TrigPoly div_sin() const;  // caller must check divisible_by_sin()

  Rational at_zero() const { return a(Rational(1)); }
  Rational at_pi() const { return a(Rational(-1)); }
  double operator()(double theta) const;

  TrigPoly operator+(const TrigPoly& rhs) const { return {a + rhs.a, b + rhs.b}; }
  bool operator==(const TrigPoly& rhs) const = default;

  /// p(cos t) * sin^k t, normalized into the canonical form.
  static TrigPoly poly_times_sin_power(const RationalPoly& p, unsigned sin_power);
};

std::string to_string(const Rational& r);

}  // namespace specdiff
