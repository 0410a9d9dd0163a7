#include "specdiff/rational.hpp"

#include <cmath>
#include <sstream>

namespace specdiff {
namespace {

const RationalPoly& one_minus_x_squared() {
  static const RationalPoly p(std::vector<Rational>{Rational(1), Rational(0), Rational(-1)});
  return p;
}

}  // namespace

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPoly RationalPoly::constant(Rational value) {
  return RationalPoly(std::vector<Rational>{std::move(value)});
}

RationalPoly RationalPoly::monomial(std::size_t degree, Rational coefficient) {
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = std::move(coefficient);
  return RationalPoly(std::move(c));
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(i);
  return RationalPoly(std::move(d));
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

double RationalPoly::operator()(double x) const {
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = acc * x + coeffs_[i].convert_to<double>();
  return acc;
}

RationalPoly RationalPoly::operator+(const RationalPoly& rhs) const {
  std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator-(const RationalPoly& rhs) const { return *this + (-rhs); }

RationalPoly RationalPoly::operator*(const RationalPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator*(const Rational& scalar) const {
  std::vector<Rational> out(coeffs_);
  for (auto& c : out) c *= scalar;
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator-() const { return *this * Rational(-1); }

bool RationalPoly::divide(const RationalPoly& numerator, const RationalPoly& divisor,
                          RationalPoly& quotient) {
  if (divisor.is_zero()) return false;
  if (numerator.is_zero()) {
    quotient = {};
    return true;
  }
  if (numerator.coeffs_.size() < divisor.coeffs_.size()) return false;
  std::vector<Rational> rem = numerator.coeffs_;
  const std::size_t qlen = rem.size() - divisor.coeffs_.size() + 1;
  std::vector<Rational> q(qlen, Rational(0));
  const Rational& lead = divisor.coeffs_.back();
  for (std::size_t i = qlen; i-- > 0;) {
    const Rational factor = rem[i + divisor.coeffs_.size() - 1] / lead;
    q[i] = factor;
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j)
      rem[i + j] -= factor * divisor.coeffs_[j];
  }
  for (const auto& r : rem)
    if (r != 0) return false;
  quotient = RationalPoly(std::move(q));
  return true;
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string RationalPoly::str(const char* variable) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) {
      os << variable;
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

TrigPoly TrigPoly::theta_derivative() const {
  const RationalPoly minus_one_minus_c2 =
      RationalPoly(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});
  const RationalPoly c = RationalPoly::monomial(1, Rational(1));
  return {b.derivative() * minus_one_minus_c2 + b * c, -a.derivative()};
}

TrigPoly TrigPoly::times_sin() const { return {b * one_minus_x_squared(), a}; }

bool TrigPoly::divisible_by_sin() const {
  RationalPoly q;
  return RationalPoly::divide(a, one_minus_x_squared(), q);
}

TrigPoly TrigPoly::div_sin() const {
  RationalPoly q;
  RationalPoly::divide(a, one_minus_x_squared(), q);
  return {b, q};
}

double TrigPoly::operator()(double theta) const {
  const double c = std::cos(theta);
  return a(c) + b(c) * std::sin(theta);
}

TrigPoly TrigPoly::poly_times_sin_power(const RationalPoly& p, unsigned sin_power) {
  RationalPoly even_part = p;
  for (unsigned i = 0; i + 1 < sin_power; i += 2) even_part = even_part * one_minus_x_squared();
  if (sin_power % 2 == 0) return {even_part, {}};
  return {{}, even_part};
}

}  // namespace specdiff
