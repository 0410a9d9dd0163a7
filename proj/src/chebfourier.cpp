#include "specdiff/chebfourier.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "specdiff/errors.hpp"
#include "specdiff/grid.hpp"
#include "specdiff/transforms.hpp"

namespace specdiff {
namespace {

constexpr unsigned kEngineStepBudget = 64;

double int_pow(double base, unsigned e) {
  double out = 1.0;
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

// L'Hopital on [sum_mu f_mu(theta) y^{(mu)}(theta)] / h(theta) at theta in
// {0, pi}, entirely in exact arithmetic. Each step differentiates numerator
// and denominator w.r.t. theta and cancels the largest sin power common to
// every term, until the denominator is nonzero at the endpoints.
EndpointWeights run_endpoint_engine(unsigned order) {
  const FactorTable table = chain_rule_table(order);

  std::vector<TrigPoly> numer(order);
  for (unsigned mu = 1; mu <= order; ++mu)
    numer[mu - 1] =
        TrigPoly::poly_times_sin_power(table.rows[order - 1][mu - 1].numerator, mu - 1);
  TrigPoly denom = TrigPoly::poly_times_sin_power(RationalPoly::constant(Rational(1)),
                                                  2 * order - 1);

  unsigned steps = 0;
  while (denom.at_zero() == 0 || denom.at_pi() == 0) {
    if (++steps > kEngineStepBudget)
      throw internal_logic_error("endpoint engine did not terminate within the step budget");
    if (denom.at_zero() != 0 || denom.at_pi() != 0)
      throw internal_logic_error("endpoint engine: denominator vanishes at only one endpoint");
    for (unsigned mu = 2; mu <= numer.size(); mu += 2) {
      const TrigPoly& f = numer[mu - 1];
      if (f.at_zero() != 0 || f.at_pi() != 0)
        throw internal_logic_error("endpoint engine hit a non-0/0 form");
    }

    std::vector<TrigPoly> next(numer.size() + 1);
    next[0] = numer[0].theta_derivative();
    for (std::size_t mu = 2; mu <= numer.size(); ++mu)
      next[mu - 1] = numer[mu - 1].theta_derivative() + numer[mu - 2];
    next[numer.size()] = numer.back();
    numer = std::move(next);
    denom = denom.theta_derivative();

    bool cancel = true;
    while (cancel) {
      cancel = denom.divisible_by_sin();
      for (const auto& f : numer)
        cancel = cancel && (f.is_zero() || f.divisible_by_sin());
      if (cancel) {
        denom = denom.div_sin();
        for (auto& f : numer)
          if (!f.is_zero()) f = f.div_sin();
      }
    }
  }

  EndpointWeights weights;
  const Rational d0 = denom.at_zero();
  const Rational dpi = denom.at_pi();
  for (unsigned mu = 2; mu <= numer.size(); mu += 2) {
    const unsigned m = mu / 2;
    const Rational parity = m % 2 == 0 ? Rational(1) : Rational(-1);
    const Rational f0 = numer[mu - 1].at_zero();
    const Rational fpi = numer[mu - 1].at_pi();
    if (f0 != 0) weights.plus.emplace_back(m, parity * f0 / d0);
    if (fpi != 0) weights.minus.emplace_back(m, parity * fpi / dpi);
  }
  return weights;
}

}  // namespace

FactorTable chain_rule_table(unsigned order) {
  if (order < 1) throw std::invalid_argument("chain_rule_table: order must be >= 1");
  const RationalPoly one_minus_x2(
      std::vector<Rational>{Rational(1), Rational(0), Rational(-1)});
  const RationalPoly x = RationalPoly::monomial(1, Rational(1));

  FactorTable table;
  table.rows.resize(order);
  table.rows[0] = {{RationalPoly::constant(Rational(-1)), Rational(1, 2)}};
  for (unsigned r = 2; r <= order; ++r) {
    auto& row = table.rows[r - 1];
    const auto& prev = table.rows[r - 2];
    row.resize(r);
    for (unsigned mu = 1; mu <= r; ++mu) {
      const Rational c(2 * r - mu, 2);
      const RationalPoly p = mu <= r - 1 ? prev[mu - 1].numerator : RationalPoly{};
      const RationalPoly q = mu >= 2 ? prev[mu - 2].numerator : RationalPoly{};
      row[mu - 1] = {one_minus_x2 * p.derivative() + x * p * (c - 1) * Rational(2) - q, c};
    }
  }
  return table;
}

std::vector<std::vector<double>> theta_spectral_derivatives(std::span<const double> spectrum,
                                                            unsigned order) {
  if (order < 1) throw std::invalid_argument("theta_spectral_derivatives: order must be >= 1");
  if (spectrum.size() < 3)
    throw std::invalid_argument("theta_spectral_derivatives: need N >= 2");
  const std::size_t n = spectrum.size() - 1;
  const double m = 2.0 * double(n);

  std::vector<std::vector<double>> out;
  out.reserve(order);
  for (unsigned mu = 1; mu <= order; ++mu) {
    if (mu % 2 == 1) {
      // sign of j^{mu+1}; the Nyquist mode drops out of odd derivatives
      const double sign = ((mu + 1) / 2) % 2 == 0 ? 1.0 : -1.0;
      std::vector<double> w(n - 1);
      for (std::size_t k = 1; k < n; ++k)
        w[k - 1] = sign * int_pow(double(k), mu) * spectrum[k];
      auto samples = dst1_eval(w);
      for (auto& v : samples) v /= m;
      out.push_back(std::move(samples));
    } else {
      const double sign = (mu / 2) % 2 == 0 ? 1.0 : -1.0;
      std::vector<double> scaled(n + 1);
      scaled[0] = 0.0;
      for (std::size_t k = 1; k <= n; ++k)
        scaled[k] = sign * int_pow(double(k), mu) * spectrum[k];
      out.push_back(dct1(scaled, Direction::Inverse));
    }
  }
  return out;
}

std::vector<double> interior_transform(const std::vector<std::vector<double>>& theta_derivs,
                                       std::span<const double> x, const FactorTable& table) {
  const unsigned order = static_cast<unsigned>(table.rows.size());
  if (theta_derivs.size() < order)
    throw std::invalid_argument("interior_transform: missing theta derivatives");
  if (x.size() < 3) throw std::invalid_argument("interior_transform: need N >= 2");
  const std::size_t n = x.size() - 1;

  const auto& row = table.rows[order - 1];
  std::vector<std::vector<double>> numer(order);
  std::vector<double> exponent(order);
  for (unsigned mu = 1; mu <= order; ++mu) {
    const auto& coeffs = row[mu - 1].numerator.coefficients();
    numer[mu - 1].resize(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      numer[mu - 1][i] = coeffs[i].convert_to<double>();
    exponent[mu - 1] = row[mu - 1].denom_exponent.convert_to<double>();
  }

  std::vector<double> out(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    const double xi = x[i];
    if (!(std::abs(xi) < 1.0))
      throw std::invalid_argument("interior_transform: interior node with |x| >= 1");
    const double w = 1.0 - xi * xi;
    double acc = 0.0;
    for (unsigned mu = 1; mu <= order; ++mu) {
      double poly = 0.0;
      for (std::size_t c = numer[mu - 1].size(); c-- > 0;) poly = poly * xi + numer[mu - 1][c];
      acc += poly / std::pow(w, exponent[mu - 1]) * theta_derivs[mu - 1][i];
    }
    out[i - 1] = acc;
  }
  return out;
}

const EndpointWeights& endpoint_weights(unsigned order) {
  if (order < 1) throw std::invalid_argument("endpoint_weights: order must be >= 1");
  if (order > endpoint_engine_max_order())
    throw unsupported_order("endpoint engine order cap exceeded (see SPECDIFF_MAX_NU)");
  static std::mutex cache_mutex;
  static std::map<unsigned, EndpointWeights> cache;
  std::scoped_lock lock(cache_mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, run_endpoint_engine(order)).first;
  return it->second;
}

std::pair<double, double> endpoint_limits(std::span<const double> spectrum, unsigned order) {
  if (spectrum.size() < 3) throw std::invalid_argument("endpoint_limits: need N >= 2");
  const auto& weights = endpoint_weights(order);
  const std::size_t n = spectrum.size() - 1;
  const double m = 2.0 * double(n);

  double at_plus = 0.0;
  for (const auto& [half_order, weight] : weights.plus) {
    double sum = int_pow(double(n), 2 * half_order) * spectrum[n];
    for (std::size_t k = 1; k < n; ++k)
      sum += 2.0 * int_pow(double(k), 2 * half_order) * spectrum[k];
    at_plus += weight.convert_to<double>() * sum;
  }
  double at_minus = 0.0;
  for (const auto& [half_order, weight] : weights.minus) {
    double sum = int_pow(double(n), 2 * half_order) * (n % 2 == 0 ? 1.0 : -1.0) * spectrum[n];
    for (std::size_t k = 1; k < n; ++k)
      sum += 2.0 * int_pow(double(k), 2 * half_order) * (k % 2 == 0 ? 1.0 : -1.0) * spectrum[k];
    at_minus += weight.convert_to<double>() * sum;
  }
  return {at_plus / m, at_minus / m};
}

std::vector<double> cheb_derivative_via_theta(std::span<const double> y, unsigned order) {
  if (y.size() < 3)
    throw std::invalid_argument("cheb_derivative_via_theta: need N >= 2");
  if (order < 1)
    throw std::invalid_argument("cheb_derivative_via_theta: order must be >= 1");
  const std::size_t n = y.size() - 1;
  const auto spectrum = dct1(y, Direction::Forward);
  const auto theta = theta_spectral_derivatives(spectrum, order);
  const auto x = chebyshev_points(n, -1.0, 1.0);
  const auto interior = interior_transform(theta, x, chain_rule_table(order));
  const auto [at_plus, at_minus] = endpoint_limits(spectrum, order);

  std::vector<double> out(y.size());
  out.front() = at_plus;
  for (std::size_t i = 1; i < n; ++i) out[i] = interior[i - 1];
  out.back() = at_minus;
  return out;
}

unsigned endpoint_engine_max_order() {
  if (const char* env = std::getenv("SPECDIFF_MAX_NU")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 8;
}

std::string format_factor_table(unsigned order) {
  const auto table = chain_rule_table(order);
  std::ostringstream os;
  for (unsigned r = 1; r <= order; ++r) {
    os << "d^" << r << "/dx^" << r << ":";
    for (unsigned mu = 1; mu <= r; ++mu) {
      const auto& e = table.rows[r - 1][mu - 1];
      os << (mu == 1 ? "  " : "  +  ") << "(" << e.numerator.str()
         << ") / (1-x^2)^(" << to_string(e.denom_exponent) << ") * y^(" << mu << ")";
    }
    os << "\n";
  }
  return os.str();
}

std::string format_endpoint_weights(unsigned order) {
  const auto& weights = endpoint_weights(order);
  std::ostringstream os;
  os << "order " << order << " endpoint limits, modes k = 1..N-1 plus the N term:\n";
  os << "  at x=+1: (1/M) sum_k [";
  for (std::size_t i = 0; i < weights.plus.size(); ++i)
    os << (i ? " + " : " ") << "(" << to_string(weights.plus[i].second) << ") k^"
       << 2 * weights.plus[i].first;
  os << " ] Y_k  (interior terms doubled)\n";
  os << "  at x=-1: (1/M) sum_k [";
  for (std::size_t i = 0; i < weights.minus.size(); ++i)
    os << (i ? " + " : " ") << "(" << to_string(weights.minus[i].second) << ") k^"
       << 2 * weights.minus[i].first;
  os << " ] (-1)^k Y_k  (interior terms doubled)\n";
  return os.str();
}

}  // namespace specdiff
