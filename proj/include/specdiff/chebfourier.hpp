#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "specdiff/rational.hpp"

namespace specdiff {

/// One factor p(x) / (1 - x^2)^c of the chain-rule expansion.
struct FactorEntry {
  RationalPoly numerator;
  Rational denom_exponent;  // c; always row - column/2

  bool operator==(const FactorEntry&) const = default;
};

/// Triangular table of chain-rule factors: rows[r-1][mu-1] multiplies
/// y^{(mu)}(theta) in d^r/dx^r y. Row r is built from row r-1 by
///   p_new = (1 - x^2) p' + 2(c - 1) x p - q
/// with p the entry above, q the entry above-left, c the new exponent.
struct FactorTable {
  std::vector<std::vector<FactorEntry>> rows;
};

FactorTable chain_rule_table(unsigned order);

/// theta-domain derivatives of orders 1..order of the DCT-I reconstruction,
/// each sampled at theta_n = pi n / N. Odd orders come back through the
/// DST-I over interior modes, even orders through the inverse DCT-I.
std::vector<std::vector<double>> theta_spectral_derivatives(std::span<const double> spectrum,
                                                            unsigned order);

/// Chain-rule combination at the interior nodes n = 1..N-1 (|x| < 1).
std::vector<double> interior_transform(const std::vector<std::vector<double>>& theta_derivs,
                                       std::span<const double> x, const FactorTable& table);

/// Exact weights from the L'Hopital endpoint engine. The order-nu
/// derivative at the endpoints is
///   at x=+1: (1/M) sum_m w_plus[m]  (N^{2m} Y_N + 2 sum_k k^{2m} Y_k)
///   at x=-1: (1/M) sum_m w_minus[m] (N^{2m} (-1)^N Y_N + 2 sum_k k^{2m} (-1)^k Y_k)
/// with the sums over interior modes k = 1..N-1.
struct EndpointWeights {
  std::vector<std::pair<unsigned, Rational>> plus;
  std::vector<std::pair<unsigned, Rational>> minus;
};

/// Memoized per order; safe for concurrent callers.
const EndpointWeights& endpoint_weights(unsigned order);

std::pair<double, double> endpoint_limits(std::span<const double> spectrum, unsigned order);

/// Reference derivative on the canonical [-1, 1] cosine grid by the
/// theta-domain route. Domain scaling is the caller's job.
std::vector<double> cheb_derivative_via_theta(std::span<const double> y, unsigned order);

/// Engine order cap: 8 unless the SPECDIFF_MAX_NU environment variable
/// says otherwise.
unsigned endpoint_engine_max_order();

/// Exact-fraction renderings of the factor table and endpoint weights.
std::string format_factor_table(unsigned order);
std::string format_endpoint_weights(unsigned order);

}  // namespace specdiff
