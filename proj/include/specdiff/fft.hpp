#pragma once

#include <complex>
#include <span>
#include <vector>

namespace specdiff {

using cplx = std::complex<double>;

enum class Direction { Forward, Inverse };

/// DFT pair, unnormalized forward / (1/M) inverse:
///   Forward: Y_k = sum_n y_n exp(-j 2pi n k / M)
///   Inverse: y_n = (1/M) sum_k Y_k exp(+j 2pi n k / M)
/// Runs in O(M log M) for every length: small prime factors by mixed-radix
/// Cooley-Tukey, lengths with a large prime factor by Bluestein's chirp-z.
std::vector<cplx> dft(std::span<const cplx> y, Direction direction);

std::vector<cplx> dft(std::span<const double> y, Direction direction);

}  // namespace specdiff
