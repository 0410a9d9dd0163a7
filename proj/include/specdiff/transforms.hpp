#pragma once

#include <span>
#include <vector>

#include "specdiff/fft.hpp"

namespace specdiff {

/// [y_0, ..., y_N, y_{N-1}, ..., y_1]: the even periodic extension of a
/// length-(N+1) vector, length M = 2N (necessarily even).
std::vector<double> even_extend(std::span<const double> y);
std::vector<cplx> even_extend(std::span<const cplx> y);

/// DCT-I in the DFT's normalization, computed as the first N+1 entries of
/// the length-2N DFT of the even extension:
///   Forward: Y_k = y_0 + (-1)^k y_N + 2 sum_{n=1}^{N-1} y_n cos(pi n k / N)
///   Inverse: y_n = (1/M) (Y_0 + (-1)^n Y_N + 2 sum Y_k cos(pi n k / N)), M = 2N
std::vector<double> dct1(std::span<const double> y, Direction direction);

/// Samples of the interior-mode sine series: given W_1..W_{N-1}, returns
/// s_n = 2 sum_{k=1}^{N-1} W_k sin(pi n k / N) for n = 0..N.
/// The endpoint entries are set to exactly zero.
std::vector<double> dst1_eval(std::span<const double> interior_modes);

}  // namespace specdiff
