#pragma once

#include <cstddef>
#include <vector>

#include "specdiff/fft.hpp"

namespace specdiff {

/// Per-mode gains for the nonnegative half of a spectrum: wavenumbers
/// 0..floor(M/2) on the Fourier side, modes 0..N on the Chebyshev side.
struct FilterMask {
  std::vector<double> gains;
};

/// gains[k] = 1 for k <= cutoff, 0 above; K+1 entries in total.
FilterMask lowpass_mask(std::size_t num_modes, std::size_t cutoff);

/// Scales DFT mode k and its mirror M-k by gains[k]; DC and (for even M)
/// the Nyquist mode are touched once, so real signals stay real.
std::vector<cplx> apply_mask(std::vector<cplx> spectrum, const FilterMask& mask);

}  // namespace specdiff
