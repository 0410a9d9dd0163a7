#pragma once

#include <optional>
#include <span>
#include <vector>

#include "specdiff/fft.hpp"
#include "specdiff/filter.hpp"
#include "specdiff/grid.hpp"

namespace specdiff {

/// Diagonal derivative operator in the frequency domain. Entry k is
/// (jk)^nu for k < M/2 and (j(k-M))^nu for k > M/2; for even M the
/// Nyquist entry is (j M/2)^nu when nu is even and 0 when nu is odd.
std::vector<cplx> wavenumber_multipliers(std::size_t m, unsigned order);

/// Spectral derivative of a periodic signal: DFT, optional mask, multiply
/// by the wavenumber factors, inverse DFT, divide by scale^order.
/// order 0 means filter-only (no derivative, no scale correction).
/// The real overload discards the imaginary residue after checking it is
/// negligible; a large residue throws numeric_contamination.
std::vector<double> fourier_derivative(std::span<const double> y, const GridSpec& grid,
                                       unsigned order,
                                       const std::optional<FilterMask>& mask = std::nullopt);

std::vector<cplx> fourier_derivative(std::span<const cplx> y, const GridSpec& grid,
                                     unsigned order,
                                     const std::optional<FilterMask>& mask = std::nullopt);

}  // namespace specdiff
