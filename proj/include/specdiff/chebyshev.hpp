#pragma once

#include <optional>
#include <span>
#include <vector>

#include "specdiff/filter.hpp"
#include "specdiff/grid.hpp"

namespace specdiff {

/// Chebyshev series coefficients from samples on the cosine grid:
/// a_0 = Y_0/M, a_k = 2 Y_k/M for 0 < k < N, a_N = Y_N/M with Y the
/// forward DCT-I and M = 2N.
std::vector<double> cheb_coefficients(std::span<const double> y);

/// Coefficients of d/dx sum a_k T_k, by the descending recurrence
/// b_{k-1} = b_{k+1} + 2k a_k with the constant term halved. Output has
/// the same length as the input; the top entry is zero.
std::vector<double> cheb_series_derivative(std::span<const double> a);

/// Evaluates sum a_k T_k at the N+1 cosine nodes via the inverse DCT-I.
/// Series shorter than N+1 are zero-padded; longer ones would alias and
/// throw invalid_argument.
std::vector<double> cheb_eval_cosine_grid(std::span<const double> a, std::size_t grid_order);

/// Spectral derivative on a Chebyshev cosine grid: coefficients, optional
/// per-mode mask, `order` applications of the series rule, evaluation back
/// on the grid, divide by scale^order. order 0 means filter-only.
std::vector<double> cheb_derivative(std::span<const double> y, const GridSpec& grid,
                                    unsigned order,
                                    const std::optional<FilterMask>& mask = std::nullopt);

std::vector<cplx> cheb_derivative(std::span<const cplx> y, const GridSpec& grid,
                                  unsigned order,
                                  const std::optional<FilterMask>& mask = std::nullopt);

}  // namespace specdiff
