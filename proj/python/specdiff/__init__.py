"""Spectral derivatives of smooth sampled signals.

Fourier basis for periodic data, Chebyshev basis for aperiodic data,
with low-pass filtering and arbitrary affine domains.
"""

from ._specdiff import (
    cheb_coefficients,
    cheb_derivative,
    cheb_derivative_via_theta,
    cheb_series_derivative,
    chebyshev_points,
    endpoint_weights,
    factor_table,
    fourier_derivative,
    fourier_points,
    partial_derivative,
)

__all__ = [
    "cheb_coefficients",
    "cheb_derivative",
    "cheb_derivative_via_theta",
    "cheb_series_derivative",
    "chebyshev_points",
    "endpoint_weights",
    "factor_table",
    "fourier_derivative",
    "fourier_points",
    "partial_derivative",
]
