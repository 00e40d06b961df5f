"""Closed-form and seeded test state families used across checks."""

from __future__ import annotations

import math

import numpy as np

from .errors import ConfigurationError
from .grids import UniformGrid, WaveFunction, normalize


def gaussian(grid: UniformGrid, sigma: float = 1.0, center: float = 0.0,
             momentum: float = 0.0, representation: str = "position") -> WaveFunction:
    """Normalized 1D Gaussian exp(-(x-center)^2 / 2 sigma^2) times a plane-wave factor."""
    if grid.dim != 1:
        raise ConfigurationError("gaussian builds 1D states; use gaussian_3d for dim 3")
    if not sigma > 0:
        raise ConfigurationError("sigma must be positive")
    x = grid.axis_points()
    v = (math.pi * sigma**2) ** -0.25 * np.exp(-((x - center) ** 2) / (2.0 * sigma**2))
    v = v * np.exp(1j * momentum * x / grid.hbar)
    return normalize(WaveFunction(grid=grid, representation=representation, values=v))


def gaussian_3d(grid: UniformGrid, sigmas=(1.0, 1.0, 1.0),
                representation: str = "position") -> WaveFunction:
    """Normalized 3D Gaussian with per-axis widths."""
    if grid.dim != 3:
        raise ConfigurationError("gaussian_3d needs a 3D grid")
    if len(sigmas) != 3 or any(not s > 0 for s in sigmas):
        raise ConfigurationError("sigmas must be three positive widths")
    v = np.ones(grid.shape, dtype=np.complex128)
    for axis, s in enumerate(sigmas):
        x = grid.coordinate(axis)
        v = v * np.exp(-(x**2) / (2.0 * s**2))
    return normalize(WaveFunction(grid=grid, representation=representation, values=v))


def oscillator_eigenstate(grid: UniformGrid, n: int, sigma: float = 1.0) -> WaveFunction:
    """n-th weighted-Hermite state H_n(x/sigma) exp(-x^2 / 2 sigma^2), normalized."""
    if grid.dim != 1:
        raise ConfigurationError("oscillator_eigenstate builds 1D states")
    if n < 0:
        raise ConfigurationError("n must be nonnegative")
    if not sigma > 0:
        raise ConfigurationError("sigma must be positive")
    x = grid.axis_points()
    coeffs = np.zeros(n + 1)
    coeffs[n] = 1.0
    h = np.polynomial.hermite.hermval(x / sigma, coeffs)
    v = h * np.exp(-(x**2) / (2.0 * sigma**2))
    v = v / math.sqrt(2.0**n * math.factorial(n) * math.sqrt(math.pi) * sigma)
    return normalize(WaveFunction(grid=grid, representation="position", values=v.astype(np.complex128)))


def conjugate_gaussian_pair(grid_p: UniformGrid, sigma: float = 1.0, center: float = 0.0,
                            momentum: float = 0.0) -> tuple[WaveFunction, WaveFunction]:
    """Closed-form transform pair: momentum-side samples and the exact position image.

    psi(p) = (sigma^2 / (pi hbar^2))^(1/4) exp(-sigma^2 (p - p0)^2 / 2 hbar^2) exp(-i p x0 / hbar)
    Psi(r) = (pi sigma^2)^(-1/4) exp(-(r - x0)^2 / 2 sigma^2) exp(+i p0 (r - x0) / hbar)

    The second is the exact forward image of the first, including the constant
    phase, so the two can serve as independently constructed representations.
    """
    from .transforms import reciprocal_grid

    if grid_p.dim != 1:
        raise ConfigurationError("conjugate_gaussian_pair builds 1D states")
    hbar = grid_p.hbar
    p = grid_p.axis_points()
    psi = (sigma**2 / (math.pi * hbar**2)) ** 0.25 \
        * np.exp(-(sigma**2) * (p - momentum) ** 2 / (2.0 * hbar**2)) \
        * np.exp(-1j * p * center / hbar)
    grid_r = reciprocal_grid(grid_p)
    r = grid_r.axis_points()
    Psi = (math.pi * sigma**2) ** -0.25 \
        * np.exp(-((r - center) ** 2) / (2.0 * sigma**2)) \
        * np.exp(1j * momentum * (r - center) / hbar)
    return (
        WaveFunction(grid=grid_p, representation="momentum", values=psi),
        WaveFunction(grid=grid_r, representation="position", values=Psi),
    )


def random_band_limited(grid: UniformGrid, rng: np.random.Generator, n_modes: int = 6,
                        envelope_divisor: float = 8.0,
                        representation: str = "position") -> WaveFunction:
    """Seeded boundary-clean state: Gaussian envelope times random low modes.

    The envelope width L/envelope_divisor keeps boundary-band mass far below
    the unitarity tolerances, so these states are valid inputs for round-trip
    and norm-preservation properties.
    """
    if grid.dim != 1:
        raise ConfigurationError("random_band_limited builds 1D states")
    x = grid.axis_points()
    L = grid.half_extent
    c = rng.normal(size=2 * n_modes + 1) + 1j * rng.normal(size=2 * n_modes + 1)
    modes = np.zeros(grid.n_points, dtype=np.complex128)
    for j in range(2 * n_modes + 1):
        modes += c[j] * np.exp(1j * math.pi * (j - n_modes) * x / L)
    v = np.exp(-(x**2) / (2.0 * (L / envelope_divisor) ** 2)) * modes
    return normalize(WaveFunction(grid=grid, representation=representation, values=v))
