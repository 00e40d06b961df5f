"""Uniform periodic sampling grids and wavefunction containers.

Everything numerical in this package lives on a centered periodic grid
x_j = -L + j*spacing with spacing = 2L/n and the point +L excluded. Power
of two sizes keep the conjugate transform pair exactly unitary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    ConfigurationError,
    DegenerateStateError,
    IncompatibleOperandsError,
)

REPRESENTATIONS = ("position", "momentum", "energy", "time")


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class UniformGrid:
    """Centered uniform grid, 1D or 3D cubic, carrying the value of hbar.

    Attributes:
        dim: 1 or 3.
        n_points: samples per axis, a power of two >= 8.
        half_extent: L > 0; samples cover [-L, L) on every axis.
        hbar: positive scale constant shared by every object built on the grid.
    """

    dim: int
    n_points: int
    half_extent: float
    hbar: float = 1.0

    def __post_init__(self):
        if self.dim not in (1, 3):
            raise ConfigurationError(f"dim must be 1 or 3, got {self.dim}")
        if not isinstance(self.n_points, int) or not _is_power_of_two(self.n_points) or self.n_points < 8:
            raise ConfigurationError(f"n_points must be a power of two >= 8, got {self.n_points}")
        if not (self.half_extent > 0 and math.isfinite(self.half_extent)):
            raise ConfigurationError(f"half_extent must be positive and finite, got {self.half_extent}")
        if not (self.hbar > 0 and math.isfinite(self.hbar)):
            raise ConfigurationError(f"hbar must be positive and finite, got {self.hbar}")

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_extent / self.n_points

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.n_points,) * self.dim

    @property
    def size(self) -> int:
        return self.n_points**self.dim

    def axis_points(self) -> np.ndarray:
        """Sample positions along one axis: -L, -L+spacing, ..., L-spacing."""
        return -self.half_extent + self.spacing * np.arange(self.n_points)

    def coordinate(self, axis: int = 0) -> np.ndarray:
        """Coordinate values along `axis`, shaped to broadcast against sample arrays."""
        if not 0 <= axis < self.dim:
            raise ConfigurationError(f"axis {axis} out of range for dim {self.dim}")
        pts = self.axis_points()
        if self.dim == 1:
            return pts
        shape = [1] * self.dim
        shape[axis] = self.n_points
        return pts.reshape(shape)

    def compatible(self, other: "UniformGrid", rel: float = 1e-12) -> bool:
        """True when the two grids agree up to floating `rel` in extent and hbar."""
        return (
            self.dim == other.dim
            and self.n_points == other.n_points
            and math.isclose(self.half_extent, other.half_extent, rel_tol=rel, abs_tol=0.0)
            and math.isclose(self.hbar, other.hbar, rel_tol=rel, abs_tol=0.0)
        )


def make_uniform_grid(dim: int, n_points: int, half_extent: float, hbar: float = 1.0) -> UniformGrid:
    """Construct a UniformGrid, validating every field."""
    return UniformGrid(dim=dim, n_points=int(n_points), half_extent=float(half_extent), hbar=float(hbar))


@dataclass(frozen=True)
class WaveFunction:
    """Complex samples on a UniformGrid, tagged with their representation."""

    grid: UniformGrid
    representation: str
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.representation not in REPRESENTATIONS:
            raise ConfigurationError(
                f"representation must be one of {REPRESENTATIONS}, got {self.representation!r}"
            )
        v = np.asarray(self.values, dtype=np.complex128)
        if v.shape != self.grid.shape:
            raise ConfigurationError(f"value shape {v.shape} does not match grid shape {self.grid.shape}")
        v = v.copy()
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    def with_values(self, values: np.ndarray, representation: str | None = None,
                    grid: UniformGrid | None = None) -> "WaveFunction":
        return WaveFunction(
            grid=grid if grid is not None else self.grid,
            representation=representation if representation is not None else self.representation,
            values=values,
        )

    def norm(self) -> float:
        return math.sqrt(float(np.sum(np.abs(self.values) ** 2)) * self.grid.spacing**self.grid.dim)


def _require_same_grid(a: WaveFunction, b: WaveFunction) -> None:
    if a.representation != b.representation:
        raise IncompatibleOperandsError(
            f"representation mismatch: {a.representation!r} vs {b.representation!r}"
        )
    if not a.grid.compatible(b.grid):
        raise IncompatibleOperandsError("wavefunctions live on incompatible grids")


def inner_product(a: WaveFunction, b: WaveFunction) -> complex:
    """Riemann inner product <a|b> = sum conj(a_j) b_j * spacing^dim.

    On these periodic grids the Riemann sum coincides with the trapezoid rule,
    so it is spectrally accurate for smooth decaying states.
    """
    _require_same_grid(a, b)
    return complex(np.sum(np.conj(a.values) * b.values) * a.grid.spacing**a.grid.dim)


def normalize(psi: WaveFunction) -> WaveFunction:
    """Scale psi to unit norm. Raises DegenerateStateError on a zero state."""
    n = psi.norm()
    if not n > 0.0 or not math.isfinite(n):
        raise DegenerateStateError("cannot normalize a state with zero or non-finite norm")
    return psi.with_values(psi.values / n)


def boundary_mass(psi: WaveFunction, cells: int = 4) -> float:
    """Fraction of |psi|^2 within `cells` samples of the boundary along any axis."""
    total = float(np.sum(np.abs(psi.values) ** 2))
    if total == 0.0:
        return 0.0
    n = psi.grid.n_points
    mask = np.zeros(n, dtype=bool)
    mask[:cells] = True
    mask[n - cells:] = True
    full = np.zeros(psi.grid.shape, dtype=bool)
    for axis in range(psi.grid.dim):
        shape = [1] * psi.grid.dim
        shape[axis] = n
        full |= mask.reshape(shape)
    return float(np.sum(np.abs(psi.values[full]) ** 2)) / total


def boundary_band_fraction(values: np.ndarray, band_divisor: int = 8) -> float:
    """Fraction of l2 mass of a 1D sample array in the outer 1/band_divisor of each side."""
    v = np.asarray(values)
    total = float(np.sum(np.abs(v) ** 2))
    if total == 0.0:
        return 0.0
    band = max(1, v.shape[0] // band_divisor)
    outer = float(np.sum(np.abs(v[:band]) ** 2) + np.sum(np.abs(v[-band:]) ** 2))
    return outer / total
