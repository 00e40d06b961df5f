"""Grid realizations of the position and momentum operators and the pointwise
commutator identity checks.

Operator kinds and their action by representation:

    position_multiply           position rep: (X psi)_j = x_j psi_j, exact.
                                momentum rep: conjugation through the transform
                                pair, F m(r) F^(-1), the exact dual action.
    momentum_spectral           position rep: -i hbar * spectral derivative.
                                momentum rep: multiplication by p_j, exact.
    momentum_finite_difference  position rep: -i hbar * central difference
                                (periodic wrap), order h^2, exactly Hermitian.
                                momentum rep: multiplication by p_j.

The spectral derivative zeroes the Nyquist multiplier so the operator stays
Hermitian on even-sized grids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BoundaryContaminationError,
    ConfigurationError,
    IncompatibleOperandsError,
    RepresentationError,
)
from .grids import UniformGrid, WaveFunction, boundary_mass, inner_product
from .report import CheckReport, make_report
from .transforms import to_momentum, to_position

CITE_POISSON = 'Eq 20 / Eq 18, "= iħ I f(r)" derivation chain (§3 proof)'
CITE_COROLLARY = 'Eq 21 corollary, "Proof is easily obtained by direct expansion"'

OPERATOR_KINDS = ("position_multiply", "momentum_spectral", "momentum_finite_difference")

# Error threshold for the measured surface terms; the identity provably fails
# on periodic truncation when the state touches the boundary.
BOUNDARY_MASS_LIMIT = 1e-6


@dataclass(frozen=True)
class GridOperator:
    kind: str
    axis: int
    grid: UniformGrid

    def __post_init__(self):
        if self.kind not in OPERATOR_KINDS:
            raise ConfigurationError(f"unknown operator kind {self.kind!r}")
        if not 0 <= self.axis < self.grid.dim:
            raise ConfigurationError(f"axis {self.axis} out of range for dim {self.grid.dim}")


def position_operator(grid: UniformGrid, axis: int = 0) -> GridOperator:
    return GridOperator(kind="position_multiply", axis=axis, grid=grid)


def momentum_operator(grid: UniformGrid, axis: int = 0, backend: str = "spectral") -> GridOperator:
    if backend == "spectral":
        return GridOperator(kind="momentum_spectral", axis=axis, grid=grid)
    if backend == "finite_difference":
        return GridOperator(kind="momentum_finite_difference", axis=axis, grid=grid)
    raise ConfigurationError(f"unknown momentum backend {backend!r}")


def _spectral_derivative(values: np.ndarray, grid: UniformGrid, axis: int) -> np.ndarray:
    w = 2.0 * math.pi * np.fft.fftfreq(grid.n_points, d=grid.spacing)
    mult = 1j * w
    mult[grid.n_points // 2] = 0.0  # Nyquist must not leak into odd derivatives
    shape = [1] * grid.dim
    shape[axis] = grid.n_points
    return np.fft.ifft(mult.reshape(shape) * np.fft.fft(values, axis=axis), axis=axis)


def _central_difference(values: np.ndarray, grid: UniformGrid, axis: int) -> np.ndarray:
    return (np.roll(values, -1, axis=axis) - np.roll(values, 1, axis=axis)) / (2.0 * grid.spacing)


def apply(op: GridOperator, psi: WaveFunction) -> WaveFunction:
    """Apply op to psi; linear, pure, and representation-aware."""
    if not op.grid.compatible(psi.grid):
        raise IncompatibleOperandsError("operator and state live on incompatible grids")
    g, v = psi.grid, psi.values
    if psi.representation == "position":
        if op.kind == "position_multiply":
            return psi.with_values(g.coordinate(op.axis) * v)
        if op.kind == "momentum_spectral":
            return psi.with_values(-1j * g.hbar * _spectral_derivative(v, g, op.axis))
        return psi.with_values(-1j * g.hbar * _central_difference(v, g, op.axis))
    if psi.representation == "momentum":
        if op.kind == "position_multiply":
            pos = to_position(psi)
            weighted = pos.with_values(pos.grid.coordinate(op.axis) * pos.values)
            back = to_momentum(weighted)
            return psi.with_values(back.values)
        return psi.with_values(g.coordinate(op.axis) * v)
    raise RepresentationError(f"operators act on position or momentum states, got {psi.representation!r}")


def commutator_apply(a: GridOperator, b: GridOperator, psi: WaveFunction) -> WaveFunction:
    """(AB - BA) psi by two applications per term, no algebraic shortcut."""
    if not a.grid.compatible(b.grid):
        raise IncompatibleOperandsError("commutator operands live on incompatible grids")
    ab = apply(a, apply(b, psi))
    ba = apply(b, apply(a, psi))
    return psi.with_values(ab.values - ba.values)


def _identity_residual(psi: WaveFunction, comm_values: np.ndarray, threshold: float) -> tuple[float, int]:
    """max |comm - i hbar psi| / max |psi| over samples above the interior mask."""
    peak = float(np.max(np.abs(psi.values)))
    mask = np.abs(psi.values) > threshold * peak
    resid = np.abs(comm_values - 1j * psi.grid.hbar * psi.values)
    return float(np.max(resid[mask])) / peak, int(np.sum(mask))


def _require_boundary_clean(psi: WaveFunction) -> float:
    bm = boundary_mass(psi)
    if bm > BOUNDARY_MASS_LIMIT:
        raise BoundaryContaminationError(
            f"boundary mass {bm:.3e} exceeds {BOUNDARY_MASS_LIMIT:.0e}; "
            "the periodic commutator identity is meaningless for this state"
        )
    return bm


def poisson_residual(psi: WaveFunction, interior_mask_threshold: float = 1e-6,
                     backend: str = "spectral") -> CheckReport:
    """Pointwise residual of [X, P] psi = i hbar psi on a boundary-clean state.

    Spectral backend tolerance is 1e-6. The finite-difference backend converges
    at order spacing^2; its tolerance is 2 C h^2 with C estimated from the
    state's second derivative and recorded in the context.
    """
    if abs(psi.norm() - 1.0) > 1e-9:
        raise ConfigurationError("poisson_residual expects a normalized state")
    bm = _require_boundary_clean(psi)
    if psi.representation != "position":
        raise RepresentationError("poisson_residual checks position-representation states")
    g = psi.grid
    x_op = position_operator(g)
    p_op = momentum_operator(g, backend=backend)
    comm = commutator_apply(x_op, p_op, psi)
    residual, n_interior = _identity_residual(psi, comm.values, interior_mask_threshold)
    context = {
        "backend": backend,
        "boundary_mass": bm,
        "interior_points": n_interior,
        "interior_mask_threshold": interior_mask_threshold,
        "n_points": g.n_points,
        "half_extent": g.half_extent,
        "hbar": g.hbar,
    }
    if backend == "spectral":
        tolerance = 1e-6
    else:
        # residual ~ h^2 max|psi''| / (2 max|psi|) at leading order
        second = _spectral_derivative(_spectral_derivative(psi.values, g, 0), g, 0)
        c_est = float(np.max(np.abs(second))) / (2.0 * float(np.max(np.abs(psi.values))))
        tolerance = 2.0 * c_est * g.spacing**2
        context["curvature_constant"] = c_est
    return make_report("poisson_residual", CITE_POISSON, residual, tolerance, context)


def corollary_residual_momentum(g: WaveFunction, interior_mask_threshold: float = 1e-6) -> CheckReport:
    """Residual of [R, P] g = i hbar g in the momentum representation.

    R acts by conjugation through the transform pair and P by multiplication
    with p. A zero input passes vacuously with a degenerate-input flag.
    """
    if g.representation != "momentum":
        raise RepresentationError("corollary_residual_momentum checks momentum-representation states")
    if float(np.max(np.abs(g.values))) == 0.0:
        return make_report(
            "corollary_residual_momentum", CITE_COROLLARY, 0.0, 1e-6,
            context={"degenerate_input": True, "n_points": g.grid.n_points},
        )
    bm = _require_boundary_clean(g)
    r_op = position_operator(g.grid)
    p_op = momentum_operator(g.grid)
    comm = commutator_apply(r_op, p_op, g)
    residual, n_interior = _identity_residual(g, comm.values, interior_mask_threshold)
    return make_report(
        "corollary_residual_momentum", CITE_COROLLARY, residual, 1e-6,
        context={
            "boundary_mass": bm,
            "interior_points": n_interior,
            "interior_mask_threshold": interior_mask_threshold,
            "n_points": g.grid.n_points,
            "half_extent": g.grid.half_extent,
            "hbar": g.grid.hbar,
        },
    )


def commutator_expectation_matrix(psi: WaveFunction, backend: str = "spectral") -> np.ndarray:
    """3x3 matrix <[X_m, P_n]> / (i hbar) over a 3D state; the identity target."""
    if psi.grid.dim != 3:
        raise ConfigurationError("commutator_expectation_matrix needs a 3D state")
    if psi.representation != "position":
        raise RepresentationError("commutator_expectation_matrix checks position-representation states")
    _require_boundary_clean(psi)
    g = psi.grid
    out = np.zeros((3, 3), dtype=np.complex128)
    for m in range(3):
        for n in range(3):
            comm = commutator_apply(position_operator(g, m), momentum_operator(g, n, backend=backend), psi)
            out[m, n] = inner_product(psi, comm) / (1j * g.hbar)
    return out
