"""Means, spreads, and commutator lower bounds for grid states.

Second moments are taken as <A psi | A psi>, which is <A^2> for the Hermitian
operators built here and keeps variances nonnegative by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, PreconditionError
from .grids import WaveFunction, inner_product
from .operators import (
    GridOperator,
    apply,
    commutator_apply,
    momentum_operator,
    position_operator,
)
from .report import CheckReport, make_report

CITE_BOUND = 'Eq 30, "once the commutators between two operators"'
CITE_SPREAD = 'Eq 31, "Δa = √(⟨A²⟩ − ⟨A⟩²)"'
CITE_VECTOR = ('Eq 33, "famous uncertainty relationships"; '
                'Eq 34, "we have taken note of the fact that"')

NORMALIZATION_SLACK = 1e-9


def _require_normalized(psi: WaveFunction) -> None:
    if abs(psi.norm() - 1.0) > NORMALIZATION_SLACK:
        raise PreconditionError("moments are defined for normalized states")


def expectation(psi: WaveFunction, op: GridOperator) -> complex:
    return inner_product(psi, apply(op, psi))


HERMITICITY_SLACK = 1e-10


@dataclass(frozen=True)
class Moments:
    mean: float
    second: float
    spread: float
    mean_imag_residue: float


def moments(psi: WaveFunction, op: GridOperator) -> Moments:
    _require_normalized(psi)
    a_psi = apply(op, psi)
    raw_mean = inner_product(psi, a_psi)
    if abs(raw_mean.imag) > HERMITICITY_SLACK:
        raise PreconditionError("operator expectation is not real on this state")
    second = inner_product(a_psi, a_psi).real
    mean = raw_mean.real
    spread = math.sqrt(max(second - mean * mean, 0.0))
    return Moments(mean=mean, second=second, spread=spread,
                   mean_imag_residue=abs(raw_mean.imag))


def _pair_data(psi: WaveFunction, op_a: GridOperator, op_b: GridOperator) -> dict:
    ma = moments(psi, op_a)
    mb = moments(psi, op_b)
    comm = inner_product(psi, commutator_apply(op_a, op_b, psi))
    product = ma.spread * mb.spread
    bound = 0.5 * abs(comm)
    return {
        "spread_a": ma.spread,
        "spread_b": mb.spread,
        "product": product,
        "half_commutator_magnitude": bound,
        "commutator_expectation": comm,
    }


def uncertainty_check(psi: WaveFunction, op_a: GridOperator, op_b: GridOperator,
                      check_id: str = "uncertainty_bound", tolerance: float = 1e-8,
                      paper_ref: str = CITE_BOUND) -> CheckReport:
    """One-sided check of spread_a * spread_b >= |<[A, B]>| / 2.

    The residual is the bound violation clamped at zero, so any positive
    residual is a genuine failure and saturating states report zero.
    """
    data = _pair_data(psi, op_a, op_b)
    residual = max(0.0, data["half_commutator_magnitude"] - data["product"])
    return make_report(check_id, paper_ref, residual, tolerance, context=data)


def saturation_check(psi: WaveFunction, op_a: GridOperator, op_b: GridOperator,
                     target_product: float, check_id: str = "uncertainty_saturation",
                     tolerance: float = 1e-8, paper_ref: str = CITE_SPREAD) -> CheckReport:
    """Two-sided check that the spread product equals a known closed form."""
    data = _pair_data(psi, op_a, op_b)
    data["target_product"] = target_product
    residual = abs(data["product"] - target_product)
    return make_report(check_id, paper_ref, residual, tolerance, context=data)


def vector_uncertainty_check(psi: WaveFunction, mode: str = "bound",
                             check_id: str | None = None, tolerance: float = 1e-6,
                             paper_ref: str = CITE_VECTOR) -> CheckReport:
    """Componentwise spread products of a 3D state against dim * hbar / 2.

    mode="bound" clamps the violation of sum_m spread(X_m) spread(P_m) >=
    3 hbar / 2 at zero; mode="saturation" reports the two-sided distance,
    which vanishes only for isotropic minimum states.
    """
    if psi.grid.dim != 3:
        raise ConfigurationError("vector uncertainty is defined for 3D states")
    if mode not in ("bound", "saturation"):
        raise ConfigurationError("mode must be 'bound' or 'saturation'")
    _require_normalized(psi)
    products = []
    for axis in range(3):
        mx = moments(psi, position_operator(psi.grid, axis=axis))
        mp = moments(psi, momentum_operator(psi.grid, axis=axis))
        products.append(mx.spread * mp.spread)
    total = float(np.sum(products))
    target = 3.0 * psi.grid.hbar / 2.0
    residual = max(0.0, target - total) if mode == "bound" else abs(total - target)
    if check_id is None:
        check_id = "uncertainty_vector_bound" if mode == "bound" else "uncertainty_vector_saturation"
    return make_report(check_id, paper_ref, residual, tolerance, context={
        "axis_products": products,
        "sum_of_products": total,
        "target": target,
        "mode": mode,
    })
