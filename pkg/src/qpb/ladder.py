"""Truncated ladder pair for the energy-time algebra.

The lowering matrix b has b[m-1, m] = sqrt(m). The Hermitian pair

    H = omega * (hbar * (b + b*) / sqrt(2))      T = (1 / omega) * (b - b*) / (i sqrt(2))

is built with that exact grouping so frequency covariance is a bitwise float
identity, not an approximate one: scaling omega rescales H by omega and T by
1/omega with no other change. Their commutator at truncation N is

    [H, T] = i hbar [b, b*] = i hbar diag(1, ..., 1, -(N-1))

so every identity holds exactly away from the last basis state and fails
loudly at the corner, which is recorded rather than hidden.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    ConfigurationError,
    DegenerateStateError,
    PreconditionError,
    ProtectedRangeError,
)
from .report import CheckReport, make_report

CITE_ALGEBRA = 'Eq B7A–C, "obey the algebra"; Eq B6, "it would be easy to verify the identity"'
CITE_HT = 'Eq 29, "comparable commutator between energy H and time T"'
CITE_OVERLAP = ('Appendix B closing, "the time representation in the function space '
                 'will be given by χ_m(e) = ⟨e|m⟩"')
CITE_SCALING = 'Eq B5A/B5B, "we may define the non-Hermitian ladder operators"'


@dataclass(frozen=True)
class LadderSystem:
    n_trunc: int
    omega: float
    hbar: float
    lowering: np.ndarray = field(repr=False)
    energy: np.ndarray = field(repr=False)
    time: np.ndarray = field(repr=False)
    number: np.ndarray = field(repr=False)

    def __post_init__(self):
        for name in ("lowering", "energy", "time", "number"):
            m = np.asarray(getattr(self, name), dtype=np.complex128).copy()
            m.flags.writeable = False
            object.__setattr__(self, name, m)


def build(n_trunc: int = 64, omega: float = 1.0, hbar: float = 1.0) -> LadderSystem:
    if n_trunc < 4:
        raise ConfigurationError("ladder truncation below 4 leaves nothing to check")
    if omega <= 0 or hbar <= 0:
        raise ConfigurationError("omega and hbar must be positive")
    b = np.diag(np.sqrt(np.arange(1, n_trunc, dtype=np.float64)), k=1).astype(np.complex128)
    bd = b.conj().T
    sym = (b + bd) / np.sqrt(2.0)
    anti = (b - bd) / (1j * np.sqrt(2.0))
    energy = omega * (hbar * sym)
    time = (1.0 / omega) * anti
    number = bd @ b + 0.5 * np.eye(n_trunc, dtype=np.complex128)
    return LadderSystem(n_trunc=n_trunc, omega=omega, hbar=hbar,
                        lowering=b, energy=energy, time=time, number=number)


def _max_abs(m: np.ndarray) -> float:
    return float(np.max(np.abs(m)))


def check_ladder_algebra(system: LadderSystem) -> CheckReport:
    """Defining relations at truncation: [b, b*] = 1 away from the corner,
    and the number operator shifts b and b* by -1 and +1 everywhere."""
    b = system.lowering
    bd = b.conj().T
    n = system.n_trunc
    eye = np.eye(n)
    comm = b @ bd - bd @ b
    protected = slice(0, n - 1)
    resid = max(
        _max_abs((comm - eye)[protected, protected]),
        _max_abs((system.number @ b - b @ system.number) + b),
        _max_abs((system.number @ bd - bd @ system.number) - bd),
    )
    return make_report("ladder_algebra", CITE_ALGEBRA, resid, 1e-12, context={
        "n_trunc": n,
        "corner_entry": float(comm[n - 1, n - 1].real),
    })


def ht_commutator_residual(system: LadderSystem) -> CheckReport:
    """[H, T] = i hbar away from the truncation corner."""
    n = system.n_trunc
    comm = system.energy @ system.time - system.time @ system.energy
    target = 1j * system.hbar * np.eye(n)
    protected = slice(0, n - 1)
    resid = _max_abs((comm - target)[protected, protected])
    return make_report("ladder_ht_commutator", CITE_HT, resid, 1e-10, context={
        "n_trunc": n,
        "omega": system.omega,
        "hbar": system.hbar,
        "corner_defect": float(np.abs(comm - target)[n - 1, n - 1]),
    })


def _phase_fixed_columns(matrix: np.ndarray) -> np.ndarray:
    """Rotate each column so its first component of significant size is real
    and positive; pins the arbitrary eigenvector phase."""
    out = matrix.copy()
    for j in range(out.shape[1]):
        col = out[:, j]
        idx = int(np.argmax(np.abs(col) > 1e-12 * np.max(np.abs(col))))
        pivot = col[idx]
        out[:, j] = col * (pivot.conjugate() / abs(pivot))
    return out


@dataclass(frozen=True)
class EigenstateRepresentation:
    times: np.ndarray
    energies: np.ndarray
    phi: np.ndarray
    chi: np.ndarray


def eigenstate_representations(system: LadderSystem, m: int) -> EigenstateRepresentation:
    """Number state m expanded over the time and energy eigenbases of the
    protected (n_trunc - 1) block: phi[j] and chi[j] are its components on
    the j-th time and energy eigenvector in ascending eigenvalue order."""
    n = system.n_trunc
    if not 0 <= m <= n - 2:
        raise ProtectedRangeError(
            f"basis index {m} outside the protected block 0..{n - 2}")
    block = slice(0, n - 1)
    times, u_t = np.linalg.eigh(system.time[block, block])
    energies, u_h = np.linalg.eigh(system.energy[block, block])
    u_t = _phase_fixed_columns(u_t)
    u_h = _phase_fixed_columns(u_h)
    return EigenstateRepresentation(
        times=times, energies=energies,
        phi=u_t[m, :].conj(), chi=u_h[m, :].conj(),
    )


def eigenstate_overlap_check(system: LadderSystem, m_max: int = 4) -> CheckReport:
    """Unitarity of the energy-time basis change on the protected block, and
    unit norm of the first few number states in both representations."""
    n = system.n_trunc
    if m_max > n - 2:
        raise ProtectedRangeError(f"m_max {m_max} outside the protected block")
    block = slice(0, n - 1)
    _, u_t = np.linalg.eigh(system.time[block, block])
    _, u_h = np.linalg.eigh(system.energy[block, block])
    overlap = u_h.conj().T @ u_t
    eye = np.eye(n - 1)
    resid = _max_abs(overlap.conj().T @ overlap - eye)
    norm_defects = []
    for m in range(m_max + 1):
        rep = eigenstate_representations(system, m)
        norm_defects.append(abs(float(np.sum(np.abs(rep.phi) ** 2)) - 1.0))
        norm_defects.append(abs(float(np.sum(np.abs(rep.chi) ** 2)) - 1.0))
    resid = max(resid, max(norm_defects))
    return make_report("ladder_eigenstate_overlap", CITE_OVERLAP, resid, 1e-10, context={
        "n_trunc": n,
        "m_max": m_max,
    })


def scaling_exact_check(n_trunc: int = 64, hbar: float = 1.0,
                        omegas: tuple[float, ...] = (0.5, 2.0, 3.0)) -> CheckReport:
    """Frequency covariance and Hermiticity as exact float identities.

    Passes only when H(omega) equals omega * H(1) and T(omega) equals
    (1/omega) * T(1) entry for entry, and both are equal to their conjugate
    transposes; any defect reports residual 1.
    """
    base = build(n_trunc, 1.0, hbar)
    ok = True
    for omega in omegas:
        sys_w = build(n_trunc, omega, hbar)
        ok = ok and np.array_equal(sys_w.energy, omega * base.energy)
        ok = ok and np.array_equal(sys_w.time, (1.0 / omega) * base.time)
        ok = ok and np.array_equal(sys_w.energy, sys_w.energy.conj().T)
        ok = ok and np.array_equal(sys_w.time, sys_w.time.conj().T)
    return make_report("ladder_scaling_exact", CITE_SCALING,
                       0.0 if ok else 1.0, 0.0, context={
                           "n_trunc": n_trunc,
                           "hbar": hbar,
                           "omegas": list(omegas),
                       })


def energy_time_product(system: LadderSystem, coeffs: np.ndarray) -> dict:
    """Spread product and commutator expectation for a state on the number
    basis. The last basis state must be unoccupied; then the second moments
    and the commutator expectation are exact despite truncation."""
    v = np.asarray(coeffs, dtype=np.complex128)
    if v.shape != (system.n_trunc,):
        raise ConfigurationError("coefficient vector length must equal n_trunc")
    if abs(v[-1]) > 0.0:
        raise PreconditionError(
            "states touching the last basis state see the truncation corner")
    norm = float(np.linalg.norm(v))
    if norm == 0.0 or not np.isfinite(norm):
        raise DegenerateStateError("cannot take moments of a zero state")
    v = v / norm
    out = {}
    for name, op in (("energy", system.energy), ("time", system.time)):
        w = op @ v
        mean = float(np.real(np.vdot(v, w)))
        second = float(np.real(np.vdot(w, w)))
        out[f"delta_{name}"] = float(np.sqrt(max(second - mean * mean, 0.0)))
    comm = system.energy @ (system.time @ v) - system.time @ (system.energy @ v)
    out["commutator_expectation"] = complex(np.vdot(v, comm))
    out["product"] = out["delta_energy"] * out["delta_time"]
    out["bound"] = 0.5 * abs(out["commutator_expectation"])
    return out
