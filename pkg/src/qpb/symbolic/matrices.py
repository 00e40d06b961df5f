"""Truncated matrix realizations of operator polynomials.

The letters act on the first n_trunc number states through the ladder matrix
b with b[m-1, m] = sqrt(m):

    X = sqrt(hbar/2) (b + b*)          P = i sqrt(hbar/2) (b* - b)
    H = omega hbar (b + b*) / sqrt(2)  T = (b - b*) / (i sqrt(2) omega)

Both pairs satisfy [A, B] = i hbar on every basis state except the last, so a
product of words of total degree d is exact on the upper-left
(n_trunc - d) block; outside it the truncation leaks in.
"""

from __future__ import annotations

import numpy as np

from ..errors import ConfigurationError
from .poly import OperatorPoly


def lowering_matrix(n_trunc: int) -> np.ndarray:
    if n_trunc < 2:
        raise ConfigurationError("matrix realization needs at least 2 basis states")
    return np.diag(np.sqrt(np.arange(1, n_trunc, dtype=np.float64)), k=1).astype(np.complex128)


def letter_matrices(n_trunc: int, hbar_value: float, omega: float = 1.0) -> dict[str, np.ndarray]:
    if hbar_value <= 0:
        raise ConfigurationError("hbar_value must be positive")
    if omega <= 0:
        raise ConfigurationError("omega must be positive")
    b = lowering_matrix(n_trunc)
    bd = b.conj().T
    sym = (b + bd) / np.sqrt(2.0)
    anti = (b - bd) / (1j * np.sqrt(2.0))
    root = np.sqrt(hbar_value / 2.0)
    return {
        "X": root * (b + bd),
        "P": 1j * root * (bd - b),
        "H": omega * (hbar_value * sym),
        "T": (1.0 / omega) * anti,
    }


def matrix_realize(p: OperatorPoly, n_trunc: int, hbar_value: float,
                   omega: float = 1.0) -> np.ndarray:
    """Sum of word products with coefficients evaluated at hbar_value.

    Trustworthy only on protected_slice(n_trunc, p.total_degree()); rows and
    columns beyond it carry truncation error.
    """
    letters = letter_matrices(n_trunc, hbar_value, omega)
    eye = np.eye(n_trunc, dtype=np.complex128)
    total = np.zeros((n_trunc, n_trunc), dtype=np.complex128)
    for word, coeff in p.terms():
        m = eye
        for letter in word:
            m = m @ letters[letter]
        total += coeff.evaluate(hbar_value) * m
    return total


def protected_slice(n_trunc: int, degree: int) -> slice:
    """Index range of the block a degree `degree` realization represents
    exactly at truncation n_trunc."""
    keep = n_trunc - degree
    if keep <= 0:
        raise ConfigurationError(
            f"degree {degree} leaves no protected block at truncation {n_trunc}")
    return slice(0, keep)


def protected_block(matrix: np.ndarray, degree: int) -> np.ndarray:
    s = protected_slice(matrix.shape[0], degree)
    return matrix[s, s]
