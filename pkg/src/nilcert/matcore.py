"""Dense complex square matrices and their Hermitian split.

Matrices are immutable values: every operation returns a fresh instance and
never mutates its inputs, so everything in this module is safe to call from
concurrent code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

__all__ = [
    "ComplexMatrix",
    "CartesianDecomposition",
    "OrderMismatchError",
    "DEFAULT_ZERO_TOL",
    "identity",
    "zero",
    "adjoint",
    "add",
    "subtract",
    "scale",
    "multiply",
    "trace",
    "frobenius_norm",
    "matrix_power",
    "cartesian_decompose",
    "is_zero",
    "default_zero_tol",
]

# Base coefficient of the scale-aware zero test: tol = 1e-10 * max(1, ||T||_F).
DEFAULT_ZERO_TOL = 1e-10


class OrderMismatchError(ValueError):
    """Two matrices of different orders were combined."""


class ComplexMatrix:
    """Immutable dense square complex matrix with finite 64-bit entries.

    Accepts anything ``np.array`` understands (nested lists, ndarrays,
    another ``ComplexMatrix`` via ``.array``).  Rejects non-square shapes
    and non-finite entries at construction, so downstream code never has
    to re-validate.
    """

    __slots__ = ("_a",)

    def __init__(self, entries: Iterable | np.ndarray) -> None:
        a = np.array(entries, dtype=np.complex128, copy=True)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {a.shape}")
        if a.shape[0] < 1:
            raise ValueError("matrix order must be at least 1")
        if not np.all(np.isfinite(a)):
            raise ValueError("matrix entries must be finite (no NaN/Inf)")
        a.setflags(write=False)
        self._a = a

    @property
    def n(self) -> int:
        """Matrix order."""
        return self._a.shape[0]

    @property
    def array(self) -> np.ndarray:
        """Read-only ndarray view of the entries."""
        return self._a

    def __getitem__(self, idx) -> complex:
        return complex(self._a[idx])

    def __repr__(self) -> str:
        return f"ComplexMatrix(n={self.n})"

    def __str__(self) -> str:
        return str(self._a)


@dataclass(frozen=True)
class CartesianDecomposition:
    """Hermitian pair (re_part, im_part) with T = re_part + 1j*im_part.

    Both parts are Hermitian exactly (by the symmetry of the defining
    formulas, not merely up to roundoff); the reconstruction holds to a
    few units of roundoff in ||T||_F.
    """

    re_part: ComplexMatrix
    im_part: ComplexMatrix


def identity(n: int) -> ComplexMatrix:
    return ComplexMatrix(np.eye(n, dtype=np.complex128))


def zero(n: int) -> ComplexMatrix:
    return ComplexMatrix(np.zeros((n, n), dtype=np.complex128))


def adjoint(t: ComplexMatrix) -> ComplexMatrix:
    """Conjugate transpose."""
    return ComplexMatrix(t.array.conj().T)


def add(x: ComplexMatrix, y: ComplexMatrix) -> ComplexMatrix:
    _require_same_order(x, y)
    return ComplexMatrix(x.array + y.array)


def subtract(x: ComplexMatrix, y: ComplexMatrix) -> ComplexMatrix:
    _require_same_order(x, y)
    return ComplexMatrix(x.array - y.array)


def scale(c: complex, t: ComplexMatrix) -> ComplexMatrix:
    return ComplexMatrix(complex(c) * t.array)


def multiply(x: ComplexMatrix, y: ComplexMatrix) -> ComplexMatrix:
    """Standard matrix product."""
    _require_same_order(x, y)
    return ComplexMatrix(x.array @ y.array)


def trace(t: ComplexMatrix) -> complex:
    """Sum of the diagonal entries."""
    return complex(np.trace(t.array))


def frobenius_norm(t: ComplexMatrix) -> float:
    """Square root of the sum of squared entry moduli.

    Computed with max-entry scaling so the result is zero iff every entry
    is zero: the naive sum of squares underflows once entries drop below
    about 1e-154, which matters for the power trails of quasinilpotent
    matrices.
    """
    return _frobenius(t.array)


def _frobenius(a: np.ndarray) -> float:
    m = float(np.abs(a).max()) if a.size else 0.0
    if m == 0.0:
        return 0.0
    if not np.isfinite(m):
        return float("inf")
    scaled = np.abs(a) / m
    return float(m * np.sqrt((scaled * scaled).sum()))


def matrix_power(t: ComplexMatrix, k: int) -> ComplexMatrix:
    """T**k by repeated multiplication; T**0 is the identity.

    Callers never need k beyond the matrix order, so no squaring tricks.
    """
    if k < 0:
        raise ValueError("power must be a nonnegative integer")
    acc = np.eye(t.n, dtype=np.complex128)
    for _ in range(k):
        acc = acc @ t.array
    return ComplexMatrix(acc)


def cartesian_decompose(t: ComplexMatrix) -> CartesianDecomposition:
    """Split T into Hermitian halves: (T + T*)/2 and (T - T*)/(2i)."""
    a = t.array
    ah = a.conj().T
    re_part = (a + ah) * 0.5
    im_part = (a - ah) * (-0.5j)
    return CartesianDecomposition(ComplexMatrix(re_part), ComplexMatrix(im_part))


def default_zero_tol(t: ComplexMatrix) -> float:
    """Scale-aware absolute floor: 1e-10 * max(1, ||T||_F)."""
    return DEFAULT_ZERO_TOL * max(1.0, frobenius_norm(t))


def is_zero(t: ComplexMatrix, tol: float | None = None) -> bool:
    """True iff ||T||_F <= tol (default: the scale-aware floor)."""
    if tol is None:
        tol = default_zero_tol(t)
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    return frobenius_norm(t) <= tol


def _require_same_order(x: ComplexMatrix, y: ComplexMatrix) -> None:
    if x.n != y.n:
        raise OrderMismatchError(f"order mismatch: {x.n} vs {y.n}")
