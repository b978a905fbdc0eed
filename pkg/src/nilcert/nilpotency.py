"""Nilpotency index, normality defect, and power-norm decay diagnostics.

Powers are always formed by direct multiplication, never through an
eigendecomposition: nilpotent matrices are maximally non-normal, so only
the product route is trustworthy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .matcore import ComplexMatrix, frobenius_norm, _frobenius
from .spectral import spectral_norm

__all__ = [
    "NilpotencyReport",
    "NormalityReport",
    "GelfandSequence",
    "nilpotency_index",
    "is_normal",
    "gelfand_sequence",
    "norm_power_defect",
    "DEFAULT_NILPOTENCY_TOL",
    "DEFAULT_NORMALITY_TOL",
]

# Base coefficient of the per-power threshold ||T^k||_F <= tol * max(1, ||T||_F)^k.
# ||T^k|| can legitimately scale like ||T||^k, so a flat threshold would
# misclassify large-norm nilpotents.
DEFAULT_NILPOTENCY_TOL = 1e-10

DEFAULT_NORMALITY_TOL = 1e-10

# Power norms entering this range are dominated by gradual underflow and no
# longer carry information; see GelfandSequence.truncated_at.
_UNDERFLOW_GUARD = 1e-280

# An exactly zero power is trusted as a structural collapse only when the
# submultiplicative bound ||T^(k-1)|| * ||T|| sits safely above the
# representable range; otherwise the zero may be an underflow artifact.
_ZERO_PROVENANCE_FLOOR = 1e-300


@dataclass(frozen=True)
class NilpotencyReport:
    """Smallest k with T^k = 0 within tolerance, plus the full norm trail.

    ``index`` is absent when no power up to the matrix order vanishes
    (by Cayley-Hamilton a nilpotent matrix of order n satisfies T^n = 0,
    so stopping at n loses nothing).  ``power_norms[k-1]`` is
    ||T^k||_F for k = 1..n.  ``tol_used`` is the threshold applied at the
    reported index (at k = n when absent); with ``tol = 0`` the test is
    exact and immune to the near-nilpotent gray zone.
    """

    index: int | None
    power_norms: tuple[float, ...]
    tol_used: float

    @property
    def is_nilpotent(self) -> bool:
        return self.index is not None


class NormalityReport(NamedTuple):
    """Commutator test: defect = ||T T* - T* T||_F."""

    is_normal: bool
    defect: float


@dataclass(frozen=True)
class GelfandSequence:
    """Root-power norms g_k = ||T^k||_F ** (1/k) for k = 1..K.

    The limit of g_k is the spectral radius, which makes the tail a
    practical quasinilpotence indicator.  When the power norms fall into
    the gradual-underflow range (or overflow), the sequence stops early
    and ``truncated_at`` records the last trustworthy k; otherwise it is
    None.  For an exactly nilpotent matrix the values hit 0.0 at the
    nilpotency index and stay there, with no truncation.
    """

    values: tuple[float, ...]
    requested_length: int
    truncated_at: int | None

    @property
    def tail(self) -> float:
        return self.values[-1]


def nilpotency_index(t: ComplexMatrix, tol: float | None = None) -> NilpotencyReport:
    """Find the smallest k <= n with ||T^k||_F below the per-power threshold.

    The threshold at power k is ``tol * max(1, ||T||_F)**k`` with tol
    defaulting to 1e-10.  Pass ``tol=0`` for the exact test (power must be
    identically zero), which is the right semantics for matrices whose
    powers decay without ever vanishing.
    """
    if tol is None:
        tol = DEFAULT_NILPOTENCY_TOL
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    n = t.n
    base = max(1.0, frobenius_norm(t))
    a = t.array
    power = a.copy()
    norms: list[float] = []
    index: int | None = None
    threshold_at_index: float | None = None
    for k in range(1, n + 1):
        nk = _frobenius(power)
        norms.append(nk)
        threshold = tol * base**k
        if index is None and nk <= threshold:
            index = k
            threshold_at_index = threshold
        if k < n:
            with np.errstate(over="ignore", under="ignore", invalid="ignore"):
                power = power @ a
    tol_used = threshold_at_index if threshold_at_index is not None else tol * base**n
    return NilpotencyReport(index=index, power_norms=tuple(norms), tol_used=tol_used)


def is_normal(t: ComplexMatrix, tol: float | None = None) -> NormalityReport:
    """Commutator test TT* = T*T, scale-aware.

    True iff ||T T* - T* T||_F <= tol * max(1, ||T||_F^2); the defect is
    returned alongside so callers can judge borderline cases themselves.
    """
    if tol is None:
        tol = DEFAULT_NORMALITY_TOL
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    a = t.array
    ah = a.conj().T
    defect = _frobenius(a @ ah - ah @ a)
    bound = tol * max(1.0, frobenius_norm(t) ** 2)
    return NormalityReport(is_normal=defect <= bound, defect=defect)


def gelfand_sequence(t: ComplexMatrix, length: int) -> GelfandSequence:
    """Compute g_k = ||T^k||_F ** (1/k) for k = 1..length.

    Stops early, recording ``truncated_at``, when the power norms leave
    the trustworthy floating-point range: overflow, decay into the
    deep-subnormal region, or an exact zero whose submultiplicative bound
    ||T^(k-1)|| * ||T|| already sits below the representable range (an
    underflow artifact, not a collapse).  A genuine jump to the exact
    zero matrix from healthy norms is the nilpotent collapse and is not
    truncation; zeros are then filled in for the remaining k.
    """
    if length < 1:
        raise ValueError("sequence length must be positive")
    a = t.array
    t_norm = _frobenius(a)
    if t_norm == 0.0:
        return GelfandSequence(
            values=(0.0,) * length, requested_length=length, truncated_at=None
        )
    power = a.copy()
    values: list[float] = []
    truncated_at: int | None = None
    prev_norm = 1.0
    for k in range(1, length + 1):
        nk = _frobenius(power)
        if not math.isfinite(nk):
            truncated_at = k - 1
            break
        if nk == 0.0:
            if prev_norm <= _ZERO_PROVENANCE_FLOOR / t_norm:
                # the zero could be an underflow artifact; refuse to call it
                truncated_at = k - 1
                break
            values.append(0.0)
            values.extend(0.0 for _ in range(length - k))
            break
        values.append(nk ** (1.0 / k))
        if nk <= _UNDERFLOW_GUARD:
            truncated_at = k
            break
        prev_norm = nk
        if k < length:
            # overflow/underflow are expected near the range limits and are
            # caught by the checks above on the next pass
            with np.errstate(over="ignore", under="ignore", invalid="ignore"):
                power = power @ a
    if truncated_at is not None and not values:
        raise ValueError("power norms unusable from k = 1; matrix out of range")
    return GelfandSequence(
        values=tuple(values), requested_length=length, truncated_at=truncated_at
    )


def norm_power_defect(t: ComplexMatrix, k: int) -> float:
    """Deviation from the norm-power identity: | ||T^k|| - ||T||^k |.

    Uses the operator 2-norm on both sides; the identity characterizes
    normal matrices and fails for non-normal ones (for the 2x2 nilpotent
    Jordan block at k = 2 the defect is exactly 1).
    """
    if k < 1:
        raise ValueError("power must be a positive integer")
    a = t.array
    power = a.copy()
    for _ in range(k - 1):
        power = power @ a
    return abs(spectral_norm(ComplexMatrix(power)) - spectral_norm(t) ** k)
