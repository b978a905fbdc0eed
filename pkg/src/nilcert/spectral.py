"""Hermitian eigenvalues, definiteness classes, and spectrum symmetry.

The eigensolver is a cyclic-by-rows Jacobi iteration with complex plane
rotations.  Each rotation U acting on the (p, q) plane factors as a phase
times a real Givens rotation,

    U = [[c, s], [-s*conj(f), c*conj(f)]],   f = a_pq / |a_pq|,

chosen to annihilate the (p, q) entry of U* H U.  Off-diagonal mass is
strictly non-increasing, convergence is quadratic once sweeps settle, and
all iterates stay Hermitian, which makes the method very accurate at the
matrix orders this package targets (a few hundred at most).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .matcore import ComplexMatrix, frobenius_norm, _frobenius

__all__ = [
    "SpectrumReport",
    "DefinitenessClass",
    "SymmetryReport",
    "NonHermitianError",
    "JacobiConvergenceError",
    "hermitian_eigenvalues",
    "classify_definiteness",
    "spectrum_symmetry",
    "eigenvalue_clusters",
    "zero_eigenvalue_multiplicity",
    "spectral_norm",
    "HERMITIAN_INPUT_TOL",
    "JACOBI_CONVERGENCE_TOL",
    "JACOBI_MAX_SWEEPS",
    "DEFAULT_SYMMETRY_TOL",
    "DEFAULT_CLASSIFY_TOL",
]

# Input validation: anything less Hermitian than this signals a caller bug,
# since the Cartesian split produces exactly Hermitian matrices.
HERMITIAN_INPUT_TOL = 1e-10

# Stop when the off-diagonal Frobenius norm drops below
# JACOBI_CONVERGENCE_TOL * max(1, ||H||_F); give up after JACOBI_MAX_SWEEPS.
JACOBI_CONVERGENCE_TOL = 1e-13
JACOBI_MAX_SWEEPS = 60

# Default resolution at which two eigenvalues count as equal (base
# coefficient of a max(1, ||H||_F) scale factor).
DEFAULT_SYMMETRY_TOL = 1e-8

# Default base tolerance for sign classification of eigenvalues.
DEFAULT_CLASSIFY_TOL = 1e-10


class NonHermitianError(ValueError):
    """Input matrix is not Hermitian within tolerance.

    Carries the Frobenius norm of H - H* in ``defect``.
    """

    def __init__(self, defect: float, tol: float):
        super().__init__(
            f"matrix is not Hermitian: ||H - H*||_F = {defect:.3e} exceeds {tol:.3e}"
        )
        self.defect = defect
        self.tol = tol


class JacobiConvergenceError(RuntimeError):
    """Jacobi sweeps exceeded the hard cap without converging."""


@dataclass(frozen=True)
class SpectrumReport:
    """Real eigenvalues of a Hermitian matrix, ascending.

    ``tol`` is the resolution at which two eigenvalues are considered
    equal by downstream symmetry and multiplicity analysis.
    """

    eigenvalues: tuple[float, ...]
    order: int
    tol: float

    @property
    def min(self) -> float:
        return self.eigenvalues[0]

    @property
    def max(self) -> float:
        return self.eigenvalues[-1]


class DefinitenessClass(enum.Enum):
    """Strongest applicable sign class of a Hermitian spectrum."""

    ZERO = "Zero"
    POSITIVE_DEFINITE = "PositiveDefinite"
    POSITIVE_SEMIDEFINITE = "PositiveSemidefinite"
    NEGATIVE_DEFINITE = "NegativeDefinite"
    NEGATIVE_SEMIDEFINITE = "NegativeSemidefinite"
    INDEFINITE = "Indefinite"

    @property
    def is_positive_semidefinite(self) -> bool:
        """PSD in the inclusive sense (Zero and PD count)."""
        return self in (
            DefinitenessClass.ZERO,
            DefinitenessClass.POSITIVE_DEFINITE,
            DefinitenessClass.POSITIVE_SEMIDEFINITE,
        )

    @property
    def is_negative_semidefinite(self) -> bool:
        return self in (
            DefinitenessClass.ZERO,
            DefinitenessClass.NEGATIVE_DEFINITE,
            DefinitenessClass.NEGATIVE_SEMIDEFINITE,
        )


@dataclass(frozen=True)
class SymmetryReport:
    """What the spectrum shares with its negation.

    ``matched_pairs`` lists values lam >= 0 such that both lam and -lam
    occur in the spectrum within ``tol`` (multiset semantics: each
    eigenvalue occurrence is consumed at most once; a zero eigenvalue is
    listed once as exactly 0.0).
    """

    matched_pairs: tuple[float, ...]
    tol: float

    @property
    def intersection_is_empty(self) -> bool:
        return len(self.matched_pairs) == 0

    @property
    def intersection_is_subset_of_zero(self) -> bool:
        return all(v == 0.0 for v in self.matched_pairs)

    @property
    def is_exactly_zero_singleton(self) -> bool:
        """Intersection equals {0}: nonempty and containing only zero."""
        return self.intersection_is_subset_of_zero and not self.intersection_is_empty

    def nonzero_pairs(self) -> tuple[float, ...]:
        return tuple(v for v in self.matched_pairs if v > 0.0)


def _validate_hermitian(h: ComplexMatrix) -> np.ndarray:
    a = h.array
    defect = _frobenius(a - a.conj().T)
    tol = HERMITIAN_INPUT_TOL * max(1.0, _frobenius(a))
    if defect > tol:
        raise NonHermitianError(defect, tol)
    # Symmetrize exactly; eigenvalues move by at most defect/2.
    c = (a + a.conj().T) * 0.5
    np.fill_diagonal(c, c.diagonal().real)
    return c


def _jacobi_eigensystem(h: ComplexMatrix) -> tuple[np.ndarray, np.ndarray, int]:
    """Full eigensystem of a Hermitian matrix by cyclic Jacobi.

    Returns (eigenvalues ascending, unitary Q with H ~= Q diag(w) Q*,
    number of sweeps used).  Internal: eigenvectors are not part of the
    public surface, but the accumulated rotations back the reconstruction
    self-checks.
    """
    c = _validate_hermitian(h)
    n = c.shape[0]
    q = np.eye(n, dtype=np.complex128)
    scale = max(1.0, _frobenius(c))
    conv_tol = JACOBI_CONVERGENCE_TOL * scale
    # Skipping rotations below this per-element threshold still guarantees
    # the off-diagonal norm bound: (n^2 - n) * (conv/2n)^2 < conv^2.
    rot_tol = conv_tol / (2.0 * n)

    sweeps = 0
    if n == 1:
        return c.real.diagonal().copy(), q, 0

    for sweeps in range(1, JACOBI_MAX_SWEEPS + 1):
        if _offdiag_norm(c) <= conv_tol:
            sweeps -= 1
            break
        rotated = False
        for p in range(n - 1):
            for qq in range(p + 1, n):
                apq = c[p, qq]
                r = abs(apq)
                if r <= rot_tol:
                    continue
                rotated = True
                f = apq / r
                app = c[p, p].real
                aqq = c[qq, qq].real
                theta = (aqq - app) / (2.0 * r)
                t = math.copysign(1.0, theta) / (
                    abs(theta) + math.sqrt(1.0 + theta * theta)
                )
                cc = 1.0 / math.sqrt(1.0 + t * t)
                s = t * cc

                # Columns: [col_p, col_q] <- [col_p, col_q] @ U
                colp = c[:, p].copy()
                colq = c[:, qq] * f.conjugate()
                c[:, p] = cc * colp - s * colq
                c[:, qq] = s * colp + cc * colq
                # Rows: [row_p; row_q] <- U* @ [row_p; row_q]
                rowp = c[p, :].copy()
                rowq = c[qq, :] * f
                c[p, :] = cc * rowp - s * rowq
                c[qq, :] = s * rowp + cc * rowq
                # Pin the algebraically exact values.
                c[p, qq] = 0.0
                c[qq, p] = 0.0
                c[p, p] = app - t * r
                c[qq, qq] = aqq + t * r

                qcolp = q[:, p].copy()
                qcolq = q[:, qq] * f.conjugate()
                q[:, p] = cc * qcolp - s * qcolq
                q[:, qq] = s * qcolp + cc * qcolq
        if not rotated:
            # Every off-diagonal element fell under rot_tol, which already
            # implies the convergence bound.
            break
    else:
        raise JacobiConvergenceError(
            f"no convergence after {JACOBI_MAX_SWEEPS} sweeps "
            f"(off-diagonal norm {_offdiag_norm(c):.3e}, target {conv_tol:.3e})"
        )

    w = c.diagonal().real.copy()
    idx = np.argsort(w, kind="stable")
    return w[idx], q[:, idx], sweeps


def _offdiag_norm(c: np.ndarray) -> float:
    off = c - np.diag(c.diagonal())
    return _frobenius(off)


def hermitian_eigenvalues(h: ComplexMatrix, tol: float | None = None) -> SpectrumReport:
    """Eigenvalues of a Hermitian matrix, ascending.

    ``tol`` is recorded in the report as the equality resolution for
    downstream symmetry/multiplicity analysis; it defaults to
    1e-8 * max(1, ||H||_F).  Raises NonHermitianError for inputs whose
    Hermitian defect exceeds 1e-10 * max(1, ||H||_F).
    """
    if tol is None:
        tol = DEFAULT_SYMMETRY_TOL * max(1.0, frobenius_norm(h))
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    w, _, _ = _jacobi_eigensystem(h)
    return SpectrumReport(eigenvalues=tuple(float(x) for x in w), order=h.n, tol=tol)


def classify_definiteness(
    spec: SpectrumReport, tol: float | None = None
) -> DefinitenessClass:
    """Strongest sign class supported by the spectrum at resolution tol.

    Zero beats definite beats semidefinite; Indefinite when eigenvalues
    stick out beyond tol on both sides.  Default tol is
    1e-10 * max(1, |lambda|_max).
    """
    if tol is None:
        tol = DEFAULT_CLASSIFY_TOL * max(1.0, abs(spec.min), abs(spec.max))
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    lo, hi = spec.min, spec.max
    if max(abs(lo), abs(hi)) <= tol:
        return DefinitenessClass.ZERO
    if lo > tol:
        return DefinitenessClass.POSITIVE_DEFINITE
    if lo >= -tol:
        return DefinitenessClass.POSITIVE_SEMIDEFINITE
    if hi < -tol:
        return DefinitenessClass.NEGATIVE_DEFINITE
    if hi <= tol:
        return DefinitenessClass.NEGATIVE_SEMIDEFINITE
    return DefinitenessClass.INDEFINITE


def spectrum_symmetry(spec: SpectrumReport, tol: float | None = None) -> SymmetryReport:
    """Match the sorted spectrum against its negation.

    Greedy two-pointer pass over the ascending eigenvalues: the most
    negative unconsumed value pairs with the most positive one when their
    sum is within tol; otherwise the value further from zero is dropped.
    Each occurrence is consumed at most once.  All matched values within
    tol of zero collapse to a single exact 0.0 entry.
    """
    if tol is None:
        tol = spec.tol
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    ev = spec.eigenvalues
    i, j = 0, len(ev) - 1
    pairs: list[float] = []
    saw_zero = False
    while i < j:
        s = ev[i] + ev[j]
        if abs(s) <= tol:
            lam = 0.5 * (ev[j] - ev[i])
            if lam <= tol:
                saw_zero = True
            else:
                pairs.append(lam)
            i += 1
            j -= 1
        elif s < 0.0:
            i += 1
        else:
            j -= 1
    if i == j and abs(2.0 * ev[i]) <= tol:
        saw_zero = True
    if saw_zero:
        pairs.append(0.0)
    pairs.sort()
    return SymmetryReport(matched_pairs=tuple(pairs), tol=tol)


def eigenvalue_clusters(
    spec: SpectrumReport, tol: float | None = None
) -> tuple[tuple[float, int], ...]:
    """Cluster the sorted eigenvalues greedily left to right.

    A value joins the current cluster while its gap from the previous
    member is at most tol.  Returns (cluster mean, count) pairs; the
    counts are the multiplicities at resolution tol.
    """
    if tol is None:
        tol = spec.tol
    ev = spec.eigenvalues
    clusters: list[tuple[float, int]] = []
    start = 0
    for k in range(1, len(ev) + 1):
        if k == len(ev) or ev[k] - ev[k - 1] > tol:
            members = ev[start:k]
            clusters.append((sum(members) / len(members), len(members)))
            start = k
    return tuple(clusters)


def zero_eigenvalue_multiplicity(spec: SpectrumReport, tol: float | None = None) -> int:
    """Multiplicity of the eigenvalue 0 counted by clustering within tol."""
    if tol is None:
        tol = spec.tol
    for mean, count in eigenvalue_clusters(spec, tol):
        if abs(mean) <= tol:
            return count
    return 0


def spectral_norm(t: ComplexMatrix) -> float:
    """Operator 2-norm: sqrt of the top eigenvalue of T* T."""
    a = t.array
    gram = a.conj().T @ a
    w, _, _ = _jacobi_eigensystem(ComplexMatrix(gram))
    top = float(w[-1])
    return math.sqrt(top) if top > 0.0 else 0.0
