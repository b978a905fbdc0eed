"""Trapezoid discretization of the cumulative-integral (Volterra) operator.

On grid points x_i = i/n, i = 1..n with h = 1/n, the composite trapezoid
rule for f |-> integral_0^x f gives the lower-triangular matrix

    V[i][j] = h    for j < i,
    V[i][j] = h/2  for j = i,
    V[i][j] = 0    for j > i.

Two structural facts make this scheme the right one here.  First,
Re V = (h/2) * J with J the all-ones matrix, a rank-one PSD matrix with
spectrum {0 (n-1 times), 1/2}; the certificate of non-nilpotence is thus
analytic, not just numeric.  Second, the diagonal h/2 is positive, so no
power of V ever vanishes and the spectral radius is exactly 1/(2n), which
shrinks with n while nilpotence never occurs: quasinilpotence emerges
only in the limit.  A left-endpoint rule would instead produce a strictly
triangular, genuinely nilpotent matrix and misrepresent the operator.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matcore import ComplexMatrix
from .nilpotency import gelfand_sequence, nilpotency_index
from .theorems import Certificate, non_nilpotence_certificate

__all__ = ["VolterraReport", "volterra_matrix", "volterra_report"]


@dataclass(frozen=True)
class VolterraReport:
    """Quasinilpotence indicator bundle for the order-n discretization.

    ``spectral_radius_exact`` is read off the triangular diagonal, 1/(2n).
    ``gelfand_tail`` is the root-power norm at k = 2n (or at the last
    trustworthy k when the trail underflows first, see
    ``gelfand_truncated_at``).  The tail hovers above the spectral radius
    and shrinks with n, while ``nilpotent`` stays False at every n: the
    spectrum collapses toward {0} only in the limit.
    """

    n: int
    min_eig_re: float
    max_eig_re: float
    spectral_radius_exact: float
    gelfand_tail: float
    gelfand_truncated_at: int | None
    nilpotent: bool
    certificate_present: bool
    certificate: Certificate | None


def volterra_matrix(n: int) -> ComplexMatrix:
    """Order-n trapezoid discretization; lower triangular, diagonal 1/(2n)."""
    if n < 1:
        raise ValueError("grid size must be positive")
    h = 1.0 / n
    v = np.tril(np.full((n, n), h, dtype=np.complex128), -1)
    np.fill_diagonal(v, h / 2.0)
    return ComplexMatrix(v)


def volterra_report(n: int) -> VolterraReport:
    """Assemble the non-nilpotence and quasinilpotence evidence at order n.

    The nilpotency test runs with tol = 0 (exact vanishing): the powers
    of V are triangular with exactly positive diagonals until far beyond
    k = n, so thresholded norms would be misled by their quasinilpotent
    collapse, while the exact test cannot be.  The real-part spectrum is
    taken from the certificate's witness, which is the same eigensolve.
    """
    v = volterra_matrix(n)
    cert = non_nilpotence_certificate(v)
    if cert is None:  # cannot happen for this scheme; keep the report honest
        from .matcore import cartesian_decompose
        from .spectral import hermitian_eigenvalues

        spec = hermitian_eigenvalues(cartesian_decompose(v).re_part)
    else:
        spec = cert.witness_spectrum
    nil = nilpotency_index(v, tol=0.0)
    gelfand = gelfand_sequence(v, 2 * n)
    return VolterraReport(
        n=n,
        min_eig_re=spec.min,
        max_eig_re=spec.max,
        spectral_radius_exact=1.0 / (2.0 * n),
        gelfand_tail=gelfand.tail,
        gelfand_truncated_at=gelfand.truncated_at,
        nilpotent=nil.is_nilpotent,
        certificate_present=cert is not None,
        certificate=cert,
    )
