"""Independent brute-force oracles used only by the tests.

These deliberately avoid the library's own eigensolver so every
cross-check runs along a second, unrelated route: determinants by Laplace
cofactor expansion, characteristic polynomials by the Faddeev-LeVerrier
trace recursion, eigenvalues as polynomial roots via the companion-matrix
solver in numpy.roots.
"""

from __future__ import annotations

import numpy as np


def cofactor_det(a: np.ndarray) -> complex:
    """Determinant by recursive cofactor expansion along the first row."""
    n = a.shape[0]
    if n == 1:
        return complex(a[0, 0])
    total = 0.0 + 0.0j
    for j in range(n):
        minor = np.delete(np.delete(a, 0, axis=0), j, axis=1)
        total += (-1) ** j * complex(a[0, j]) * cofactor_det(minor)
    return total


def charpoly_coeffs(a: np.ndarray) -> np.ndarray:
    """Coefficients of det(lambda I - A) by Faddeev-LeVerrier.

    Returns [1, c1, ..., cn] with p(lam) = lam^n + c1 lam^(n-1) + ... + cn.
    """
    n = a.shape[0]
    coeffs = [1.0 + 0.0j]
    m = np.zeros_like(a, dtype=complex)
    for k in range(1, n + 1):
        m = a @ (m + coeffs[-1] * np.eye(n))
        coeffs.append(complex(-np.trace(m) / k))
    return np.array(coeffs)


def hermitian_eigs_by_charpoly(a: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues of a Hermitian matrix via polynomial roots."""
    roots = np.roots(charpoly_coeffs(a))
    return np.sort(roots.real)


def random_complex(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))


def random_hermitian_np(rng: np.random.Generator, n: int) -> np.ndarray:
    g = random_complex(rng, n)
    return (g + g.conj().T) / 2


def random_unitary_np(rng: np.random.Generator, n: int) -> np.ndarray:
    q, r = np.linalg.qr(random_complex(rng, n))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_nilpotent_np(rng: np.random.Generator, n: int) -> np.ndarray:
    """Strictly upper triangular gaussian conjugated by a random unitary."""
    s = np.triu(random_complex(rng, n), 1)
    q = random_unitary_np(rng, n)
    return q @ s @ q.conj().T
