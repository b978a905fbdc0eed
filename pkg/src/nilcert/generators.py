"""Seeded, reproducible random matrices for the property suites.

The pseudo-random source is pinned so that test corpora can be replayed
bit-for-bit from a 64-bit seed, here and in any other implementation that
follows the same recipe:

* state machine: xoshiro256** (Blackman & Vigna), state seeded by four
  successive outputs of splitmix64 applied to the seed;
* uniforms: u = ((next64() >> 11) + 1) * 2**-53, so u lies in (0, 1];
* gaussians: Box-Muller on consecutive uniforms (u1, u2),
  z0 = sqrt(-2 ln u1) * cos(2 pi u2), z1 = ... * sin(...), z1 cached;
* complex gaussian: real part drawn before imaginary part;
* matrices: entries drawn in row-major order.

A batch of trials derives the seed of trial k as
``derive_seed(base_seed, k)`` (splitmix64 mixing, below), so trials are
independent of execution order and safe to run concurrently.  A single
generator instance, however, must not be shared across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .matcore import ComplexMatrix, _frobenius

__all__ = [
    "GeneratorConfig",
    "GaussianStream",
    "DegenerateDrawError",
    "RNG_ALGORITHM",
    "derive_seed",
    "random_unitary",
    "random_nilpotent",
    "random_hermitian",
    "random_psd",
    "random_accretive",
]

# Recorded in CLI report headers for reproducibility.
RNG_ALGORITHM = "xoshiro256** seeded via splitmix64; Box-Muller gaussians"

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_TWO_PI = 2.0 * math.pi


class DegenerateDrawError(RuntimeError):
    """Repeated random draws stayed numerically rank-deficient."""


def _splitmix64_mix(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return z ^ (z >> 31)


def derive_seed(base_seed: int, index: int) -> int:
    """Per-trial sub-seed: splitmix64 mix of base advanced by index + 1 steps.

    Deterministic and documented so external tooling can reproduce any
    single failing trial from (base seed, trial index).
    """
    if index < 0:
        raise ValueError("trial index must be nonnegative")
    z = (base_seed + (index + 1) * _GOLDEN) & _MASK64
    return _splitmix64_mix(z)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK64


@dataclass(frozen=True)
class GeneratorConfig:
    """Identity of one random draw: equal configs give bitwise-equal output."""

    seed: int
    order: int
    entry_scale: float = 1.0

    def __post_init__(self) -> None:
        if not 0 <= self.seed <= _MASK64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if self.order < 1:
            raise ValueError("order must be positive")
        if not (self.entry_scale > 0 and math.isfinite(self.entry_scale)):
            raise ValueError("entry_scale must be positive and finite")


class GaussianStream:
    """xoshiro256** stream with Box-Muller gaussian output.

    Pure Python on 64-bit integer state; see the module docstring for the
    exact algorithm identity.  Not safe for concurrent use by multiple
    threads; spawn one stream per trial instead.
    """

    __slots__ = ("_s0", "_s1", "_s2", "_s3", "_cached")

    def __init__(self, seed: int) -> None:
        z = seed & _MASK64
        state = []
        for _ in range(4):
            z = (z + _GOLDEN) & _MASK64
            state.append(_splitmix64_mix(z))
        if not any(state):  # all-zero state is the one forbidden point
            state[0] = 1
        self._s0, self._s1, self._s2, self._s3 = state
        self._cached: float | None = None

    def next_u64(self) -> int:
        s0, s1, s2, s3 = self._s0, self._s1, self._s2, self._s3
        result = (_rotl((s1 * 5) & _MASK64, 7) * 9) & _MASK64
        t = (s1 << 17) & _MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self._s0, self._s1, self._s2, self._s3 = s0, s1, s2, s3
        return result

    def uniform(self) -> float:
        """Uniform double in (0, 1] from the top 53 bits."""
        return ((self.next_u64() >> 11) + 1) * (2.0**-53)

    def gaussian(self) -> float:
        if self._cached is not None:
            z = self._cached
            self._cached = None
            return z
        u1 = self.uniform()
        u2 = self.uniform()
        radius = math.sqrt(-2.0 * math.log(u1))
        angle = _TWO_PI * u2
        self._cached = radius * math.sin(angle)
        return radius * math.cos(angle)

    def complex_gaussian(self) -> complex:
        re = self.gaussian()
        im = self.gaussian()
        return complex(re, im)

    def ginibre(self, n: int, scale: float = 1.0) -> np.ndarray:
        """n x n matrix of independent scaled complex gaussians, row-major."""
        out = np.empty((n, n), dtype=np.complex128)
        for i in range(n):
            for j in range(n):
                out[i, j] = scale * self.complex_gaussian()
        return out


def _orthonormalize(g: np.ndarray) -> np.ndarray | None:
    """Modified Gram-Schmidt with one re-orthogonalization pass.

    Returns None when a column collapses, signalling a degenerate draw.
    """
    n = g.shape[0]
    q = g.astype(np.complex128).copy()
    for j in range(n):
        v = q[:, j].copy()
        for _ in range(2):
            for i in range(j):
                v -= (q[:, i].conj() @ v) * q[:, i]
        nv = float(np.linalg.norm(v))
        if nv <= 1e-8 * math.sqrt(n):
            return None
        q[:, j] = v / nv
    return q


def _unitary_from_stream(stream: GaussianStream, n: int) -> np.ndarray:
    for _ in range(8):
        q = _orthonormalize(stream.ginibre(n))
        if q is None:
            continue
        defect = _frobenius(q.conj().T @ q - np.eye(n))
        if defect <= 1e-12 * n:
            return q
    raise DegenerateDrawError("failed to draw a unitary in 8 attempts")


def random_unitary(cfg: GeneratorConfig) -> ComplexMatrix:
    """Unitary Q with ||Q* Q - I||_F <= 1e-12 n, from orthonormalized gaussians."""
    return ComplexMatrix(_unitary_from_stream(GaussianStream(cfg.seed), cfg.order))


def random_nilpotent(
    cfg: GeneratorConfig, index_lower_bound: int | None = None
) -> ComplexMatrix:
    """Dense nonzero nilpotent: Q S Q* for strictly upper triangular S.

    Every nilpotent matrix is unitarily similar to a strictly triangular
    one (Schur), so conjugating gaussian-filled S by a random unitary Q
    reaches a representative population while keeping the nilpotency
    exact up to rounding.  With ``index_lower_bound = m`` the first m - 1
    superdiagonal entries of S are forced away from zero, which makes the
    superdiagonal chain product nonzero and hence the index at least m
    (exactly m when m equals the order).

    Requires order >= 2: the only 1 x 1 nilpotent is zero.
    """
    n = cfg.order
    if n < 2:
        raise ValueError("nonzero nilpotent matrices need order >= 2")
    if index_lower_bound is not None and not 2 <= index_lower_bound <= n:
        raise ValueError("index_lower_bound must lie in [2, order]")
    stream = GaussianStream(cfg.seed)
    s = np.zeros((n, n), dtype=np.complex128)
    for i in range(n):
        for j in range(i + 1, n):
            s[i, j] = cfg.entry_scale * stream.complex_gaussian()
    if index_lower_bound is not None:
        floor = 0.1 * cfg.entry_scale
        for i in range(index_lower_bound - 1):
            while abs(s[i, i + 1]) < floor:
                s[i, i + 1] = cfg.entry_scale * stream.complex_gaussian()
    q = _unitary_from_stream(stream, n)
    return ComplexMatrix(q @ s @ q.conj().T)


def random_hermitian(cfg: GeneratorConfig) -> ComplexMatrix:
    """Hermitian (G + G*)/2 from a gaussian draw G."""
    g = GaussianStream(cfg.seed).ginibre(cfg.order, cfg.entry_scale)
    return ComplexMatrix((g + g.conj().T) * 0.5)


def random_psd(cfg: GeneratorConfig) -> ComplexMatrix:
    """Positive semidefinite Gram matrix G* G."""
    g = GaussianStream(cfg.seed).ginibre(cfg.order, cfg.entry_scale)
    return ComplexMatrix(g.conj().T @ g)


def random_accretive(cfg: GeneratorConfig) -> ComplexMatrix:
    """Matrix with positive semidefinite real part: G* G + i (H + H*)/2.

    Both draws come from the same stream (Gram factor first), so the
    output is a pure function of the config.
    """
    stream = GaussianStream(cfg.seed)
    g = stream.ginibre(cfg.order, cfg.entry_scale)
    h = stream.ginibre(cfg.order, cfg.entry_scale)
    p = g.conj().T @ g
    herm = (h + h.conj().T) * 0.5
    return ComplexMatrix(p + 1j * herm)
