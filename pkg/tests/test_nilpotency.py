import math

import numpy as np
import pytest

from nilcert.matcore import ComplexMatrix, frobenius_norm, identity
from nilcert.nilpotency import (
    gelfand_sequence,
    is_normal,
    nilpotency_index,
    norm_power_defect,
)
from nilcert.volterra import volterra_matrix
from nilcert import gallery

from oracles import random_nilpotent_np, random_unitary_np


class TestNilpotencyIndex:
    def test_jordan2(self):
        assert nilpotency_index(gallery.get("jordan2").matrix).index == 2

    def test_example_pp(self):
        assert nilpotency_index(gallery.get("example_pp").matrix).index == 3

    def test_strict_upper4(self):
        report = nilpotency_index(gallery.get("strict_upper4").matrix)
        assert report.index == 4
        assert report.power_norms[2] > report.tol_used  # T^3 still nonzero

    def test_identity_has_no_index(self):
        report = nilpotency_index(identity(2))
        assert report.index is None
        assert not report.is_nilpotent
        assert len(report.power_norms) == 2

    def test_zero_matrix_has_index_one(self):
        assert nilpotency_index(ComplexMatrix(np.zeros((3, 3)))).index == 1

    def test_trail_entries_are_power_norms(self):
        t = gallery.get("strict_upper4").matrix
        report = nilpotency_index(t)
        a = t.array
        acc = a.copy()
        for k in range(1, 5):
            assert report.power_norms[k - 1] == pytest.approx(
                np.linalg.norm(acc), rel=1e-12
            )
            acc = acc @ a

    def test_exact_tolerance_distinguishes_quasinilpotent_decay(self):
        # power norms of this matrix dive below any fixed threshold while
        # staying strictly positive; tol=0 must see through that
        v = volterra_matrix(64)
        assert nilpotency_index(v, tol=0.0).index is None
        assert nilpotency_index(v).index is not None  # default threshold is fooled

    def test_scale_aware_threshold(self):
        # 2x2 jordan block scaled huge: ||T^1|| = 1e8 but T^2 = 0
        t = ComplexMatrix([[0, 1e8], [0, 0]])
        assert nilpotency_index(t).index == 2

    def test_strictly_upper_triangular_always_indexed(self):
        rng = np.random.default_rng(17)
        for _ in range(100):
            n = int(rng.integers(2, 9))
            s = np.triu(rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)), 1)
            report = nilpotency_index(ComplexMatrix(s))
            assert report.index is not None and report.index <= n

    def test_similarity_invariance(self):
        rng = np.random.default_rng(23)
        for _ in range(200):
            n = int(rng.integers(2, 9))
            t = random_nilpotent_np(rng, n)
            base = nilpotency_index(ComplexMatrix(t)).index
            q = random_unitary_np(rng, n)
            conj = nilpotency_index(ComplexMatrix(q @ t @ q.conj().T)).index
            assert base == conj


class TestNormality:
    def test_hermitian_diag(self):
        report = is_normal(ComplexMatrix(np.diag([0, 3, -2, -1.0])))
        assert report.is_normal and report.defect == 0.0

    def test_jordan2_defect_is_sqrt2(self):
        report = is_normal(gallery.get("jordan2").matrix)
        assert not report.is_normal
        assert report.defect == pytest.approx(math.sqrt(2.0), abs=1e-15)

    def test_zero_matrix(self):
        assert is_normal(ComplexMatrix(np.zeros((2, 2)))).is_normal

    def test_structured_normal_families(self):
        rng = np.random.default_rng(31)
        for _ in range(60):
            n = int(rng.integers(1, 9))
            g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
            herm = (g + g.conj().T) / 2
            for m in (herm, 1j * herm, random_unitary_np(rng, n)):
                report = is_normal(ComplexMatrix(m))
                assert report.is_normal and report.defect <= 1e-12 * max(
                    1.0, np.linalg.norm(m) ** 2
                )

    def test_nonzero_nilpotents_are_never_normal(self):
        rng = np.random.default_rng(37)
        checked = 0
        while checked < 500:
            n = int(rng.integers(2, 9))
            t = random_nilpotent_np(rng, n)
            if np.linalg.norm(t) <= 1e-8:
                continue
            assert not is_normal(ComplexMatrix(t)).is_normal
            checked += 1


class TestGelfand:
    def test_nilpotent_hits_zero_at_index(self):
        t = gallery.get("strict_upper4").matrix
        seq = gelfand_sequence(t, 8)
        assert seq.values[3:] == (0.0,) * 5
        assert seq.values[2] > 0
        assert seq.truncated_at is None

    def test_identity_decreases_toward_one(self):
        seq = gelfand_sequence(identity(4), 10)
        for k, g in enumerate(seq.values, start=1):
            assert g == pytest.approx(2.0 ** (1.0 / k), rel=1e-12)
        assert all(x >= y for x, y in zip(seq.values, seq.values[1:]))

    def test_volterra_tail_approaches_spectral_radius(self):
        v = volterra_matrix(64)
        seq = gelfand_sequence(v, 128)
        assert seq.truncated_at is None
        rho = 1.0 / 128.0
        assert rho < seq.tail < 4 * rho

    def test_triangular_tail_dominates_diagonal(self):
        rng = np.random.default_rng(41)
        for _ in range(20):
            n = int(rng.integers(2, 7))
            s = np.triu(rng.normal(size=(n, n)))
            seq = gelfand_sequence(ComplexMatrix(s), 40)
            assert seq.truncated_at is None
            rho = np.abs(np.diag(s)).max()
            assert seq.tail >= rho * (1 - 1e-9)

    def test_overflow_truncates(self):
        t = ComplexMatrix(np.diag([1e200, 1e200]))
        seq = gelfand_sequence(t, 5)
        assert seq.truncated_at == 1
        assert len(seq.values) == 1

    def test_underflow_truncates(self):
        # spectral radius 1e-200: the second power's norm is ~1e-400, below
        # the subnormal range, so the trail must stop with a marker instead
        # of pretending the matrix is nilpotent
        t = ComplexMatrix(np.diag([1e-200, 1e-200]))
        seq = gelfand_sequence(t, 5)
        assert seq.truncated_at is not None
        assert all(v > 0 for v in seq.values)

    def test_rejects_bad_length(self):
        with pytest.raises(ValueError):
            gelfand_sequence(identity(2), 0)


class TestNormPowerIdentity:
    def test_normal_diag(self):
        assert norm_power_defect(
            ComplexMatrix(np.diag([0, 3, -2, -1.0])), 3
        ) == pytest.approx(0.0, abs=1e-8)

    def test_jordan2_defect_is_exactly_one(self):
        assert norm_power_defect(gallery.get("jordan2").matrix, 2) == 1.0

    def test_random_unitary_k5(self):
        rng = np.random.default_rng(43)
        u = ComplexMatrix(random_unitary_np(rng, 6))
        assert norm_power_defect(u, 5) <= 1e-8

    def test_rejects_nonpositive_power(self):
        with pytest.raises(ValueError):
            norm_power_defect(identity(2), 0)
