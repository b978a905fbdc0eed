import numpy as np
import pytest

from nilcert.generators import (
    GaussianStream,
    GeneratorConfig,
    derive_seed,
    random_accretive,
    random_hermitian,
    random_nilpotent,
    random_psd,
    random_unitary,
    _splitmix64_mix,
)
from nilcert.matcore import frobenius_norm, trace
from nilcert.nilpotency import nilpotency_index
from nilcert.spectral import (
    DefinitenessClass,
    classify_definiteness,
    hermitian_eigenvalues,
)
from nilcert.theorems import CertificateKind, non_nilpotence_certificate


class TestStream:
    def test_splitmix64_reference_outputs(self):
        # first three outputs of the reference stream started at state 0
        golden = 0x9E3779B97F4A7C15
        x = 0
        got = []
        for _ in range(3):
            x = (x + golden) & ((1 << 64) - 1)
            got.append(_splitmix64_mix(x))
        assert got == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]

    def test_stream_is_reproducible(self):
        a = GaussianStream(12345)
        b = GaussianStream(12345)
        assert [a.next_u64() for _ in range(10)] == [b.next_u64() for _ in range(10)]

    def test_uniform_range(self):
        s = GaussianStream(7)
        for _ in range(1000):
            u = s.uniform()
            assert 0.0 < u <= 1.0

    def test_gaussian_moments_are_sane(self):
        s = GaussianStream(99)
        xs = np.array([s.gaussian() for _ in range(20000)])
        assert abs(xs.mean()) < 0.05
        assert abs(xs.std() - 1.0) < 0.05

    def test_distinct_seeds_diverge(self):
        assert GaussianStream(1).next_u64() != GaussianStream(2).next_u64()

    def test_stream_identity_anchor(self):
        # frozen first outputs for seed 42; a change here means the stream
        # identity drifted and recorded corpora are no longer replayable
        s = GaussianStream(42)
        assert [s.next_u64() for _ in range(3)] == [
            1546998764402558742,
            6990951692964543102,
            12544586762248559009,
        ]

    def test_derive_seed_is_stable_and_spread(self):
        seeds = [derive_seed(1, i) for i in range(100)]
        assert len(set(seeds)) == 100
        assert seeds == [derive_seed(1, i) for i in range(100)]
        with pytest.raises(ValueError):
            derive_seed(1, -1)


class TestConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            GeneratorConfig(seed=-1, order=2)
        with pytest.raises(ValueError):
            GeneratorConfig(seed=1, order=0)
        with pytest.raises(ValueError):
            GeneratorConfig(seed=1, order=2, entry_scale=0.0)


class TestUnitary:
    def test_order_one_is_unit_modulus(self):
        q = random_unitary(GeneratorConfig(seed=5, order=1))
        assert abs(abs(q[0, 0]) - 1.0) < 1e-14

    def test_isometry(self):
        q = random_unitary(GeneratorConfig(seed=9, order=6))
        rng = np.random.default_rng(0)
        for _ in range(10):
            x = rng.normal(size=6) + 1j * rng.normal(size=6)
            assert np.linalg.norm(q.array @ x) == pytest.approx(
                np.linalg.norm(x), rel=1e-10
            )

    def test_unitarity_defect_seed42_order8(self):
        q = random_unitary(GeneratorConfig(seed=42, order=8)).array
        assert np.linalg.norm(q @ q.conj().T - np.eye(8)) <= 1e-12 * 8
        assert np.linalg.norm(q.conj().T @ q - np.eye(8)) <= 1e-12 * 8

    def test_reproducible(self):
        cfg = GeneratorConfig(seed=4, order=5)
        assert np.array_equal(random_unitary(cfg).array, random_unitary(cfg).array)


class TestNilpotent:
    def test_order_two_always_index_two(self):
        for seed in range(20):
            t = random_nilpotent(GeneratorConfig(seed=seed, order=2))
            assert nilpotency_index(t).index == 2

    def test_index_lower_bound_forces_full_index(self):
        t = random_nilpotent(GeneratorConfig(seed=3, order=5), index_lower_bound=5)
        assert nilpotency_index(t).index == 5

    def test_every_output_is_nilpotent(self):
        rng_seeds = range(150)
        for seed in rng_seeds:
            order = 2 + seed % 7  # orders 2..8
            t = random_nilpotent(GeneratorConfig(seed=seed, order=order))
            report = nilpotency_index(t)
            assert report.index is not None and report.index <= order

    def test_trace_is_numerically_zero(self):
        for seed in range(50):
            t = random_nilpotent(GeneratorConfig(seed=seed, order=6))
            assert abs(trace(t)) <= 1e-12

    def test_rejects_order_one(self):
        with pytest.raises(ValueError):
            random_nilpotent(GeneratorConfig(seed=1, order=1))

    def test_rejects_bad_lower_bound(self):
        with pytest.raises(ValueError):
            random_nilpotent(GeneratorConfig(seed=1, order=3), index_lower_bound=4)

    def test_guaranteed_nonzero(self):
        for seed in range(50):
            t = random_nilpotent(GeneratorConfig(seed=seed, order=3))
            assert frobenius_norm(t) > 1e-8


class TestHermitianPsdAccretive:
    def test_hermitian_has_real_spectrum(self):
        h = random_hermitian(GeneratorConfig(seed=11, order=5))
        report = hermitian_eigenvalues(h)  # would raise if not Hermitian
        assert len(report.eigenvalues) == 5

    def test_psd_classifies_psd(self):
        for seed in (7, 8, 9):
            p = random_psd(GeneratorConfig(seed=seed, order=3))
            spec = hermitian_eigenvalues(p)
            assert spec.min >= -1e-12 * max(1.0, frobenius_norm(p))
            assert classify_definiteness(spec).is_positive_semidefinite

    def test_accretive_re_part_is_the_gram_factor(self):
        cfg = GeneratorConfig(seed=13, order=4)
        t = random_accretive(cfg)
        cert = non_nilpotence_certificate(t)
        assert cert is not None
        assert cert.kind in (
            CertificateKind.REAL_PART_PSD,
            CertificateKind.REAL_PART_NSD,
        )
        assert cert.kind is CertificateKind.REAL_PART_PSD

    def test_accretive_never_nilpotent(self):
        for seed in range(100):
            t = random_accretive(GeneratorConfig(seed=seed, order=3))
            if frobenius_norm(t) > 1e-8:
                assert non_nilpotence_certificate(t) is not None
                assert nilpotency_index(t).index is None

    def test_bitwise_reproducibility(self):
        cfg = GeneratorConfig(seed=1234, order=6, entry_scale=2.5)
        for fn in (random_hermitian, random_psd, random_accretive, random_nilpotent):
            assert np.array_equal(fn(cfg).array, fn(cfg).array)
