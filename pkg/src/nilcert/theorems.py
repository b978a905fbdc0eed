"""Executable oracles for the vanishing theorems on nilpotent matrices.

The central fact: a nilpotent matrix whose Hermitian real part (or
imaginary part) is positive or negative semidefinite must be zero.  Its
contrapositive is a practical certificate: exhibit a semidefinite part of
a nonzero matrix and you have proved the matrix is not nilpotent, no
power trail required.

The statements all conclude "T = 0", which cannot be falsified by
sampling nonzero matrices directly, so every oracle here tests the
contrapositive on nonzero nilpotent inputs.  Verdicts are three-valued;
not-applicable never counts as a pass.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .matcore import (
    ComplexMatrix,
    CartesianDecomposition,
    cartesian_decompose,
    frobenius_norm,
    add,
    scale,
)
from .spectral import (
    DefinitenessClass,
    SpectrumReport,
    SymmetryReport,
    classify_definiteness,
    hermitian_eigenvalues,
    spectrum_symmetry,
    zero_eigenvalue_multiplicity,
    DEFAULT_SYMMETRY_TOL,
    DEFAULT_CLASSIFY_TOL,
)
from .nilpotency import (
    NilpotencyReport,
    NormalityReport,
    is_normal,
    nilpotency_index,
)
from .generators import GeneratorConfig, derive_seed, random_hermitian

__all__ = [
    "CertificateKind",
    "Certificate",
    "VerdictStatus",
    "OracleVerdict",
    "AnalysisReport",
    "analyze",
    "non_nilpotence_certificate",
    "opposite_signs_check",
    "small_dim_symmetry_oracle",
    "dim4_multiplicity_oracle",
    "two_by_two_disjoint_oracle",
    "DEFAULT_WITNESS_TOL",
]

# Witness eigenvalues must clear +/- this coefficient times max(1, ||part||_F)
# before the opposite-signs check accepts them.
DEFAULT_WITNESS_TOL = 1e-8


class CertificateKind(enum.Enum):
    REAL_PART_PSD = "RealPartPSD"
    REAL_PART_NSD = "RealPartNSD"
    IMAG_PART_PSD = "ImagPartPSD"
    IMAG_PART_NSD = "ImagPartNSD"


@dataclass(frozen=True)
class Certificate:
    """Machine-checkable witness that a nonzero matrix is not nilpotent.

    ``witness_spectrum`` is the spectrum of the semidefinite Hermitian
    part; ``nonzero_norm`` is ||T||_F, strictly above the zero floor.
    Absence of a certificate proves nothing: semidefiniteness of a part
    is sufficient for non-nilpotence, not necessary.
    """

    kind: CertificateKind
    witness_spectrum: SpectrumReport
    nonzero_norm: float


class VerdictStatus(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class OracleVerdict:
    """Outcome of one theorem oracle on one input.

    ``conclusion`` is a short stable tag; ``witnesses`` carry the numbers
    (extreme eigenvalues, matched pairs, sample counts) that support it.
    """

    oracle: str
    status: VerdictStatus
    conclusion: str
    witnesses: tuple[tuple[str, float], ...] = ()
    detail: str = ""

    @property
    def applicable(self) -> bool:
        return self.status is not VerdictStatus.NOT_APPLICABLE

    @property
    def passed(self) -> bool:
        return self.status is VerdictStatus.PASS


@dataclass(frozen=True)
class AnalysisReport:
    """Full verdict bundle for one matrix.

    ``inconsistent`` flags the impossible combination of a non-nilpotence
    certificate together with a reported nilpotency index; seeing it means
    the tolerances are mis-set, not that the mathematics failed.
    """

    order: int
    norm: float
    zero: bool
    decomposition: CartesianDecomposition
    re_spectrum: SpectrumReport
    im_spectrum: SpectrumReport
    re_class: DefinitenessClass
    im_class: DefinitenessClass
    re_symmetry: SymmetryReport
    im_symmetry: SymmetryReport
    nilpotency: NilpotencyReport
    normality: NormalityReport
    certificates: tuple[Certificate, ...]
    theorem_verdicts: tuple[OracleVerdict, ...]
    inconsistent: bool

    @property
    def certificate(self) -> Certificate | None:
        """First certificate in the fixed search order, if any."""
        return self.certificates[0] if self.certificates else None


def _part_spectra(
    dec: CartesianDecomposition, symmetry_tol: float | None
) -> tuple[SpectrumReport, SpectrumReport]:
    re_tol = None if symmetry_tol is None else symmetry_tol * max(
        1.0, frobenius_norm(dec.re_part)
    )
    im_tol = None if symmetry_tol is None else symmetry_tol * max(
        1.0, frobenius_norm(dec.im_part)
    )
    return (
        hermitian_eigenvalues(dec.re_part, re_tol),
        hermitian_eigenvalues(dec.im_part, im_tol),
    )


def _classify(spec: SpectrumReport, tol: float | None) -> DefinitenessClass:
    class_tol = None
    if tol is not None:
        class_tol = tol * max(1.0, abs(spec.min), abs(spec.max))
    return classify_definiteness(spec, class_tol)


_CERTIFICATE_ORDER = (
    ("re", True, CertificateKind.REAL_PART_PSD),
    ("re", False, CertificateKind.REAL_PART_NSD),
    ("im", True, CertificateKind.IMAG_PART_PSD),
    ("im", False, CertificateKind.IMAG_PART_NSD),
)


def _certificates_from_classes(
    norm: float,
    re_spec: SpectrumReport,
    im_spec: SpectrumReport,
    re_class: DefinitenessClass,
    im_class: DefinitenessClass,
) -> tuple[Certificate, ...]:
    strict_psd = (
        DefinitenessClass.POSITIVE_DEFINITE,
        DefinitenessClass.POSITIVE_SEMIDEFINITE,
    )
    strict_nsd = (
        DefinitenessClass.NEGATIVE_DEFINITE,
        DefinitenessClass.NEGATIVE_SEMIDEFINITE,
    )
    found = []
    for part, positive, kind in _CERTIFICATE_ORDER:
        cls = re_class if part == "re" else im_class
        spec = re_spec if part == "re" else im_spec
        if cls in (strict_psd if positive else strict_nsd):
            found.append(
                Certificate(kind=kind, witness_spectrum=spec, nonzero_norm=norm)
            )
    return tuple(found)


def non_nilpotence_certificate(
    t: ComplexMatrix, tol: float | None = None
) -> Certificate | None:
    """Certify that a nonzero matrix cannot be nilpotent.

    Searches Re T >= 0, Re T <= 0, Im T >= 0, Im T <= 0 in that order and
    returns the first semidefiniteness witness found; each one implies
    non-nilpotence because a nilpotent matrix with a semidefinite part
    vanishes.  The imaginary part is only eigensolved when the real part
    settles nothing.  Returns None for the zero matrix and when neither
    part is one-signed; None is not evidence of nilpotence.

    A part classified exactly Zero is never used as a witness: it would
    be vacuous for the caller, and a nonzero matrix with a vanishing
    Hermitian part is normal, hence certified non-nilpotent through the
    other part anyway.
    """
    norm = frobenius_norm(t)
    zero_floor = (tol if tol is not None else DEFAULT_CLASSIFY_TOL) * max(1.0, norm)
    if norm <= zero_floor:
        return None
    dec = cartesian_decompose(t)
    for part, psd_kind, nsd_kind in (
        (dec.re_part, CertificateKind.REAL_PART_PSD, CertificateKind.REAL_PART_NSD),
        (dec.im_part, CertificateKind.IMAG_PART_PSD, CertificateKind.IMAG_PART_NSD),
    ):
        spec = hermitian_eigenvalues(part)
        cls = _classify(spec, tol)
        if cls in (
            DefinitenessClass.POSITIVE_DEFINITE,
            DefinitenessClass.POSITIVE_SEMIDEFINITE,
        ):
            return Certificate(kind=psd_kind, witness_spectrum=spec, nonzero_norm=norm)
        if cls in (
            DefinitenessClass.NEGATIVE_DEFINITE,
            DefinitenessClass.NEGATIVE_SEMIDEFINITE,
        ):
            return Certificate(kind=nsd_kind, witness_spectrum=spec, nonzero_norm=norm)
    return None


def opposite_signs_check(
    t: ComplexMatrix,
    tol: float | None = None,
    witness_tol: float = DEFAULT_WITNESS_TOL,
) -> OracleVerdict:
    """For a nonzero nilpotent input, both Hermitian parts must straddle zero.

    A semidefinite real part would force T = 0 outright; a semidefinite
    imaginary part likewise.  So each part must own an eigenvalue on
    either side of zero, beyond +/- witness_tol * max(1, ||part||_F).
    Non-nilpotent or zero inputs are out of scope and yield
    not-applicable, never a pass.
    """
    name = "corollary_opposite_signs"
    nil = nilpotency_index(t, tol)
    norm = frobenius_norm(t)
    zero_floor = (tol if tol is not None else DEFAULT_CLASSIFY_TOL) * max(1.0, norm)
    if not nil.is_nilpotent or norm <= zero_floor:
        return OracleVerdict(
            oracle=name,
            status=VerdictStatus.NOT_APPLICABLE,
            conclusion="requires_nonzero_nilpotent",
        )
    dec = cartesian_decompose(t)
    re_spec, im_spec = _part_spectra(dec, None)
    witnesses = []
    ok = True
    for label, part, spec in (
        ("re", dec.re_part, re_spec),
        ("im", dec.im_part, im_spec),
    ):
        wtol = witness_tol * max(1.0, frobenius_norm(part))
        cls = classify_definiteness(spec, wtol)
        witnesses.append((f"{label}_min", spec.min))
        witnesses.append((f"{label}_max", spec.max))
        ok = ok and cls is DefinitenessClass.INDEFINITE
    return OracleVerdict(
        oracle=name,
        status=VerdictStatus.PASS if ok else VerdictStatus.FAIL,
        conclusion="both_parts_indefinite" if ok else "semidefinite_part_found",
        witnesses=tuple(witnesses),
    )


def small_dim_symmetry_oracle(
    t: ComplexMatrix,
    tol: float | None = None,
    symmetry_tol: float = DEFAULT_SYMMETRY_TOL,
) -> OracleVerdict:
    """Order 2 or 3: a nonzero nilpotent forbids the exact intersection {0}.

    The underlying statement: if sigma(A) meets sigma(-A) in exactly the
    singleton {0} (same for the imaginary part B), a nilpotent T must be
    zero.  Contrapositive, tested here: for nonzero nilpotent T, neither
    part's intersection may equal {0} exactly.  At order 2 a zero trace
    forces the spectrum of each part to a +/- pair, so the intersection
    is never empty and passing means a nonzero matched pair exists.  At
    order 3 an empty intersection is common (the hypothesis needs 0 to be
    an eigenvalue, which generic nilpotents avoid) and passes too.
    """
    name = "small_dim_symmetry"
    if t.n not in (2, 3):
        return OracleVerdict(
            oracle=name,
            status=VerdictStatus.NOT_APPLICABLE,
            conclusion="order_not_2_or_3",
        )
    nil = nilpotency_index(t, tol)
    norm = frobenius_norm(t)
    zero_floor = (tol if tol is not None else DEFAULT_CLASSIFY_TOL) * max(1.0, norm)
    if not nil.is_nilpotent or norm <= zero_floor:
        return OracleVerdict(
            oracle=name,
            status=VerdictStatus.NOT_APPLICABLE,
            conclusion="requires_nonzero_nilpotent",
        )
    dec = cartesian_decompose(t)
    re_spec, im_spec = _part_spectra(dec, symmetry_tol)
    re_sym = spectrum_symmetry(re_spec)
    im_sym = spectrum_symmetry(im_spec)
    bad = re_sym.is_exactly_zero_singleton or im_sym.is_exactly_zero_singleton
    witnesses = tuple(
        (f"re_pair_{i}", v) for i, v in enumerate(re_sym.matched_pairs)
    ) + tuple((f"im_pair_{i}", v) for i, v in enumerate(im_sym.matched_pairs))
    return OracleVerdict(
        oracle=name,
        status=VerdictStatus.FAIL if bad else VerdictStatus.PASS,
        conclusion=(
            "zero_singleton_intersection_on_nonzero_nilpotent"
            if bad
            else "intersections_avoid_zero_singleton"
        ),
        witnesses=witnesses,
    )


def dim4_multiplicity_oracle(
    t: ComplexMatrix,
    tol: float | None = None,
    symmetry_tol: float = DEFAULT_SYMMETRY_TOL,
) -> OracleVerdict:
    """Order 4: intersection {0} with a double zero eigenvalue forces T = 0.

    Contrapositive on a nonzero nilpotent input: the real part must not
    combine an exactly-{0} intersection with zero-eigenvalue multiplicity
    two (multiplicities counted by clustering at the report resolution).
    The zero matrix satisfies the conclusion outright, hence passes
    vacuously; non-nilpotent inputs are not covered by the statement.
    """
    name = "dim4_zero_multiplicity"
    if t.n != 4:
        return OracleVerdict(
            oracle=name,
            status=VerdictStatus.NOT_APPLICABLE,
            conclusion="order_not_4",
        )
    nil = nilpotency_index(t, tol)
    if not nil.is_nilpotent:
        return OracleVerdict(
            oracle=name,
            status=VerdictStatus.NOT_APPLICABLE,
            conclusion="requires_nilpotent",
        )
    norm = frobenius_norm(t)
    zero_floor = (tol if tol is not None else DEFAULT_CLASSIFY_TOL) * max(1.0, norm)
    if norm <= zero_floor:
        return OracleVerdict(
            oracle=name,
            status=VerdictStatus.PASS,
            conclusion="zero_matrix_conclusion_holds",
        )
    dec = cartesian_decompose(t)
    re_spec, _ = _part_spectra(dec, symmetry_tol)
    re_sym = spectrum_symmetry(re_spec)
    zero_mult = zero_eigenvalue_multiplicity(re_spec)
    hypothesis = re_sym.is_exactly_zero_singleton and zero_mult == 2
    return OracleVerdict(
        oracle=name,
        status=VerdictStatus.FAIL if hypothesis else VerdictStatus.PASS,
        conclusion=(
            "hypothesis_met_on_nonzero_nilpotent"
            if hypothesis
            else "hypothesis_fails_consistent"
        ),
        witnesses=(("zero_multiplicity", float(zero_mult)),),
    )


def two_by_two_disjoint_oracle(
    a_input: ComplexMatrix,
    tol: float | None = None,
    samples: int = 100,
    seed: int = 0x2B2B,
    symmetry_tol: float = DEFAULT_SYMMETRY_TOL,
) -> OracleVerdict:
    """2x2 Hermitian A with sigma(A) disjoint from sigma(-A): A + iB is
    never nilpotent, whatever Hermitian B is added.

    Disjointness forces a nonzero trace, which already obstructs
    nilpotence, so the batch check over ``samples`` random Hermitian B
    (sub-seeded from ``seed``, reproducible and order-independent) must
    find no nilpotency index.  Applicable only when A is Hermitian 2x2
    and the intersection is empty at the report resolution.
    """
    name = "two_by_two_disjoint"
    if a_input.n != 2:
        return OracleVerdict(
            oracle=name,
            status=VerdictStatus.NOT_APPLICABLE,
            conclusion="order_not_2",
        )
    try:
        spec = hermitian_eigenvalues(
            a_input, symmetry_tol * max(1.0, frobenius_norm(a_input))
        )
    except ValueError:
        return OracleVerdict(
            oracle=name,
            status=VerdictStatus.NOT_APPLICABLE,
            conclusion="input_not_hermitian",
        )
    sym = spectrum_symmetry(spec)
    if not sym.intersection_is_empty:
        return OracleVerdict(
            oracle=name,
            status=VerdictStatus.NOT_APPLICABLE,
            conclusion="spectra_not_disjoint",
            witnesses=tuple(
                (f"pair_{i}", v) for i, v in enumerate(sym.matched_pairs)
            ),
        )
    failures = 0
    first_bad = -1.0
    for i in range(samples):
        b = random_hermitian(GeneratorConfig(seed=derive_seed(seed, i), order=2))
        candidate = add(a_input, scale(1j, b))
        if nilpotency_index(candidate, tol).is_nilpotent:
            failures += 1
            if first_bad < 0:
                first_bad = float(i)
    status = VerdictStatus.PASS if failures == 0 else VerdictStatus.FAIL
    witnesses = [("samples", float(samples)), ("failures", float(failures))]
    if failures:
        witnesses.append(("first_failing_sample", first_bad))
    return OracleVerdict(
        oracle=name,
        status=status,
        conclusion="never_nilpotent" if failures == 0 else "nilpotent_sample_found",
        witnesses=tuple(witnesses),
    )


def _instance_two_by_two_verdict(
    order: int, re_sym: SymmetryReport, nil: NilpotencyReport
) -> OracleVerdict:
    """Instance-level echo of the 2x2 disjoint-spectrum statement.

    Applies when the analyzed matrix itself is 2x2 and the real part's
    intersection is empty; the matrix then must not be nilpotent.  The
    batch form lives in two_by_two_disjoint_oracle.
    """
    name = "two_by_two_disjoint"
    if order != 2:
        return OracleVerdict(
            oracle=name,
            status=VerdictStatus.NOT_APPLICABLE,
            conclusion="order_not_2",
        )
    if not re_sym.intersection_is_empty:
        return OracleVerdict(
            oracle=name,
            status=VerdictStatus.NOT_APPLICABLE,
            conclusion="spectra_not_disjoint",
        )
    ok = not nil.is_nilpotent
    return OracleVerdict(
        oracle=name,
        status=VerdictStatus.PASS if ok else VerdictStatus.FAIL,
        conclusion="not_nilpotent" if ok else "nilpotent_despite_disjoint_spectra",
    )


def analyze(
    t: ComplexMatrix,
    tol: float | None = None,
    symmetry_tol: float = DEFAULT_SYMMETRY_TOL,
) -> AnalysisReport:
    """Run the full battery on one matrix and bundle the verdicts.

    ``tol`` is the base coefficient for the zero test, the definiteness
    classification and the nilpotency threshold (default 1e-10);
    ``symmetry_tol`` the base coefficient for eigenvalue matching
    (default 1e-8).  Both are applied scale-aware.
    """
    norm = frobenius_norm(t)
    base_tol = tol if tol is not None else DEFAULT_CLASSIFY_TOL
    zero_floor = base_tol * max(1.0, norm)
    zero = norm <= zero_floor

    dec = cartesian_decompose(t)
    re_spec, im_spec = _part_spectra(dec, symmetry_tol)
    re_class = _classify(re_spec, tol)
    im_class = _classify(im_spec, tol)
    re_sym = spectrum_symmetry(re_spec)
    im_sym = spectrum_symmetry(im_spec)
    nil = nilpotency_index(t, tol)
    normality = is_normal(t, tol)

    certificates = ()
    if not zero:
        certificates = _certificates_from_classes(
            norm, re_spec, im_spec, re_class, im_class
        )
    inconsistent = bool(certificates) and nil.is_nilpotent

    if zero:
        main = OracleVerdict(
            oracle="main_theorem",
            status=VerdictStatus.NOT_APPLICABLE,
            conclusion="matrix_is_zero",
        )
    elif inconsistent:
        main = OracleVerdict(
            oracle="main_theorem",
            status=VerdictStatus.FAIL,
            conclusion="inconsistent_certificate_and_nilpotent",
        )
    elif certificates:
        main = OracleVerdict(
            oracle="main_theorem",
            status=VerdictStatus.PASS,
            conclusion="certified_non_nilpotent",
            witnesses=(
                ("witness_min_eig", certificates[0].witness_spectrum.min),
                ("witness_max_eig", certificates[0].witness_spectrum.max),
            ),
        )
    else:
        main = OracleVerdict(
            oracle="main_theorem",
            status=VerdictStatus.PASS,
            conclusion="no_semidefinite_part",
        )

    verdicts = (
        main,
        opposite_signs_check(t, tol),
        small_dim_symmetry_oracle(t, tol, symmetry_tol),
        dim4_multiplicity_oracle(t, tol, symmetry_tol),
        _instance_two_by_two_verdict(t.n, re_sym, nil),
    )

    return AnalysisReport(
        order=t.n,
        norm=norm,
        zero=zero,
        decomposition=dec,
        re_spectrum=re_spec,
        im_spectrum=im_spec,
        re_class=re_class,
        im_class=im_class,
        re_symmetry=re_sym,
        im_symmetry=im_sym,
        nilpotency=nil,
        normality=normality,
        certificates=certificates,
        theorem_verdicts=verdicts,
        inconsistent=inconsistent,
    )
