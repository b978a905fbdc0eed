"""Named fixture matrices with their recorded verdicts.

Each entry pins the facts that make it interesting: the nilpotency index,
the spectrum of the real part (with the tolerance at which it was
recorded), and what the spectrum shares with its negation.  ``verify``
re-runs the full analysis and diffs it against the record, so the gallery
doubles as a smoke test of the whole stack.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matcore import ComplexMatrix, frobenius_norm, trace
from .theorems import AnalysisReport, analyze

__all__ = ["GalleryEntry", "GalleryVerdict", "list_entries", "get", "verify"]


@dataclass(frozen=True)
class ExpectedFacts:
    """Recorded verdicts an analysis run must reproduce."""

    nilindex: int | None
    re_spectrum: tuple[float, ...]
    re_spectrum_atol: float
    symmetry_empty: bool
    symmetry_subset_of_zero: bool
    trace_is_zero: bool
    nonzero: bool


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    matrix: ComplexMatrix
    expected: ExpectedFacts
    note: str


@dataclass(frozen=True)
class GalleryVerdict:
    name: str
    passed: bool
    mismatches: tuple[str, ...]
    report: AnalysisReport


def _entry(name, rows, note, **facts) -> GalleryEntry:
    return GalleryEntry(
        name=name,
        matrix=ComplexMatrix(rows),
        expected=ExpectedFacts(**facts),
        note=note,
    )


_ENTRIES: dict[str, GalleryEntry] = {
    e.name: e
    for e in (
        _entry(
            "jordan2",
            [[0, 1], [0, 0]],
            "2x2 nilpotent Jordan block: squares to zero without being zero; "
            "its real part has eigenvalues -1/2 and 1/2, so neither Hermitian "
            "part is one-signed.",
            nilindex=2,
            re_spectrum=(-0.5, 0.5),
            re_spectrum_atol=1e-12,
            symmetry_empty=False,
            symmetry_subset_of_zero=False,
            trace_is_zero=True,
            nonzero=True,
        ),
        _entry(
            "example_pp",
            [
                [2, 2, -2, 0],
                [5, 1, -3, 0],
                [1, 5, -3, 0],
                [0, 0, 0, 0],
            ],
            "4x4 nilpotent of index 3 whose real part has spectrum "
            "{0, -3.71, -1.33, 5.04} (approx), meeting its negation in "
            "exactly {0}: at order 4 that intersection no longer forces the "
            "matrix to vanish.",
            nilindex=3,
            re_spectrum=(-3.71, -1.33, 0.0, 5.04),
            re_spectrum_atol=0.01,
            symmetry_empty=False,
            symmetry_subset_of_zero=True,
            trace_is_zero=True,
            nonzero=True,
        ),
        _entry(
            "diag_counter",
            [
                [0, 0, 0, 0],
                [0, 3, 0, 0],
                [0, 0, -2, 0],
                [0, 0, 0, -1],
            ],
            "Hermitian diag(0, 3, -2, -1): trace zero and spectrum meeting "
            "its negation in exactly {0}, yet nonzero; defeats the order-2/3 "
            "trace argument at order 4.",
            nilindex=None,
            re_spectrum=(-2.0, -1.0, 0.0, 3.0),
            re_spectrum_atol=1e-12,
            symmetry_empty=False,
            symmetry_subset_of_zero=True,
            trace_is_zero=True,
            nonzero=True,
        ),
        _entry(
            "strict_upper4",
            [
                [0, 1, 2, 4],
                [0, 0, 2, 1],
                [0, 0, 0, 5],
                [0, 0, 0, 0],
            ],
            "4x4 strictly upper triangular with full nilpotency index 4; the "
            "real-part spectrum {4.058, -1.043, -2.811, -0.205} (approx) is "
            "entirely free of +/- pairs.",
            nilindex=4,
            re_spectrum=(-2.811, -1.043, -0.205, 4.058),
            re_spectrum_atol=0.005,
            symmetry_empty=True,
            symmetry_subset_of_zero=True,
            trace_is_zero=True,
            nonzero=True,
        ),
    )
}


def list_entries() -> tuple[str, ...]:
    return tuple(_ENTRIES)


def get(name: str) -> GalleryEntry:
    try:
        return _ENTRIES[name]
    except KeyError:
        raise KeyError(
            f"unknown gallery entry {name!r}; known: {', '.join(_ENTRIES)}"
        ) from None


def verify(name: str) -> GalleryVerdict:
    """Re-analyze the entry and diff against its recorded facts."""
    entry = get(name)
    report = analyze(entry.matrix)
    exp = entry.expected
    mismatches: list[str] = []

    if report.nilpotency.index != exp.nilindex:
        mismatches.append(
            f"nilindex: expected {exp.nilindex}, got {report.nilpotency.index}"
        )
    got_spec = report.re_spectrum.eigenvalues
    if len(got_spec) != len(exp.re_spectrum):
        mismatches.append("re spectrum length mismatch")
    else:
        for want, got in zip(exp.re_spectrum, got_spec):
            if abs(want - got) > exp.re_spectrum_atol:
                mismatches.append(
                    f"re eigenvalue {got:.6f} off {want:.6f} "
                    f"by more than {exp.re_spectrum_atol}"
                )
    if report.re_symmetry.intersection_is_empty != exp.symmetry_empty:
        mismatches.append(
            f"symmetry emptiness: expected {exp.symmetry_empty}, "
            f"got {report.re_symmetry.intersection_is_empty}"
        )
    if report.re_symmetry.intersection_is_subset_of_zero != exp.symmetry_subset_of_zero:
        mismatches.append(
            f"symmetry subset-of-zero: expected {exp.symmetry_subset_of_zero}, "
            f"got {report.re_symmetry.intersection_is_subset_of_zero}"
        )
    tr = trace(entry.matrix)
    if exp.trace_is_zero != (tr == 0):
        mismatches.append(f"trace-zero: expected {exp.trace_is_zero}, trace = {tr}")
    if exp.nonzero != (frobenius_norm(entry.matrix) > 0):
        mismatches.append("nonzero expectation violated")

    return GalleryVerdict(
        name=name,
        passed=not mismatches,
        mismatches=tuple(mismatches),
        report=report,
    )
