"""Command-line front end.

Exit codes are stable contracts:

* 0  success (for ``certify``: a certificate was found; for ``fuzz`` and
     ``gallery verify``: zero failures)
* 1  input/file errors, and property or verification failures
* 2  usage errors (unknown subcommand or flag; argparse default)
* 3  ``certify`` ran fine but found no certificate

``--json`` switches any subcommand to a single machine-readable document
on stdout; the key layout is documented in the README and kept stable.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import gallery as gallery_mod
from .generators import (
    RNG_ALGORITHM,
    GeneratorConfig,
    derive_seed,
    random_accretive,
    random_nilpotent,
)
from .matcore import ComplexMatrix, cartesian_decompose, frobenius_norm, trace
from .matfile import MatrixFormatError, format_matrix, parse_matrix
from .nilpotency import nilpotency_index
from .theorems import (
    AnalysisReport,
    Certificate,
    OracleVerdict,
    analyze,
    dim4_multiplicity_oracle,
    non_nilpotence_certificate,
    opposite_signs_check,
    small_dim_symmetry_oracle,
)
from .volterra import VolterraReport, volterra_report

__all__ = ["main", "jsonable"]

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_USAGE = 2
EXIT_NO_CERTIFICATE = 3


def jsonable(obj: Any) -> Any:
    """Convert report objects into plain JSON-ready structures."""
    from . import nilpotency, spectral

    if isinstance(obj, spectral.SpectrumReport):
        return {
            "eigenvalues": list(obj.eigenvalues),
            "order": obj.order,
            "tol": obj.tol,
        }
    if isinstance(obj, spectral.SymmetryReport):
        return {
            "matched_pairs": list(obj.matched_pairs),
            "tol": obj.tol,
            "intersection_is_empty": obj.intersection_is_empty,
            "intersection_is_subset_of_zero": obj.intersection_is_subset_of_zero,
        }
    if isinstance(obj, spectral.DefinitenessClass):
        return obj.value
    if isinstance(obj, nilpotency.NilpotencyReport):
        return {
            "index": obj.index,
            "power_norms": list(obj.power_norms),
            "tol_used": obj.tol_used,
        }
    if isinstance(obj, nilpotency.NormalityReport):
        return {"is_normal": obj.is_normal, "defect": obj.defect}
    if isinstance(obj, Certificate):
        return {
            "kind": obj.kind.value,
            "witness_spectrum": jsonable(obj.witness_spectrum),
            "nonzero_norm": obj.nonzero_norm,
        }
    if isinstance(obj, OracleVerdict):
        return {
            "oracle": obj.oracle,
            "status": obj.status.value,
            "conclusion": obj.conclusion,
            "witnesses": {k: v for k, v in obj.witnesses},
        }
    if isinstance(obj, AnalysisReport):
        return {
            "order": obj.order,
            "frobenius_norm": obj.norm,
            "zero": obj.zero,
            "re_class": jsonable(obj.re_class),
            "im_class": jsonable(obj.im_class),
            "re_spectrum": jsonable(obj.re_spectrum),
            "im_spectrum": jsonable(obj.im_spectrum),
            "re_symmetry": jsonable(obj.re_symmetry),
            "im_symmetry": jsonable(obj.im_symmetry),
            "nilpotency": jsonable(obj.nilpotency),
            "normality": jsonable(obj.normality),
            "certificates": [jsonable(c) for c in obj.certificates],
            "theorem_verdicts": [jsonable(v) for v in obj.theorem_verdicts],
            "inconsistent": obj.inconsistent,
        }
    if isinstance(obj, VolterraReport):
        return {
            "n": obj.n,
            "min_eig_re": obj.min_eig_re,
            "max_eig_re": obj.max_eig_re,
            "spectral_radius_exact": obj.spectral_radius_exact,
            "gelfand_tail": obj.gelfand_tail,
            "gelfand_truncated_at": obj.gelfand_truncated_at,
            "nilpotent": obj.nilpotent,
            "certificate_present": obj.certificate_present,
            "certificate": jsonable(obj.certificate) if obj.certificate else None,
        }
    if isinstance(obj, gallery_mod.GalleryVerdict):
        return {
            "name": obj.name,
            "passed": obj.passed,
            "mismatches": list(obj.mismatches),
            "report": jsonable(obj.report),
        }
    raise TypeError(f"no JSON form for {type(obj).__name__}")


def _emit(args, document: dict, human: str) -> None:
    if args.json:
        json.dump(document, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print(human)


def _load(path: str) -> ComplexMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def _fmt_verdicts(report: AnalysisReport) -> str:
    lines = []
    for v in report.theorem_verdicts:
        lines.append(f"  {v.oracle:<28} {v.status.value:<16} {v.conclusion}")
    return "\n".join(lines)


def _cmd_analyze(args) -> int:
    m = _load(args.file)
    report = analyze(m, tol=args.tol)
    nil = report.nilpotency
    human = "\n".join(
        [
            f"order {report.order}, ||T||_F = {report.norm:.6g}"
            + (" (zero matrix)" if report.zero else ""),
            f"re part: {report.re_class.value}, spectrum "
            f"{_fmt_floats(report.re_spectrum.eigenvalues)}",
            f"im part: {report.im_class.value}, spectrum "
            f"{_fmt_floats(report.im_spectrum.eigenvalues)}",
            f"re symmetry pairs: {_fmt_floats(report.re_symmetry.matched_pairs)}",
            f"im symmetry pairs: {_fmt_floats(report.im_symmetry.matched_pairs)}",
            f"nilpotency index: {nil.index if nil.is_nilpotent else 'none'}",
            f"normal: {report.normality.is_normal} "
            f"(defect {report.normality.defect:.3e})",
            f"certificates: "
            + (
                ", ".join(c.kind.value for c in report.certificates)
                if report.certificates
                else "none"
            ),
            ("REPORT INCONSISTENT: certificate and nilpotency index coexist"
             if report.inconsistent else "")
            or "verdicts:",
            _fmt_verdicts(report),
        ]
    )
    _emit(args, {"command": "analyze", "file": args.file, "report": jsonable(report)}, human)
    return EXIT_OK


def _fmt_floats(values) -> str:
    return "{" + ", ".join(f"{v:.6g}" for v in values) + "}"


def _cmd_nilindex(args) -> int:
    m = _load(args.file)
    report = nilpotency_index(m, tol=args.tol)
    human_lines = [
        f"nilpotency index: {report.index if report.is_nilpotent else 'none'}"
    ]
    for k, nk in enumerate(report.power_norms, start=1):
        human_lines.append(f"  ||T^{k}||_F = {nk:.6e}")
    _emit(
        args,
        {
            "command": "nilindex",
            "file": args.file,
            "report": {
                "index": report.index,
                "power_norms": list(report.power_norms),
                "tol_used": report.tol_used,
            },
        },
        "\n".join(human_lines),
    )
    return EXIT_OK


def _cmd_certify(args) -> int:
    m = _load(args.file)
    cert = non_nilpotence_certificate(m, tol=args.tol)
    if cert is None:
        _emit(
            args,
            {"command": "certify", "file": args.file, "certificate": None},
            "no certificate",
        )
        return EXIT_NO_CERTIFICATE
    human = (
        f"{cert.kind.value}: witness spectrum "
        f"{_fmt_floats(cert.witness_spectrum.eigenvalues)}, "
        f"||T||_F = {cert.nonzero_norm:.6g} => not nilpotent"
    )
    _emit(
        args,
        {"command": "certify", "file": args.file, "certificate": jsonable(cert)},
        human,
    )
    return EXIT_OK


def _cmd_decompose(args) -> int:
    m = _load(args.file)
    dec = cartesian_decompose(m)
    with open(args.out_re, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(dec.re_part))
    with open(args.out_im, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(dec.im_part))
    print(f"wrote re part to {args.out_re} and im part to {args.out_im}")
    return EXIT_OK


def _cmd_gallery(args) -> int:
    if args.action == "list":
        for name in gallery_mod.list_entries():
            print(name)
        return EXIT_OK
    if args.action == "show":
        if not args.name:
            print("gallery show requires a name", file=sys.stderr)
            return EXIT_USAGE
        entry = gallery_mod.get(args.name)
        print(f"# {entry.name}: {entry.note}")
        sys.stdout.write(format_matrix(entry.matrix))
        return EXIT_OK
    # verify
    names = gallery_mod.list_entries() if (args.all or not args.name) else (args.name,)
    verdicts = [gallery_mod.verify(n) for n in names]
    if args.json:
        json.dump(
            {"command": "gallery-verify", "verdicts": [jsonable(v) for v in verdicts]},
            sys.stdout,
            indent=2,
        )
        sys.stdout.write("\n")
    else:
        for v in verdicts:
            line = f"{v.name}: {'pass' if v.passed else 'FAIL'}"
            if v.mismatches:
                line += "\n  " + "\n  ".join(v.mismatches)
            print(line)
    return EXIT_OK if all(v.passed for v in verdicts) else EXIT_INPUT_ERROR


def _cmd_volterra(args) -> int:
    report = volterra_report(args.n)
    human = "\n".join(
        [
            f"volterra discretization, n = {report.n}",
            f"  re part eigenvalue range: [{report.min_eig_re:.3e}, "
            f"{report.max_eig_re:.10f}]",
            f"  spectral radius (exact, diagonal): {report.spectral_radius_exact:.6g}",
            f"  gelfand tail g_{2 * report.n}"
            + (
                f" (truncated at k={report.gelfand_truncated_at})"
                if report.gelfand_truncated_at
                else ""
            )
            + f": {report.gelfand_tail:.6g}",
            f"  nilpotent: {report.nilpotent}",
            f"  certificate: "
            + (
                report.certificate.kind.value
                if report.certificate
                else "none"
            ),
        ]
    )
    _emit(args, {"command": "volterra", "report": jsonable(report)}, human)
    return EXIT_OK


_FUZZ_PROPERTIES = ("main", "corollary", "smalldim", "dim4", "trace")


def _fuzz_trial(prop: str, dim: int, trial_seed: int, tol: float | None) -> bool:
    cfg = GeneratorConfig(seed=trial_seed, order=dim)
    if prop == "main":
        t = random_accretive(cfg)
        if frobenius_norm(t) <= 1e-8:
            return True
        return (
            not nilpotency_index(t, tol).is_nilpotent
            and non_nilpotence_certificate(t, tol) is not None
        )
    t = random_nilpotent(cfg)
    if prop == "corollary":
        return opposite_signs_check(t, tol).passed
    if prop == "smalldim":
        return small_dim_symmetry_oracle(t, tol).passed
    if prop == "dim4":
        return dim4_multiplicity_oracle(t, tol).passed
    if prop == "trace":
        return abs(trace(t)) <= dim * 1e-10
    raise ValueError(f"unknown property {prop!r}")


def _cmd_fuzz(args) -> int:
    prop = args.property
    if prop == "smalldim" and args.dim not in (2, 3):
        print("property 'smalldim' needs --dim 2 or 3", file=sys.stderr)
        return EXIT_USAGE
    if prop == "dim4" and args.dim != 4:
        print("property 'dim4' needs --dim 4", file=sys.stderr)
        return EXIT_USAGE
    if prop != "main" and args.dim < 2:
        print(f"property {prop!r} needs --dim >= 2", file=sys.stderr)
        return EXIT_USAGE

    failures: list[dict] = []
    for i in range(args.trials):
        trial_seed = derive_seed(args.seed, i)
        if not _fuzz_trial(prop, args.dim, trial_seed, args.tol):
            failures.append({"trial": i, "seed": trial_seed})

    doc = {
        "command": "fuzz",
        "property": prop,
        "trials": args.trials,
        "dim": args.dim,
        "seed": args.seed,
        "rng": RNG_ALGORITHM,
        "failures": failures,
        "passed": not failures,
    }
    if args.json:
        json.dump(doc, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print(
            f"property {prop}: {args.trials} trials, dim {args.dim}, "
            f"seed {args.seed} [{RNG_ALGORITHM}]"
        )
        for f in failures:
            print(f"  FAIL trial {f['trial']} seed {f['seed']}")
        print("result: " + ("all passed" if not failures else f"{len(failures)} failures"))
    return EXIT_OK if not failures else EXIT_INPUT_ERROR


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilcert",
        description="Non-nilpotence certificates from the Hermitian split of a matrix",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    with_tol = argparse.ArgumentParser(add_help=False)
    with_tol.add_argument(
        "--tol",
        type=float,
        default=None,
        help="base tolerance coefficient (default 1e-10, scale-aware)",
    )

    p = sub.add_parser("analyze", parents=[common, with_tol], help="full report")
    p.add_argument("file")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser(
        "nilindex", parents=[common, with_tol], help="nilpotency index and norm trail"
    )
    p.add_argument("file")
    p.set_defaults(func=_cmd_nilindex)

    p = sub.add_parser(
        "certify",
        parents=[common, with_tol],
        help="non-nilpotence certificate (exit 3 if none)",
    )
    p.add_argument("file")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("decompose", help="write Hermitian parts to files")
    p.add_argument("file")
    p.add_argument("--out-re", required=True)
    p.add_argument("--out-im", required=True)
    p.set_defaults(func=_cmd_decompose, json=False)

    p = sub.add_parser("gallery", parents=[common], help="fixture matrices")
    p.add_argument("action", choices=("list", "show", "verify"))
    p.add_argument("name", nargs="?")
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=_cmd_gallery)

    p = sub.add_parser(
        "volterra", parents=[common], help="discretized integration operator report"
    )
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_volterra)

    p = sub.add_parser(
        "fuzz", parents=[common, with_tol], help="seeded property suites"
    )
    p.add_argument("--property", required=True, choices=_FUZZ_PROPERTIES)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--dim", type=int, default=4)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=_cmd_fuzz)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MatrixFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (OSError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
