"""Plain-text matrix files: parsing and exact round-trip formatting.

Format::

    cmat <n>
    <entry> ... <entry>      (n entries per line, n lines)

An entry is ``<real>`` or ``<real><sign><imag>i`` with no interior
spaces; ``<real>`` is a signed decimal literal with optional exponent,
``<imag>`` an unsigned one (its sign is the separator).  A pure imaginary
needs an explicit real part, e.g. ``0+1i``.  Examples: ``2``, ``-3.5``,
``1e-3``, ``0+1i``, ``2-0.5i``.

The formatter emits shortest round-trip float literals, so
parse(format(M)) reproduces M entry for entry, bit for bit.
"""

from __future__ import annotations

import math
import re

from .matcore import ComplexMatrix

__all__ = ["MatrixFormatError", "parse_matrix", "format_matrix"]

_DEC = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_ENTRY_RE = re.compile(rf"^([+-]?{_DEC})(?:([+-])({_DEC})i)?$")
_HEADER_RE = re.compile(r"^cmat\s+(\d+)$")


class MatrixFormatError(ValueError):
    """Malformed matrix text; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def parse_matrix(text: str) -> ComplexMatrix:
    """Parse matrix text, rejecting bad counts, scalars, and non-finite values."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise MatrixFormatError("missing 'cmat <n>' header", 1)
    header = _HEADER_RE.match(lines[0].strip())
    if not header:
        raise MatrixFormatError(
            f"expected header 'cmat <n>', got {lines[0].strip()!r}", 1
        )
    n = int(header.group(1))
    if n < 1:
        raise MatrixFormatError("matrix order must be at least 1", 1)

    rows: list[list[complex]] = []
    lineno = 1
    for i in range(n):
        lineno = i + 2
        if i + 1 >= len(lines):
            raise MatrixFormatError(f"expected {n} rows, found {i}", lineno)
        line = lines[i + 1]
        tokens = list(re.finditer(r"\S+", line))
        if len(tokens) != n:
            col = tokens[n].start() + 1 if len(tokens) > n else len(line) + 1
            raise MatrixFormatError(
                f"row {i + 1} expects {n} entries, found {len(tokens)}", lineno, col
            )
        row = []
        for tok in tokens:
            row.append(_parse_entry(tok.group(), lineno, tok.start() + 1))
        rows.append(row)

    for extra_idx in range(n + 1, len(lines)):
        if lines[extra_idx].strip():
            raise MatrixFormatError(
                f"unexpected content after {n} rows", extra_idx + 1
            )
    return ComplexMatrix(rows)


def _parse_entry(token: str, line: int, column: int) -> complex:
    m = _ENTRY_RE.match(token)
    if not m:
        raise MatrixFormatError(f"malformed entry {token!r}", line, column)
    re_part = float(m.group(1))
    if m.group(3) is not None:
        im_part = float(m.group(3))
        if m.group(2) == "-":
            im_part = -im_part
    else:
        im_part = 0.0
    if not (math.isfinite(re_part) and math.isfinite(im_part)):
        raise MatrixFormatError(
            f"entry {token!r} is not finite in 64-bit precision", line, column
        )
    return complex(re_part, im_part)


def format_matrix(m: ComplexMatrix) -> str:
    """Render in the cmat format with exact round-trip literals."""
    lines = [f"cmat {m.n}"]
    a = m.array
    for i in range(m.n):
        lines.append(" ".join(_format_entry(a[i, j]) for j in range(m.n)))
    return "\n".join(lines) + "\n"


def _format_entry(z: complex) -> str:
    re_s = repr(float(z.real))
    im = float(z.imag)
    if im == 0.0 and not math.copysign(1.0, im) < 0:
        return re_s
    sign = "-" if (im < 0.0 or math.copysign(1.0, im) < 0) else "+"
    return f"{re_s}{sign}{repr(abs(im))}i"
