"""Reading and writing the plain-text ``dsm`` matrix format.

A document holds one or more matrices.  Each matrix is a line with its order
``n`` followed by ``n`` rows of whitespace-separated entries (integers or
``p/q`` fractions).  Lines whose first non-blank character is ``#`` and blank
lines are ignored.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .exact_matrix import ExactMatrix


class DsmFormatError(ValueError):
    """Raised for malformed dsm text."""


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if s and not s.startswith("#"):
            out.append((no, s))
    return out


def _entry(tok: str, no: int) -> Fraction:
    try:
        if "." in tok or "e" in tok.lower():
            raise ValueError
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise DsmFormatError(f"line {no}: bad entry {tok!r}") from None


def parse_stream(text: str) -> list[ExactMatrix]:
    lines = _lines(text)
    out: list[ExactMatrix] = []
    pos = 0
    while pos < len(lines):
        no, head = lines[pos]
        try:
            n = int(head)
        except ValueError:
            raise DsmFormatError(f"line {no}: expected matrix order, got {head!r}") from None
        if n < 1:
            raise DsmFormatError(f"line {no}: order must be positive")
        if len(lines) - pos - 1 < n:
            raise DsmFormatError(f"line {no}: expected {n} rows")
        rows = []
        for k in range(n):
            rno, row = lines[pos + 1 + k]
            toks = row.split()
            if len(toks) != n:
                raise DsmFormatError(f"line {rno}: expected {n} entries, found {len(toks)}")
            rows.append([_entry(t, rno) for t in toks])
        out.append(ExactMatrix.from_rows(rows))
        pos += n + 1
    return out


def parse(text: str) -> ExactMatrix:
    """Parse exactly one matrix."""
    mats = parse_stream(text)
    if len(mats) != 1:
        raise DsmFormatError(f"expected one matrix, found {len(mats)}")
    return mats[0]


def read_file(path: str) -> ExactMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def format_matrix(A: ExactMatrix, comment: str | None = None) -> str:
    cells = [[str(x) for x in r] for r in A.rows]
    w = max(len(c) for r in cells for c in r)
    head = f"# {comment}\n" if comment else ""
    body = "\n".join(" ".join(c.rjust(w) for c in r) for r in cells)
    return f"{head}{A.n}\n{body}\n"


def format_stream(mats: Iterable[ExactMatrix], comments: Iterable[str] | None = None) -> str:
    mats = list(mats)
    cs = list(comments) if comments is not None else [None] * len(mats)
    return "\n".join(format_matrix(A, c) for A, c in zip(mats, cs))


def canonical_key(A: ExactMatrix) -> str:
    """Single-line canonical text used for deduplication."""
    return ";".join(",".join(str(x) for x in r) for r in A.rows)
