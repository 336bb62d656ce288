"""Text formats for systems and generator lists.

A system file has four rows of ``n`` tokens: A row 1, A row 2, B row 1,
B row 2.  A token is an integer, a rational ``p/q`` or ``-inf``.  Anything
after ``#`` on a line is ignored.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import List, Sequence

from .core import BOTTOM, Scalar, TropicalError, format_scalar
from .system import TwoRowSystem

__all__ = [
    "ParseError",
    "RowLengthMismatch",
    "parse_token",
    "parse_system",
    "render_system",
    "parse_vectors",
    "format_vector",
    "format_generator",
    "generator_record",
]

_TOKEN = re.compile(r"^[+-]?\d+(/\d+)?$")


class ParseError(TropicalError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class RowLengthMismatch(ParseError):
    pass


def parse_token(tok: str, line: int | None = None, column: int | None = None) -> Scalar:
    if tok == "-inf":
        return BOTTOM
    if not _TOKEN.match(tok):
        raise ParseError(f"malformed token {tok!r}", line, column)
    if "/" in tok:
        p, q = tok.split("/")
        if int(q) == 0:
            raise ParseError(f"zero denominator in {tok!r}", line, column)
        value = Fraction(int(p), int(q))
        return value.numerator if value.denominator == 1 else value
    return int(tok)


def _data_lines(text: str):
    """Yield ``(line_number, [(column, token), ...])`` for non-blank lines."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", body)]
        if toks:
            yield lineno, toks


def parse_system(text: str) -> TwoRowSystem:
    rows: List[List[Scalar]] = []
    for lineno, toks in _data_lines(text):
        if len(rows) == 4:
            raise ParseError("more than four rows", lineno)
        rows.append([parse_token(t, lineno, col) for col, t in toks])
        if len(rows) > 1 and len(rows[-1]) != len(rows[0]):
            raise RowLengthMismatch(
                f"row has {len(rows[-1])} entries, expected {len(rows[0])}", lineno
            )
    if len(rows) != 4:
        raise ParseError(f"expected four rows (A1, A2, B1, B2), found {len(rows)}")
    return TwoRowSystem((tuple(rows[0]), tuple(rows[1])), (tuple(rows[2]), tuple(rows[3])))


def render_system(sys: TwoRowSystem) -> str:
    lines = ["# rows: A1, A2, B1, B2"]
    for row in (*sys.A, *sys.B):
        lines.append(format_vector(row))
    return "\n".join(lines) + "\n"


def format_vector(v: Sequence[Scalar]) -> str:
    return " ".join(format_scalar(a) for a in v)


def _slot(j) -> str:
    return "-" if j is None else str(j + 1)


def format_generator(g) -> str:
    return f"class={g.klass} i={_slot(g.i)} k={_slot(g.k)} l={_slot(g.l)} vec={format_vector(g.vector)}"


def generator_record(g) -> dict:
    return {
        "class": g.klass,
        "i": None if g.i is None else g.i + 1,
        "k": None if g.k is None else g.k + 1,
        "l": None if g.l is None else g.l + 1,
        "vec": [format_scalar(a) for a in g.vector],
    }


def parse_vectors(text: str, n: int) -> List[tuple]:
    """Vectors from ``solve`` output (text or JSON) or plain rows of tokens."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
            raw = [rec["vec"] for rec in doc["generators"]]
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"invalid basis JSON: {exc}") from None
        vecs = [tuple(parse_token(str(t)) for t in r) for r in raw]
    else:
        vecs = []
        for lineno, raw_line in enumerate(text.splitlines(), start=1):
            body = raw_line.split("#", 1)[0].strip()
            if not body or body.startswith("basis size:"):
                continue
            if "vec=" in body:
                body = body.split("vec=", 1)[1]
            vecs.append(tuple(parse_token(t, lineno) for t in body.split()))
    for v in vecs:
        if len(v) != n:
            raise RowLengthMismatch(f"vector has {len(v)} entries, system has n={n}")
    return vecs
