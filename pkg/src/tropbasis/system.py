"""Two-row max-plus systems ``A (x) x <= B (x) x`` and their index classes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    BOTTOM,
    DimensionMismatch,
    InversionOfBottom,
    Matrix,
    Scalar,
    as_scalar,
    t_sum,
)

__all__ = ["TwoRowSystem", "IndexClassification", "classify", "gamma", "is_solution", "row_values"]


@dataclass(frozen=True)
class TwoRowSystem:
    """The pair ``(A, B)`` of ``2 x n`` matrices.

    Row ``r`` reads ``max_j A[r][j] + x_j <= max_j B[r][j] + x_j``.
    Indices are 0-based here; files and CLI output are 1-based.
    """

    A: Matrix
    B: Matrix

    def __post_init__(self):
        A = tuple(tuple(as_scalar(v) for v in row) for row in self.A)
        B = tuple(tuple(as_scalar(v) for v in row) for row in self.B)
        if len(A) != 2 or len(B) != 2:
            raise DimensionMismatch("A and B must have exactly two rows")
        n = len(A[0])
        if n < 1 or any(len(row) != n for row in A + B):
            raise DimensionMismatch("all rows of A and B must have the same length n >= 1")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)

    @property
    def n(self) -> int:
        return len(self.A[0])

    @classmethod
    def from_rows(cls, a1, a2, b1, b2) -> "TwoRowSystem":
        return cls((tuple(a1), tuple(a2)), (tuple(b1), tuple(b2)))


@dataclass(frozen=True)
class IndexClassification:
    """Per-row partition of the indices.

    ``J_r``: ``a_ri <= b_ri`` with ``b_ri`` finite; ``I_r``: ``a_ri > b_ri``;
    ``K_r``: both entries are BOTTOM.
    """

    I1: frozenset
    J1: frozenset
    K1: frozenset
    I2: frozenset
    J2: frozenset
    K2: frozenset
    n: int

    @property
    def I1bar(self) -> frozenset:
        return self.J1 | self.K1

    @property
    def I2bar(self) -> frozenset:
        return self.J2 | self.K2


def _classify_row(a: Sequence[Scalar], b: Sequence[Scalar]):
    I, J, K = set(), set(), set()
    for i, (ai, bi) in enumerate(zip(a, b)):
        if ai is BOTTOM and bi is BOTTOM:
            K.add(i)
        elif bi is not BOTTOM and (ai is BOTTOM or ai <= bi):
            J.add(i)
        else:
            I.add(i)
    return frozenset(I), frozenset(J), frozenset(K)


def classify(sys: TwoRowSystem) -> IndexClassification:
    I1, J1, K1 = _classify_row(sys.A[0], sys.B[0])
    I2, J2, K2 = _classify_row(sys.A[1], sys.B[1])
    return IndexClassification(I1, J1, K1, I2, J2, K2, sys.n)


def gamma(sys: TwoRowSystem, row: int, k: int, i: int) -> Scalar:
    """``a[row][i] - b[row][k]`` for ``row`` in {1, 2} and 0-based ``k``, ``i``."""
    r = row - 1
    b = sys.B[r][k]
    if b is BOTTOM:
        raise InversionOfBottom(f"b[{row}][{k + 1}] is BOTTOM")
    a = sys.A[r][i]
    return BOTTOM if a is BOTTOM else a - b


def row_values(sys: TwoRowSystem, x: Sequence[Scalar]):
    """Left and right hand sides of both rows at ``x``: ``((lhs1, rhs1), (lhs2, rhs2))``."""
    if len(x) != sys.n:
        raise DimensionMismatch(f"vector has length {len(x)}, system has n={sys.n}")
    out = []
    for r in range(2):
        lhs = t_sum(a + v for a, v in zip(sys.A[r], x))
        rhs = t_sum(b + v for b, v in zip(sys.B[r], x))
        out.append((lhs, rhs))
    return tuple(out)


def is_solution(sys: TwoRowSystem, x: Sequence[Scalar]) -> bool:
    return all(lhs <= rhs for lhs, rhs in row_values(sys, x))
