"""Candidate generators of the solution cone.

The solution set of a two-row system is the union over ``k in J1``,
``l in J2`` of the subeigenvector cones ``{x : A_kl (x) x <= x}``.  Each
``A_kl`` has at most two non-unit rows, so its Kleene star and its columns
have closed forms; the columns are collected here into labelled families.
"""

from __future__ import annotations

from typing import List, NamedTuple, Optional, Tuple

from .core import BOTTOM, ONE, Divergent, Matrix, Scalar, TropicalError, t_add
from .system import IndexClassification, TwoRowSystem, gamma

__all__ = [
    "CLASSES",
    "Generator",
    "IndexNotInJ",
    "build_Akl",
    "star_Akl",
    "star_case",
    "w_pairs",
    "enumerate_candidates",
]

CLASSES = (
    "S1", "S2A1", "S2A2", "S2B", "S2C",
    "S3A", "S3B1", "S3B2", "S3C1", "S3C2", "S3D1", "S3D2", "S3E",
)
_CLASS_RANK = {name: pos for pos, name in enumerate(CLASSES)}


class IndexNotInJ(TropicalError, ValueError):
    pass


class Generator(NamedTuple):
    """A candidate vector with its family label and defining indices.

    ``entries`` holds the finite coordinates as ``(index, value)`` pairs sorted
    by index; ``i``, ``k``, ``l`` are 0-based and ``None`` when unused.
    """

    klass: str
    entries: Tuple[Tuple[int, Scalar], ...]
    n: int
    i: Optional[int] = None
    k: Optional[int] = None
    l: Optional[int] = None

    @property
    def vector(self) -> Tuple[Scalar, ...]:
        out = [BOTTOM] * self.n
        for idx, v in self.entries:
            out[idx] = v
        return tuple(out)

    @property
    def support(self) -> frozenset:
        return frozenset(idx for idx, _ in self.entries)

    @property
    def canonical_key(self) -> Tuple[Tuple[int, Scalar], ...]:
        if not self.entries:
            return ()
        top = max(v for _, v in self.entries)
        return tuple((idx, v - top) for idx, v in self.entries)

    def canonicalized(self) -> "Generator":
        return Generator(self.klass, self.canonical_key, self.n, self.i, self.k, self.l)

    def sort_key(self):
        return (
            _CLASS_RANK[self.klass],
            -1 if self.i is None else self.i,
            -1 if self.k is None else self.k,
            -1 if self.l is None else self.l,
        )

    @classmethod
    def from_vector(cls, vector, klass: str = "", i=None, k=None, l=None) -> "Generator":
        entries = tuple((idx, v) for idx, v in enumerate(vector) if v is not BOTTOM)
        return cls(klass, entries, len(vector), i, k, l)


def _check_pair(cls: IndexClassification, k: int, l: int) -> None:
    if k not in cls.J1:
        raise IndexNotInJ(f"k={k + 1} is not in J1")
    if l not in cls.J2:
        raise IndexNotInJ(f"l={l + 1} is not in J2")


def build_Akl(sys: TwoRowSystem, cls: IndexClassification, k: int, l: int) -> Matrix:
    """Matrix whose subeigenvectors are the solutions with row 1 dominated by
    term ``k`` and row 2 dominated by term ``l`` (0-based indices)."""
    _check_pair(cls, k, l)
    n = sys.n
    rows = [[ONE if i == j else BOTTOM for j in range(n)] for i in range(n)]
    for i in cls.I1:
        rows[k][i] = t_add(rows[k][i], gamma(sys, 1, k, i))
    for i in cls.I2:
        rows[l][i] = t_add(rows[l][i], gamma(sys, 2, l, i))
    return tuple(tuple(r) for r in rows)


def star_case(cls: IndexClassification, k: int, l: int) -> int:
    """Which of the five structural cases the pair ``(k, l)`` falls into."""
    _check_pair(cls, k, l)
    if k == l:
        return 1
    k_in_I2 = k in cls.I2
    l_in_I1 = l in cls.I1
    if not k_in_I2 and not l_in_I1:
        return 2
    if k_in_I2 and not l_in_I1:
        return 3
    if not k_in_I2 and l_in_I1:
        return 4
    return 5


def star_Akl(sys: TwoRowSystem, cls: IndexClassification, k: int, l: int) -> Matrix:
    """Kleene star of :func:`build_Akl` from the closed-form row formulas.

    Raises :class:`Divergent` when ``k`` and ``l`` close a positive 2-cycle.
    """
    case = star_case(cls, k, l)
    A = build_Akl(sys, cls, k, l)
    if case in (1, 2):
        return A

    n = sys.n
    g1 = lambda t, i: gamma(sys, 1, t, i)  # noqa: E731
    g2 = lambda t, i: gamma(sys, 2, t, i)  # noqa: E731
    I1, I2 = cls.I1, cls.I2

    if case == 5 and g1(k, l) + g2(l, k) > ONE:
        raise Divergent(f"positive cycle through k={k + 1}, l={l + 1}", node=k)

    rows = [list(r) for r in A]
    if case in (3, 5):
        row = [BOTTOM] * n
        for i in range(n):
            if i in I1 and i not in I2:
                row[i] = g2(l, k) + g1(k, i)
            elif i in I1 and i in I2:
                row[i] = t_add(g2(l, i), g2(l, k) + g1(k, i))
            elif i in I2:
                row[i] = g2(l, i)
        row[l] = t_add(ONE, row[l])
        rows[l] = row
    if case in (4, 5):
        row = [BOTTOM] * n
        for i in range(n):
            if i in I2 and i not in I1:
                row[i] = g1(k, l) + g2(l, i)
            elif i in I1 and i in I2:
                row[i] = t_add(g1(k, i), g1(k, l) + g2(l, i))
            elif i in I1:
                row[i] = g1(k, i)
        row[k] = t_add(ONE, row[k])
        rows[k] = row
    return tuple(tuple(r) for r in rows)


def w_pairs(sys: TwoRowSystem, cls: IndexClassification):
    """Split ``(J1 & I2) x (J2 & I1)`` by the sign of the 2-cycle weight.

    Returns ``(W, Wbar)``: pairs with weight ``<= 0`` and ``> 0``.
    """
    A1, B1, A2, B2 = sys.A[0], sys.B[0], sys.A[1], sys.B[1]
    W, Wbar = set(), set()
    for k in sorted(cls.J1 & cls.I2):
        for l in sorted(cls.J2 & cls.I1):
            w = (A1[l] - B1[k]) + (A2[k] - B2[l])
            (W if w <= ONE else Wbar).add((k, l))
    return frozenset(W), frozenset(Wbar)


def _gen(klass, n, i, k, l, *pairs) -> Generator:
    # index-set preconditions keep every coefficient finite
    assert BOTTOM not in [v for _, v in pairs], f"{klass} coefficient is BOTTOM at {(i, k, l)}"
    return Generator(klass, tuple(sorted(pairs)), n, i, k, l)


def enumerate_candidates(
    sys: TwoRowSystem, cls: IndexClassification, W=None
) -> List[Generator]:
    """All candidate generators, ordered by family and then by ``(i, k, l)``.

    Requires ``J1`` and ``J2`` nonempty.
    """
    if not cls.J1 or not cls.J2:
        raise ValueError("enumerate_candidates requires nonempty J1 and J2")
    if W is None:
        W, _ = w_pairs(sys, cls)
    n = sys.n
    a1, b1 = sys.A[0], sys.B[0]
    a2, b2 = sys.A[1], sys.B[1]
    I1, J1, K1, I2, J2, K2 = cls.I1, cls.J1, cls.K1, cls.I2, cls.J2, cls.K2
    I1bar, I2bar = cls.I1bar, cls.I2bar

    def s(x):
        return sorted(x)

    out: List[Generator] = []
    emit = out.append

    for i in s(I1bar & I2bar):
        emit(Generator("S1", ((i, ONE),), n, i))

    for i in s(I1 & I2bar):
        for k in s(J1 & I2bar):
            emit(_gen("S2A1", n, i, k, None, (k, a1[i] - b1[k]), (i, ONE)))

    for i in s(I2 & I1bar):
        for l in s(J2 & I1bar):
            emit(_gen("S2A2", n, i, None, l, (l, a2[i] - b2[l]), (i, ONE)))

    J12 = s(J1 & J2)
    for i in s(I1 & I2):
        for k in J12:
            emit(_gen("S2B", n, i, k, None, (k, t_add(a1[i] - b1[k], a2[i] - b2[k])), (i, ONE)))

    s2c = []
    for k, l in W:
        # phi_lk: unit at l; phi_kl: unit at k
        s2c.append(_gen("S2C", n, l, k, l, (k, a1[l] - b1[k]), (l, ONE)))
        s2c.append(_gen("S2C", n, k, k, l, (l, a2[k] - b2[l]), (k, ONE)))
    out.extend(sorted(s2c, key=Generator.sort_key))

    J1_nI2 = s(J1 & I2bar)
    J2_nI1 = s(J2 & I1bar)
    J1_I2 = s(J1 & I2)
    J2_I1 = s(J2 & I1)
    I12 = s(I1 & I2)
    I2_nI1 = s(I2 & I1bar)
    I1_nI2 = s(I1 & I2bar)

    # S3A: k != l (k == l is the S2B column)
    for i in I12:
        for k in J1_nI2:
            ck = a1[i] - b1[k]
            for l in J2_nI1:
                if k != l:
                    emit(_gen("S3A", n, i, k, l, (k, ck), (l, a2[i] - b2[l]), (i, ONE)))

    for i in I2_nI1:
        for k in J1_nI2:
            for l in J2_I1:
                cl = a2[i] - b2[l]
                emit(_gen("S3B1", n, i, k, l, (k, (a1[l] - b1[k]) + cl), (l, cl), (i, ONE)))

    for i in I1_nI2:
        for k in J1_I2:
            ck = a1[i] - b1[k]
            for l in J2_nI1:
                emit(_gen("S3B2", n, i, k, l, (l, (a2[k] - b2[l]) + ck), (k, ck), (i, ONE)))

    for i in I12:
        for k in J1_nI2:
            g1ki = a1[i] - b1[k]
            for l in J2_I1:
                cl = a2[i] - b2[l]
                ck = t_add(g1ki, (a1[l] - b1[k]) + cl)
                emit(_gen("S3C1", n, i, k, l, (k, ck), (l, cl), (i, ONE)))

    for i in I12:
        for k in J1_I2:
            ck = a1[i] - b1[k]
            for l in J2_nI1:
                cl = t_add(a2[i] - b2[l], (a2[k] - b2[l]) + ck)
                emit(_gen("S3C2", n, i, k, l, (l, cl), (k, ck), (i, ONE)))

    Wl = sorted(W)
    for i in I2_nI1:
        for k, l in Wl:
            if i != k:
                cl = a2[i] - b2[l]
                emit(_gen("S3D1", n, i, k, l, (k, (a1[l] - b1[k]) + cl), (l, cl), (i, ONE)))

    for i in I1_nI2:
        for k, l in Wl:
            if i != l:
                ck = a1[i] - b1[k]
                emit(_gen("S3D2", n, i, k, l, (l, (a2[k] - b2[l]) + ck), (k, ck), (i, ONE)))

    for i in I12:
        for k, l in Wl:
            g1ki = a1[i] - b1[k]
            g2li = a2[i] - b2[l]
            cl = t_add(g2li, (a2[k] - b2[l]) + g1ki)
            ck = t_add(g1ki, (a1[l] - b1[k]) + g2li)
            emit(_gen("S3E", n, i, k, l, (l, cl), (k, ck), (i, ONE)))

    return out
