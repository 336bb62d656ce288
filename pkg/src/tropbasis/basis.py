"""Extremality tests and the closed-form basis selection."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .core import BOTTOM, ONE, Scalar, normalize, support
from .generators import Generator, enumerate_candidates, w_pairs
from .system import IndexClassification, TwoRowSystem, classify

__all__ = [
    "AuxSets",
    "Basis",
    "compute_aux",
    "leq_i",
    "is_extremal_multiorder",
    "multiorder_filter",
    "decompose",
    "combine",
    "select_basis",
    "compute_basis",
]

Pair = Tuple[int, int]


@dataclass(frozen=True)
class AuxSets:
    """Index sets that drive the extremality conditions (0-based indices)."""

    W: FrozenSet[Pair]
    Wbar: FrozenSet[Pair]
    L1: Dict[int, FrozenSet[int]]
    L2: Dict[int, FrozenSet[int]]
    M1: Dict[Pair, FrozenSet[int]]
    M2: Dict[Pair, FrozenSet[int]]
    N1: Dict[Pair, FrozenSet[int]]
    N2: Dict[Pair, FrozenSet[int]]


@dataclass(frozen=True)
class Basis:
    """Extremal generators in canonical scaling (largest entry 0), sorted.

    Each generator keeps the family label and indices it was found under.
    """

    generators: Tuple[Generator, ...]
    n: int

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def keys(self) -> FrozenSet[tuple]:
        return frozenset(g.entries for g in self.generators)

    def vectors(self) -> List[Tuple[Scalar, ...]]:
        return [g.vector for g in self.generators]

    @classmethod
    def from_generators(cls, gens: Iterable[Generator], n: int) -> "Basis":
        """Canonicalize, deduplicate (first occurrence keeps its label) and sort."""
        seen: Dict[tuple, Generator] = {}
        for g in gens:
            key = g.canonical_key
            if key not in seen:
                seen[key] = g._replace(entries=key)
        return cls(tuple(sorted(seen.values(), key=_entries)), n)


def _entries(g: Generator):
    return g.entries


def compute_aux(sys: TwoRowSystem, cls: IndexClassification) -> AuxSets:
    a1, b1 = sys.A[0], sys.B[0]
    a2, b2 = sys.A[1], sys.B[1]
    I1, J1, I2, J2 = cls.I1, cls.J1, cls.I2, cls.J2
    I1bar, I2bar = cls.I1bar, cls.I2bar
    J12 = sorted(J1 & J2)

    W, Wbar = w_pairs(sys, cls)

    def g1(t, i):
        return a1[i] - b1[t]

    def g2(t, i):
        return a2[i] - b2[t]

    L1, L2 = {}, {}
    for i in sorted(I1 & I2):
        L1[i] = frozenset(t for t in J12 if g1(t, i) < g2(t, i))
        L2[i] = frozenset(t for t in J12 if g2(t, i) < g1(t, i))

    M1, N1 = {}, {}
    for l in sorted(J2 & I1):
        for i in sorted(I2 & I1bar):
            g2li = g2(l, i)
            M1[(i, l)] = frozenset(t for t in J12 if g1(t, l) + g2li < g2(t, i))
        for i in sorted(I1 & I2):
            g2li = g2(l, i)
            N1[(i, l)] = frozenset(t for t in L1[i] if g1(t, l) + g2li < g2(t, i))

    M2, N2 = {}, {}
    for k in sorted(J1 & I2):
        for i in sorted(I1 & I2bar):
            g1ki = g1(k, i)
            M2[(i, k)] = frozenset(t for t in J12 if g2(t, k) + g1ki < g1(t, i))
        for i in sorted(I1 & I2):
            g1ki = g1(k, i)
            N2[(i, k)] = frozenset(t for t in L2[i] if g2(t, k) + g1ki < g1(t, i))

    return AuxSets(W, Wbar, L1, L2, M1, M2, N1, N2)


def leq_i(x: Sequence[Scalar], y: Sequence[Scalar], i: int) -> bool:
    """``x <=_i y``: both finite at ``i`` and ``x - x_i <= y - y_i`` componentwise."""
    xi, yi = x[i], y[i]
    if xi is BOTTOM or yi is BOTTOM:
        return False
    for a, b in zip(x, y):
        if a is BOTTOM:
            continue
        if b is BOTTOM or a - xi > b - yi:
            return False
    return True


def _vec(v) -> Tuple[Scalar, ...]:
    return v.vector if isinstance(v, Generator) else tuple(v)


def is_extremal_multiorder(y, S: Sequence) -> bool:
    """True iff ``y`` is minimal for ``<=_i`` among ``S`` for some ``i`` in its support.

    Members of ``S`` proportional to ``y`` are ignored.
    """
    yv = _vec(y)
    ycan = normalize(yv)
    others = [zv for zv in map(_vec, S) if normalize(zv) != ycan]
    for i in sorted(support(yv)):
        if not any(leq_i(z, yv, i) for z in others):
            return True
    return False


def multiorder_filter(S: Sequence[Generator], n: int) -> Basis:
    """Basis of the cone generated by ``S`` via the multiorder principle."""
    uniq = Basis.from_generators(S, n).generators
    return Basis.from_generators((g for g in uniq if is_extremal_multiorder(g, uniq)), n)


def combine(terms, n: int) -> Tuple[Scalar, ...]:
    """``max_z (lam + z)`` over ``(lam, z)`` terms."""
    out = [BOTTOM] * n
    for lam, z in terms:
        for j, v in enumerate(_vec(z)):
            if v is BOTTOM or lam is BOTTOM:
                continue
            s = lam + v
            if out[j] is BOTTOM or s > out[j]:
                out[j] = s
    return tuple(out)


def decompose(y, S: Sequence) -> Optional[List[Tuple[Scalar, object]]]:
    """Express ``y`` as a max-plus combination of ``S``.

    Each member gets its largest admissible coefficient
    ``min_{j in supp z} (y_j - z_j)``; members that would need a coefficient
    against a BOTTOM coordinate of ``y`` are dropped.  Returns the
    ``(coefficient, member)`` list, or ``None`` when ``y`` is not generated.
    """
    yv = _vec(y)
    n = len(yv)
    terms = []
    for z in S:
        zv = _vec(z)
        lam = None
        for yj, zj in zip(yv, zv):
            if zj is BOTTOM:
                continue
            if yj is BOTTOM:
                lam = BOTTOM
                break
            d = yj - zj
            if lam is None or d < lam:
                lam = d
        if lam is None or lam is BOTTOM:
            continue
        terms.append((lam, z))
    if combine(terms, n) != yv:
        return None
    return terms


def select_basis(
    sys: TwoRowSystem,
    cls: IndexClassification,
    aux: AuxSets,
    candidates: Iterable[Generator],
) -> Basis:
    """Keep the candidates that satisfy their family's extremality condition."""
    K1, K2 = cls.K1, cls.K2
    J1K2 = cls.J1 & K2
    J2K1 = cls.J2 & K1
    I2K1 = cls.I2 & K1
    I1K2 = cls.I1 & K2
    W, Wbar = aux.W, aux.Wbar
    L1, L2, M1, M2, N1, N2 = aux.L1, aux.L2, aux.M1, aux.M2, aux.N1, aux.N2
    a1, b1, a2, b2 = sys.A[0], sys.B[0], sys.A[1], sys.B[1]
    empty: FrozenSet[int] = frozenset()

    def s2c(i, k, l):
        if (k, l) not in W:
            return False
        # proportional pair: keep the one with unit entry at l
        return not (i == k and (a1[l] - b1[k]) + (a2[k] - b2[l]) == ONE)

    always = lambda i, k, l: True  # noqa: E731
    rules = {
        "S1": always,
        "S2A1": always,
        "S2A2": always,
        "S2B": always,
        "S2C": s2c,
        "S3A": lambda i, k, l: (
            (k in J1K2 or k in L1.get(i, empty)) and (l in J2K1 or l in L2.get(i, empty))
        ),
        "S3B1": lambda i, k, l: (
            (i in I2K1 or (i, l) in Wbar) and (k in M1.get((i, l), empty) or k in J1K2)
        ),
        "S3B2": lambda i, k, l: (
            (i in I1K2 or (k, i) in Wbar) and (l in M2.get((i, k), empty) or l in J2K1)
        ),
        "S3C1": lambda i, k, l: k in J1K2 or k in N1.get((i, l), empty),
        "S3C2": lambda i, k, l: l in J2K1 or l in N2.get((i, k), empty),
        "S3D1": lambda i, k, l: (k, l) in W and (i in I2K1 or (i, l) in Wbar),
        "S3D2": lambda i, k, l: (k, l) in W and (i in I1K2 or (k, i) in Wbar),
        "S3E": lambda i, k, l: (k, l) in W,
    }

    return Basis.from_generators((g for g in candidates if rules[g.klass](g.i, g.k, g.l)), sys.n)


def _reduce_degenerate(sys: TwoRowSystem, cls: IndexClassification):
    """Handle rows with empty ``J``: their ``I`` coordinates must be BOTTOM.

    Returns the system restricted to the remaining coordinates, with each such
    row replaced by the vacuous row ``BOTTOM <= max_j x_j``, and the list of
    kept original indices.
    """
    drop = set()
    if not cls.J1:
        drop |= cls.I1
    if not cls.J2:
        drop |= cls.I2
    keep = [j for j in range(sys.n) if j not in drop]
    rows_a, rows_b = [], []
    for r, J in ((0, cls.J1), (1, cls.J2)):
        if J:
            rows_a.append(tuple(sys.A[r][j] for j in keep))
            rows_b.append(tuple(sys.B[r][j] for j in keep))
        else:
            rows_a.append(tuple(BOTTOM for _ in keep))
            rows_b.append(tuple(ONE for _ in keep))
    return keep, rows_a, rows_b


def compute_basis(sys: TwoRowSystem) -> Basis:
    """Basis of the solution cone of ``sys`` in canonical scaling."""
    cls = classify(sys)
    if cls.J1 and cls.J2:
        aux = compute_aux(sys, cls)
        cands = enumerate_candidates(sys, cls, aux.W)
        return select_basis(sys, cls, aux, cands)

    keep, rows_a, rows_b = _reduce_degenerate(sys, cls)
    if not keep:
        return Basis((), sys.n)
    sub = compute_basis(TwoRowSystem(tuple(rows_a), tuple(rows_b)))

    def lift(j):
        return None if j is None else keep[j]

    lifted = (
        Generator(g.klass, tuple((keep[j], v) for j, v in g.entries), sys.n, lift(g.i), lift(g.k), lift(g.l))
        for g in sub.generators
    )
    return Basis.from_generators(lifted, sys.n)
