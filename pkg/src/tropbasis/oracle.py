"""Brute-force reference path for small systems.

Gathers candidates as columns of generic Kleene stars (one per choice of
dominating terms), keeps the extremals by the multiorder principle and
compares with :func:`tropbasis.basis.compute_basis`.  Nothing here uses the
closed-form stars or the family conditions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List, Optional

from .basis import Basis, compute_basis, decompose, multiorder_filter
from .core import BOTTOM, ONE, Divergent, Matrix, Scalar, kleene_star
from .generators import Generator, build_Akl
from .system import TwoRowSystem, classify, gamma, is_solution

__all__ = [
    "OracleReport",
    "subeigen_generators",
    "gather_candidates",
    "oracle_basis",
    "cross_check",
    "random_system",
]


@dataclass
class OracleReport:
    basis_match: bool
    missing: List[Generator] = field(default_factory=list)
    extra: List[Generator] = field(default_factory=list)
    solution_violations: list = field(default_factory=list)
    membership_failures: list = field(default_factory=list)
    fast_size: int = 0
    oracle_size: int = 0


def _reach(A: Matrix, sources) -> set:
    """Indices reachable from ``sources`` along finite off-diagonal entries ``A[u][v]``."""
    seen = set(sources)
    stack = list(sources)
    while stack:
        u = stack.pop()
        for v, w in enumerate(A[u]):
            if w is not BOTTOM and v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def subeigen_generators(A: Matrix) -> List[tuple]:
    """Generators of ``{x : A (x) x <= x}`` for any square ``A``.

    A finite ``x_u`` forces every ``x_v`` with ``A[v][u]`` finite to be
    finite, so coordinates reachable from a positive cycle are BOTTOM in every
    solution.  Those are removed until the remaining star converges; its
    columns then generate the cone.
    """
    n = len(A)
    alive = list(range(n))
    while alive:
        sub = tuple(tuple(A[u][v] for v in alive) for u in alive)
        try:
            star = kleene_star(sub)
        except Divergent as exc:
            node = exc.node if exc.node is not None else 0
            # x_u = BOTTOM forces x_v = BOTTOM whenever A[u][v] is finite
            dead = _reach(sub, [node])
            alive = [u for pos, u in enumerate(alive) if pos not in dead]
            continue
        cols = []
        for c in range(len(alive)):
            vec = [BOTTOM] * n
            for r, u in enumerate(alive):
                vec[u] = star[r][c]
            cols.append(tuple(vec))
        return cols
    return []


def _choice_matrix(sys: TwoRowSystem, cls, k: Optional[int], l: Optional[int]) -> Matrix:
    """Constraint matrix for row 1 dominated by term ``k`` and row 2 by ``l``.

    ``None`` means that row's right side is BOTTOM, which forces its left side
    terms to BOTTOM; that is encoded as a loop of weight 1 on each of them.
    """
    if k is not None and l is not None:
        return build_Akl(sys, cls, k, l)
    n = sys.n
    rows = [[ONE if i == j else BOTTOM for j in range(n)] for i in range(n)]
    for row, t, I in ((1, k, cls.I1), (2, l, cls.I2)):
        for i in I:
            if t is None:
                rows[i][i] = 1
            else:
                g = gamma(sys, row, t, i)
                cur = rows[t][i]
                rows[t][i] = g if cur is BOTTOM or g > cur else cur
    return tuple(tuple(r) for r in rows)


def gather_candidates(sys: TwoRowSystem) -> List[Generator]:
    """Deduplicated star columns over all choices of dominating terms."""
    cls = classify(sys)
    seen = {}
    for k in sorted(cls.J1) + [None]:
        for l in sorted(cls.J2) + [None]:
            for col in subeigen_generators(_choice_matrix(sys, cls, k, l)):
                g = Generator.from_vector(col, "oracle", k=k, l=l)
                if g.entries:
                    seen.setdefault(g.canonical_key, g)
    return [g.canonicalized() for g in seen.values()]


def oracle_basis(sys: TwoRowSystem) -> Basis:
    return multiorder_filter(gather_candidates(sys), sys.n)


def cross_check(sys: TwoRowSystem, fast: Optional[Basis] = None) -> OracleReport:
    """Compare the closed-form basis with the brute-force one.

    ``fast`` overrides the basis under test (defaults to ``compute_basis``).
    """
    if fast is None:
        fast = compute_basis(sys)
    ref = oracle_basis(sys)
    fast_map = {g.entries: g for g in fast}
    ref_map = {g.entries: g for g in ref}
    missing = [g for key, g in ref_map.items() if key not in fast_map]
    extra = [g for key, g in fast_map.items() if key not in ref_map]
    violations = [g.vector for g in fast if not is_solution(sys, g.vector)]
    fast_gens = list(fast.generators)
    failures = [c.vector for c in gather_candidates(sys) if decompose(c, fast_gens) is None]
    return OracleReport(
        basis_match=not missing and not extra,
        missing=sorted(missing, key=lambda g: g.entries),
        extra=sorted(extra, key=lambda g: g.entries),
        solution_violations=violations,
        membership_failures=failures,
        fast_size=len(fast),
        oracle_size=len(ref),
    )


def random_system(
    n: int,
    rng: random.Random,
    bottom_prob: float = 0.3,
    low: int = -5,
    high: int = 5,
) -> TwoRowSystem:
    """Each entry BOTTOM with probability ``bottom_prob``, else uniform in ``[low, high]``."""

    def entry() -> Scalar:
        if rng.random() < bottom_prob:
            return BOTTOM
        return rng.randint(low, high)

    rows = [tuple(entry() for _ in range(n)) for _ in range(4)]
    return TwoRowSystem((rows[0], rows[1]), (rows[2], rows[3]))
