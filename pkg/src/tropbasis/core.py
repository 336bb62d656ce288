"""Exact max-plus arithmetic on scalars, vectors and matrices.

Scalars are plain Python ``int`` or ``fractions.Fraction`` values, plus the
singleton :data:`BOTTOM` standing for minus infinity (the semiring zero).
Vectors are tuples of scalars and matrices are tuples of row tuples.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Tuple, Union

__all__ = [
    "BOTTOM",
    "ONE",
    "Scalar",
    "Vector",
    "Matrix",
    "TropicalError",
    "InversionOfBottom",
    "DimensionMismatch",
    "Divergent",
    "t_add",
    "t_mul",
    "t_inv",
    "t_sum",
    "support",
    "identity",
    "unit_vector",
    "mat_mul",
    "mat_add",
    "kleene_star",
    "is_subeigen",
    "leq",
    "scale",
    "normalize",
    "as_scalar",
    "format_scalar",
]


class TropicalError(Exception):
    """Base class for errors raised by this package."""


class InversionOfBottom(TropicalError, ArithmeticError):
    """Raised when the semiring zero is inverted."""


class DimensionMismatch(TropicalError, ValueError):
    pass


class Divergent(TropicalError):
    """The Kleene star does not converge: some cycle has positive weight.

    ``node`` is an index lying on a closed walk of positive weight, when known.
    """

    def __init__(self, message: str = "Kleene star diverges", node: int | None = None):
        super().__init__(message)
        self.node = node


class _Bottom:
    """Minus infinity. Absorbing for ``+``, below every finite number."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "BOTTOM"

    def __reduce__(self):
        return (_Bottom, ())

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise InversionOfBottom("cannot invert the semiring zero")
        return self

    def __rsub__(self, other):
        raise InversionOfBottom("cannot invert the semiring zero")

    def __neg__(self):
        raise InversionOfBottom("cannot invert the semiring zero")

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("tropbasis.BOTTOM")

    def __bool__(self):
        return False


BOTTOM = _Bottom()
ONE = 0

Scalar = Union[int, Fraction, _Bottom]
Vector = Tuple[Scalar, ...]
Matrix = Tuple[Tuple[Scalar, ...], ...]


def as_scalar(value) -> Scalar:
    """Coerce ``value`` to an exact scalar (``None`` and ``-inf`` map to BOTTOM)."""
    if value is None or value is BOTTOM:
        return BOTTOM
    if isinstance(value, float):
        if value == float("-inf"):
            return BOTTOM
        raise TypeError("floating point values are not accepted; use int or Fraction")
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        text = value.strip()
        if text in ("-inf", "BOTTOM"):
            return BOTTOM
        return as_scalar(Fraction(text))
    raise TypeError(f"unsupported scalar {value!r}")


def format_scalar(a: Scalar) -> str:
    if a is BOTTOM:
        return "-inf"
    return str(a)


def t_add(a: Scalar, b: Scalar) -> Scalar:
    """Tropical sum: ``max(a, b)``."""
    if a is BOTTOM:
        return b
    if b is BOTTOM:
        return a
    return a if a >= b else b


def t_mul(a: Scalar, b: Scalar) -> Scalar:
    """Tropical product: ``a + b``, BOTTOM if either factor is BOTTOM."""
    if a is BOTTOM or b is BOTTOM:
        return BOTTOM
    return a + b


def t_inv(a: Scalar) -> Scalar:
    if a is BOTTOM:
        raise InversionOfBottom("cannot invert the semiring zero")
    return -a


def t_sum(values) -> Scalar:
    """Tropical sum of an iterable (BOTTOM when empty)."""
    acc = BOTTOM
    for v in values:
        if v is not BOTTOM and (acc is BOTTOM or v > acc):
            acc = v
    return acc


def support(x: Sequence[Scalar]) -> frozenset:
    return frozenset(i for i, v in enumerate(x) if v is not BOTTOM)


def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else BOTTOM for j in range(n)) for i in range(n))


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else BOTTOM for j in range(n))


def _is_matrix(X) -> bool:
    return len(X) > 0 and isinstance(X[0], (tuple, list))


def mat_mul(A: Matrix, X):
    """Tropical product of a matrix with a matrix or a vector."""
    cols = len(A[0]) if A else 0
    if _is_matrix(X):
        if len(X) != cols:
            raise DimensionMismatch(f"inner dimensions {cols} and {len(X)} differ")
        XT = list(zip(*X))
        return tuple(tuple(_dot(row, col) for col in XT) for row in A)
    if len(X) != cols and A:
        raise DimensionMismatch(f"matrix has {cols} columns, vector has length {len(X)}")
    return tuple(_dot(row, X) for row in A)


def _dot(row, col) -> Scalar:
    acc = BOTTOM
    for a, b in zip(row, col):
        if a is BOTTOM or b is BOTTOM:
            continue
        s = a + b
        if acc is BOTTOM or s > acc:
            acc = s
    return acc


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    if len(A) != len(B) or any(len(r) != len(s) for r, s in zip(A, B)):
        raise DimensionMismatch("matrix shapes differ")
    return tuple(tuple(t_add(a, b) for a, b in zip(r, s)) for r, s in zip(A, B))


def kleene_star(A: Matrix) -> Matrix:
    """Return ``I + A + A^2 + ...`` or raise :class:`Divergent`.

    Floyd-Warshall closure over (max, +); a diagonal entry that becomes
    positive signals a cycle of positive weight.
    """
    n = len(A)
    if any(len(row) != n for row in A):
        raise DimensionMismatch("kleene_star needs a square matrix")
    C = [list(row) for row in A]
    for m in range(n):
        Cm = C[m]
        cmm = Cm[m]
        if cmm is not BOTTOM and cmm > 0:
            raise Divergent(node=m)
        for i in range(n):
            Ci = C[i]
            cim = Ci[m]
            if cim is BOTTOM:
                continue
            for j in range(n):
                cmj = Cm[j]
                if cmj is BOTTOM:
                    continue
                s = cim + cmj
                cij = Ci[j]
                if cij is BOTTOM or s > cij:
                    Ci[j] = s
    for i in range(n):
        cii = C[i][i]
        if cii is not BOTTOM and cii > 0:
            raise Divergent(node=i)
        C[i][i] = ONE
    return tuple(tuple(row) for row in C)


def leq(x: Sequence[Scalar], y: Sequence[Scalar]) -> bool:
    """Componentwise ``x <= y`` with BOTTOM below everything."""
    if len(x) != len(y):
        raise DimensionMismatch("vectors have different lengths")
    for a, b in zip(x, y):
        if a is BOTTOM:
            continue
        if b is BOTTOM or a > b:
            return False
    return True


def is_subeigen(A: Matrix, x: Sequence[Scalar]) -> bool:
    if len(A) != len(x):
        raise DimensionMismatch("matrix and vector sizes differ")
    return leq(mat_mul(A, tuple(x)), x)


def scale(x: Sequence[Scalar], lam: Scalar) -> Vector:
    """``lam (x) x``."""
    return tuple(t_mul(lam, v) for v in x)


def normalize(x: Sequence[Scalar]) -> Vector:
    """Shift ``x`` so its largest finite entry is 0 (all-BOTTOM stays as is)."""
    top = t_sum(x)
    if top is BOTTOM:
        return tuple(x)
    return tuple(BOTTOM if v is BOTTOM else v - top for v in x)
