"""Bases of max-plus cones defined by two linear inequalities."""

from .basis import (
    AuxSets,
    Basis,
    compute_aux,
    compute_basis,
    decompose,
    is_extremal_multiorder,
    leq_i,
    multiorder_filter,
    select_basis,
)
from .core import (
    BOTTOM,
    DimensionMismatch,
    Divergent,
    InversionOfBottom,
    TropicalError,
    identity,
    is_subeigen,
    kleene_star,
    mat_mul,
    t_add,
    t_inv,
    t_mul,
)
from .generators import Generator, IndexNotInJ, build_Akl, enumerate_candidates, star_Akl
from .oracle import OracleReport, cross_check, oracle_basis, random_system
from .system import IndexClassification, TwoRowSystem, classify, gamma, is_solution

__version__ = "0.1.0"
