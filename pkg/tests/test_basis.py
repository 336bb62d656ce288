import random

import pytest

from tropbasis import BOTTOM as B
from tropbasis import TwoRowSystem, classify, compute_basis, is_solution
from tropbasis.basis import (
    compute_aux,
    combine,
    decompose,
    is_extremal_multiorder,
    leq_i,
    multiorder_filter,
    select_basis,
)
from tropbasis.generators import Generator, enumerate_candidates
from tropbasis.oracle import random_system

from _oracles import canon, dense

EX1_BASIS = [
    dense(4, e2=0),
    dense(4, e2=0, e4=0),
    dense(4, e2=3, e1=0),
    dense(4, e2=2, e3=0),
]

EX2_BASIS = [
    dense(7, e1=0),
    dense(7, e1=0, e4=0),
    dense(7, e1=4, e5=0),
    dense(7, e1=2, e6=0),
    dense(7, e1=2, e2=0),
    dense(7, e1=3, e3=0),
    dense(7, e1=6, e7=0),
    dense(7, e6=2, e3=0),
    dense(7, e3=0, e6=3),
    dense(7, e1=3, e3=0, e4=5),
    dense(7, e1=3, e3=0, e5=1),
    dense(7, e1=4, e3=1, e7=0),
    dense(7, e2=2, e3=0, e6=3),
    dense(7, e6=2, e3=0, e4=5),
    dense(7, e6=2, e3=0, e5=1),
    dense(7, e6=3, e3=1, e7=0),
]


def pairs(*one_based):
    return {(k - 1, l - 1) for k, l in one_based}


def test_aux_example2(ex2):
    aux = compute_aux(ex2, classify(ex2))
    assert aux.W == pairs((3, 6))
    assert aux.Wbar == pairs((2, 4), (2, 5), (2, 6), (3, 4), (3, 5))


def test_aux_example1(ex1):
    aux = compute_aux(ex1, classify(ex1))
    assert aux.W == aux.Wbar == set()


def test_aux_L_sets_hand_example():
    # i=3 lies in I1 & I2, t=1 in J1 & J2: gamma^1_13 = 2 > gamma^2_13 = 1
    s = TwoRowSystem.from_rows((B, B, 2), (B, B, 1), (0, B, B), (0, B, B))
    aux = compute_aux(s, classify(s))
    assert aux.L1[2] == set()
    assert aux.L2[2] == {0}


def test_aux_invariants_random():
    rng = random.Random(21)
    for _ in range(300):
        s = random_system(rng.randint(1, 7), rng)
        c = classify(s)
        aux = compute_aux(s, c)
        assert not (aux.W & aux.Wbar)
        assert aux.W | aux.Wbar == {(k, l) for k in c.J1 & c.I2 for l in c.J2 & c.I1}
        for (i, l), N in aux.N1.items():
            assert N <= aux.L1[i]
        for (i, k), N in aux.N2.items():
            assert N <= aux.L2[i]


def test_leq_i():
    x = dense(4, e2=3, e1=0)
    y = dense(4, e2=5, e1=2, e4=0)
    assert leq_i(x, x, 0)
    assert not leq_i(x, y, 2)  # x_3 is bottom
    assert leq_i(x, y, 0)
    assert not leq_i(y, x, 0)


def test_multiorder_trivial():
    e1, e2, e12 = (0, B), (B, 0), (0, 0)
    assert not is_extremal_multiorder(e12, [e1, e2, e12])
    assert is_extremal_multiorder(e1, [e1, e2, e12])


def test_multiorder_example1(ex1):
    cands = enumerate_candidates(ex1, classify(ex1))
    assert is_extremal_multiorder(dense(4, e2=2, e3=0), cands)
    assert not is_extremal_multiorder(dense(4, e2=7, e1=4, e3=0), cands)
    assert not is_extremal_multiorder(dense(4, e2=5, e1=2, e4=0), cands)


def test_decompose_example1():
    y = dense(4, e2=5, e1=2, e4=0)
    phi_a = dense(4, e2=3, e1=0)
    phi_b = dense(4, e2=0, e4=0)
    terms = decompose(y, [phi_a, phi_b])
    assert terms == [(2, phi_a), (0, phi_b)]
    assert decompose((0, B), [(B, 0)]) is None


def test_decompose_round_trip():
    rng = random.Random(4)
    for _ in range(300):
        n = rng.randint(1, 6)
        S = [tuple(B if rng.random() < 0.4 else rng.randint(-5, 5) for _ in range(n))
             for _ in range(rng.randint(1, 5))]
        lams = [rng.randint(-3, 3) for _ in S]
        y = combine(zip(lams, S), n)
        terms = decompose(y, S)
        assert terms is not None
        assert combine(terms, n) == y


def _assert_same_up_to_scaling(basis, expected):
    assert basis.keys() == {canon(v) for v in expected}


def test_select_basis_example1(ex1):
    c = classify(ex1)
    aux = compute_aux(ex1, c)
    basis = select_basis(ex1, c, aux, enumerate_candidates(ex1, c))
    _assert_same_up_to_scaling(basis, EX1_BASIS)
    assert {g.klass for g in basis} == {"S1", "S2A1", "S2A2", "S2B"}


def test_compute_basis_example2(ex2):
    basis = compute_basis(ex2)
    assert len(basis) == 16
    _assert_same_up_to_scaling(basis, EX2_BASIS)
    sizes = sorted(len(g.support) for g in basis)
    assert sizes == [1] + [2] * 8 + [3] * 7


def test_trivial_systems():
    s = TwoRowSystem.from_rows([B], [B], [B], [B])
    assert compute_basis(s).keys() == {((0, 0),)}
    # single coordinate forced to bottom by the first row
    s = TwoRowSystem.from_rows([0], [B], [B], [B])
    assert len(compute_basis(s)) == 0


def test_degenerate_rows():
    # first row: 1 x1 <= (nothing) forces x1 = bottom; second row: x2 <= x3
    s = TwoRowSystem.from_rows((1, B, B), (B, 0, B), (B, B, B), (B, B, 0))
    basis = compute_basis(s)
    assert basis.keys() == {canon(dense(3, e3=0)), canon(dense(3, e2=0, e3=0))}
    for g in basis:
        assert is_solution(s, g.vector)


def _fuzz(seed, count, nmax=6):
    rng = random.Random(seed)
    for _ in range(count):
        yield rng, random_system(rng.randint(1, nmax), rng)


def test_closed_form_selection_equals_multiorder_filter():
    for _, s in _fuzz(31, 400):
        c = classify(s)
        if not (c.J1 and c.J2):
            continue
        cands = enumerate_candidates(s, c)
        fast = select_basis(s, c, compute_aux(s, c), cands)
        assert fast.keys() == multiorder_filter(cands, s.n).keys()


def test_independence_and_completeness():
    for _, s in _fuzz(32, 300):
        basis = compute_basis(s)
        gens = list(basis)
        for pos, g in enumerate(gens):
            assert is_solution(s, g.vector)
            assert decompose(g, gens[:pos] + gens[pos + 1:]) is None
        c = classify(s)
        if c.J1 and c.J2:
            for cand in enumerate_candidates(s, c):
                assert decompose(cand, gens) is not None


def test_scaling_invariance():
    for rng, s in _fuzz(33, 200):
        j = rng.randrange(s.n)
        shift = rng.randint(-4, 4)
        A = tuple(tuple(v + shift if col == j else v for col, v in enumerate(r)) for r in s.A)
        Bm = tuple(tuple(v + shift if col == j else v for col, v in enumerate(r)) for r in s.B)
        shifted = compute_basis(TwoRowSystem(A, Bm))
        expected = set()
        for g in compute_basis(s):
            v = tuple(x - shift if col == j else x for col, x in enumerate(g.vector))
            expected.add(canon(v))
        assert shifted.keys() == expected


def test_basis_is_unique_and_order_independent():
    for rng, s in _fuzz(34, 100):
        c = classify(s)
        if not (c.J1 and c.J2):
            continue
        cands = enumerate_candidates(s, c)
        aux = compute_aux(s, c)
        ref = select_basis(s, c, aux, cands)
        shuffled = cands[:]
        rng.shuffle(shuffled)
        again = select_basis(s, c, aux, shuffled)
        assert again.keys() == ref.keys()
        assert [g.entries for g in again] == [g.entries for g in ref]
        assert compute_basis(s) == compute_basis(s)


def test_generator_canonical_form():
    g = Generator.from_vector((B, 3, 1, B), "x")
    assert g.canonical_key == ((1, 0), (2, -2))
    assert g.canonicalized().vector == (B, 0, -2, B)
    with pytest.raises(AttributeError):
        g.klass = "y"
