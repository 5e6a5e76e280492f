from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from wreathvo.fock import SymVec, h_terms, schur_terms
from wreathvo.groups import build_group, make_xi, trivial_xi
from wreathvo.lattice import (
    Cocycle,
    FockVec,
    LatticeError,
    VertexEngine,
    adjoint_check,
    character_table,
    character_value,
    character_value_vertex,
    clifford_check,
    ope_check,
    parse_fockvec,
    prim_check,
    schur_state,
    schur_state_image,
)
from wreathvo.partitions import partitions
from wreathvo.symmetric import mn_character

Z2 = build_group("cyclic:2")
ENG_T = VertexEngine(trivial_xi(Z2))
ENG_M = VertexEngine(make_xi(Z2, "mckay"))
half = Fraction(1, 2)


def test_cocycle_examples():
    eps = ENG_T.eps
    assert eps((1, 0), (0, 0)) == 1
    assert eps((0, 1), (1, 0)) == -1
    assert eps((1, 0), (0, 1)) == 1


def test_cocycle_commutator_random():
    rng = random.Random(2)
    for A in ([[1, 0], [0, 1]], [[2, -2], [-2, 2]], [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]], [[3, 1], [1, 1]]):
        eps = Cocycle(A)
        r = len(A)
        for _ in range(20):
            a = tuple(rng.randint(-3, 3) for _ in range(r))
            b = tuple(rng.randint(-3, 3) for _ in range(r))
            pair = sum(a[i] * A[i][j] * b[j] for i in range(r) for j in range(r))
            na = sum(a[i] * A[i][j] * a[j] for i in range(r) for j in range(r))
            nb = sum(b[i] * A[i][j] * b[j] for i in range(r) for j in range(r))
            assert eps.commutator(a, b) == (-1) ** ((pair + na * nb) % 2)


def test_lattice_operators():
    v = FockVec.lattice_vector((0, 1))
    assert ENG_T.apply_exp((0, 0), v) == v
    assert ENG_M.apply_d((1, 0), v) == v * -2
    assert ENG_M.apply_heis(0, (1, 0), v) == v * -2
    # e^a (e^b e^c) = eps(a, b) e^{a+b} e^c
    for a, b, c in itertools.product([(1, 0), (0, 1), (1, -1)], repeat=3):
        lhs = ENG_M.apply_exp(a, ENG_M.apply_exp(b, FockVec.lattice_vector(c)))
        rhs = ENG_M.apply_exp(tuple(x + y for x, y in zip(a, b)), FockVec.lattice_vector(c)) * ENG_M.eps(a, b)
        assert lhs == rhs


def test_half_vertex_series():
    one = ENG_M.vacuum()
    series = ENG_M.half_vertex((0, 1), "H+", 2, one)
    assert series[0] == one
    assert series[1] == FockVec.basis(((), (1,)), (0, 0))
    assert series[2] == FockVec(2, {(rho, (0, 0)): c for rho, c in h_terms(2, (0, 1)).items()})


@pytest.mark.parametrize("eng", [ENG_T, ENG_M])
def test_half_vertex_adjoints(eng):
    vecs = eng.test_basis(3, 0)
    for gamma in [(1, 0), (0, 1), (1, -1)]:
        for u in vecs:
            up = eng.half_vertex(gamma, "H+", 3, u)
            ep = eng.half_vertex(gamma, "E+", 3, u)
            for v in vecs:
                hm = eng.half_vertex(gamma, "H-", 3, v)
                em = eng.half_vertex(gamma, "E-", 3, v)
                for j in range(4):
                    assert eng.inner(up[j], v) == eng.inner(u, hm[j])
                    assert eng.inner(ep[j], v) == eng.inner(u, em[j])


def test_modes_on_pure_lattice_vectors():
    one = ENG_T.vacuum()
    assert ENG_T.apply_X((1, 0), -half, one) == FockVec.lattice_vector((1, 0))
    for alpha in [(0, 0), (1, 0), (0, -1), (1, 1)]:
        v = FockVec.lattice_vector(alpha)
        for gamma in [(1, 0), (0, 1)]:
            s = ENG_T.lat.pair(gamma, alpha)
            for m in [Fraction(k, 2) for k in range(-5, 8, 2)]:
                got = ENG_T.apply_X(gamma, m, v)
                if m > -s - half:
                    assert not got
                if m == -s - half:
                    target = tuple(a + g for a, g in zip(alpha, gamma))
                    assert got == FockVec.lattice_vector(target) * ENG_T.eps(gamma, alpha)


def test_invalid_mode():
    with pytest.raises(LatticeError):
        ENG_T.apply_X((1, 0), 1, ENG_T.vacuum())


@pytest.mark.parametrize("eng", [ENG_T, ENG_M])
def test_heisenberg_vertex_commutator(eng):
    for a, b in [((1, 0), (0, 1)), ((0, 1), (0, 1)), ((1, -1), (1, 0))]:
        assert prim_check(eng, a, b, [-2, -1, 0, 1, 2], 3, box=1).passed


@pytest.mark.parametrize("eng", [ENG_T, ENG_M])
def test_adjoint_vertex_operators(eng):
    for gamma in [(1, 0), (0, -1), (1, 1), (1, -1)]:
        assert adjoint_check(eng, gamma, 2).passed


def test_ope_example():
    rep = ope_check(ENG_M, (0, 1), (0, 1), 3, vectors=[ENG_M.vacuum()])
    assert rep.passed
    assert rep.details[0]["coefficients"] > 0


def test_clifford_trivial_group():
    eng = VertexEngine(trivial_xi(build_group("trivial")))
    rep = clifford_check(eng, Fraction(5, 2), 2)
    assert rep.passed
    with pytest.raises(LatticeError):
        clifford_check(ENG_M, half, 1)


def test_schur_state_examples():
    alpha = (1, -1)
    assert schur_state(ENG_T, ((), ()), alpha) == FockVec.lattice_vector(alpha)
    triv = VertexEngine(trivial_xi(build_group("trivial")))
    s = schur_state(triv, ((1,),), (0,))
    assert s == FockVec(1, {(rho, (1,)): c for rho, c in schur_terms(((1,),)).items()})
    for lam in [((2,), (1,)), ((1, 1), ()), ((), (2, 1))]:
        for a in [(0, 0), (1, 0), (-1, 2)]:
            assert schur_state(ENG_T, lam, a) == schur_state_image(lam, a, ENG_T)


def test_character_values_trivial_group():
    g = build_group("trivial")
    assert character_value(g, ((2,),), ((2,),)) == 1
    assert character_value(g, ((1, 1),), ((2,),)) == -1
    assert [character_value(g, ((2, 1),), (mu,)) for mu in [(1, 1, 1), (2, 1), (3,)]] == [2, 0, -1]
    for lam in partitions(4):
        for mu in partitions(4):
            assert character_value(g, (lam,), (mu,)) == mn_character(lam, mu)


def test_vertex_route_agrees():
    for n in range(1, 4):
        assert character_table(Z2, n) == character_table(Z2, n, route="vertex", eng=ENG_T)
    assert character_value_vertex(ENG_T, ((1,), (1,)), ((1, 1), ())) == 2


def test_trivial_row_is_constant():
    g3 = build_group("cyclic:3")
    rows, cols, values = character_table(g3, 2)
    k = rows.index(((2,), (), ()))
    assert all(v == 1 for v in values[k])


def test_fockvec_text_round_trip():
    v = ENG_M.apply_X((1, 0), -2, ENG_M.apply_X((0, 1), -1, ENG_M.vacuum()))
    assert v
    assert parse_fockvec(v.to_string(), 2) == v
    assert parse_fockvec("a[-1](g1)^1 e^(1,0)", 2) == FockVec.basis(((), (1,)), (1, 0))


def test_table_entries_are_inverse_characteristic_images():
    from wreathvo.fock import character_from_schur

    g3 = build_group("cyclic:3")
    rows, cols, values = character_table(g3, 2)
    for i, lam in enumerate(rows):
        chi = character_from_schur(lam, g3)
        assert values[i] == [chi[mu] for mu in cols]
