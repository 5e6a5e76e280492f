from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from wreathvo.fock import (
    HeisOp,
    SymVec,
    a_prime,
    apply_heis,
    ch,
    ch_inverse,
    character_from_schur,
    class_op,
    coords_of,
    exp_series,
    gen_series_check,
    inner_product,
    parse_symvec,
    schur,
)
from wreathvo.groups import build_group, make_xi, trivial_xi
from wreathvo.partitions import enumerate_partfn, partitions, z_lambda
from wreathvo.wreath import Z, bar, eta_n, sigma_class, sigma_rho, types

Z2 = build_group("cyclic:2")
MCK = make_xi(Z2, "mckay")
TRIV = trivial_xi(Z2)


def mono(*parts):
    return SymVec.monomial(tuple(tuple(p) for p in parts))


def random_vector(rng, r=2, degree=3):
    v = SymVec(r)
    for d in range(degree + 1):
        for rho in enumerate_partfn(r, d):
            c = rng.randint(-2, 2)
            if c:
                v = v + SymVec.monomial(rho) * c
    return v


def test_single_derivation():
    one = SymVec.vacuum(2)
    for i, j in itertools.product(range(2), repeat=2):
        v = apply_heis(HeisOp(1, coords_of(i, MCK)), apply_heis(HeisOp(-1, coords_of(j, MCK)), one, MCK), MCK)
        assert v == one * MCK.A[i][j]


def test_commutator_on_random_vectors():
    rng = random.Random(11)
    for _ in range(3):
        v = random_vector(rng)
        for i, j in itertools.product(range(2), repeat=2):
            p, q = HeisOp(1, coords_of(i, MCK)), HeisOp(-1, coords_of(j, MCK))
            lhs = apply_heis(p, apply_heis(q, v, MCK), MCK) - apply_heis(q, apply_heis(p, v, MCK), MCK)
            assert lhs == v * MCK.A[i][j]


def test_mode_mismatch_kills():
    v = mono((), (1, 1))
    assert not apply_heis(HeisOp(2, coords_of(1, MCK)), v, MCK)


def test_class_basis():
    g = build_group("trivial")
    assert class_op(g, 3, 0).coords == (1,)
    # a_m(c^1) = a_m(gamma_0) - a_m(gamma_1) for Z/2
    assert tuple(class_op(Z2, 2, 1).coords) == (1, -1)


def test_class_commutator_example():
    for xf in (MCK, TRIV):
        for c1, c in itertools.product(range(2), repeat=2):
            p = class_op(Z2, 1, Z2.inv_class[c1])
            q = class_op(Z2, -1, c)
            one = SymVec.vacuum(2)
            got = apply_heis(p, apply_heis(q, one, xf), xf)
            want = Z2.zeta[c] * xf.xi[c] if c1 == c else 0
            assert got == one * want


def test_bilinear_form_examples():
    one = SymVec.vacuum(2)
    assert inner_product(one, one, MCK) == 1
    for i, j in itertools.product(range(2), repeat=2):
        u = mono((1,), ()) if i == 0 else mono((), (1,))
        v = mono((1,), ()) if j == 0 else mono((), (1,))
        assert inner_product(u, v, MCK) == MCK.A[i][j]


@pytest.mark.parametrize("xi", ["trivial", "mckay"])
def test_class_basis_form(xi):
    xf = make_xi(Z2, xi)
    for n in range(1, 5):
        ts = types(Z2, n)
        for rho, tau in itertools.product(ts, repeat=2):
            got = inner_product(a_prime(Z2, tau), a_prime(Z2, bar(Z2, rho)), xf)
            want = 0
            if tau == rho:
                want = Z(Z2, rho)
                for c, lam in enumerate(rho):
                    want = want * xf.xi[c] ** len(lam)
            assert got == want


def test_characteristic_map_examples():
    for rho in types(Z2, 2):
        assert ch(sigma_rho(Z2, rho)) == a_prime(Z2, rho)
    gamma = Z2.irrep(1)
    assert ch(sigma_class(Z2, gamma, 2)) == mono((), (2,))
    expected = SymVec(2)
    for lam in partitions(3):
        expected = expected + mono((), lam) * Fraction(1, z_lambda(lam))
    assert ch(eta_n(gamma, 3)) == expected


def test_ch_inverse_round_trip():
    f = eta_n(Z2.irrep(1), 2) + sigma_rho(Z2, ((1,), (1,)))
    assert ch_inverse(ch(f), Z2)[2] == f


def test_schur_examples():
    assert schur(((), (1,))) == mono((), (1,))
    assert schur(((2,), ())) == mono((1, 1), ()) * Fraction(1, 2) + mono((2,), ()) * Fraction(1, 2)


def test_schur_orthonormal():
    lams = [lam for d in range(5) for lam in enumerate_partfn(2, d)]
    for a, b in itertools.product(lams, repeat=2):
        assert inner_product(schur(a), schur(b), TRIV) == (1 if a == b else 0)


def test_irreducible_characters_from_schur():
    chi = character_from_schur(((2,), ()), Z2)
    assert all(v == 1 for v in chi.values.values())


def test_exponential_series_start():
    series = exp_series((0, 1), 3)
    assert series[0] == SymVec.vacuum(2)
    assert series[1] == mono((), (1,))
    for gamma in (Z2.irrep(1), Z2.irrep(0) - Z2.irrep(1)):
        assert gen_series_check(gamma, 3).passed


def test_text_round_trip():
    rng = random.Random(5)
    v = random_vector(rng, 3, 3)
    assert parse_symvec(v.to_string(), 3) == v
    assert mono((1, 1, 1), (2,)).to_string() == "(1) a[-2](g1)^1 a[-1](g0)^3"
