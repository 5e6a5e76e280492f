from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from wreathvo.groups import build_group, make_xi, trivial_xi
from wreathvo.partitions import single
from wreathvo.wreath import (
    WreathClassFn,
    WreathGroup,
    Z,
    element_induction,
    epsilon_n,
    eta_n,
    induction_product,
    sigma_class,
    sigma_rho,
    standard_pairing_n,
    type_of,
    types,
    unit,
    weighted_pairing_n,
    wreath_order,
)

Z2 = build_group("cyclic:2")
S = build_group("trivial")


def test_type_examples():
    assert type_of(Z2, ((0, 0, 0), (0, 1, 2))) == ((1, 1, 1), ())
    g = Z2.classes[1][0]
    assert type_of(Z2, ((0, g), (1, 0))) == ((), (2,))


def test_types_separate_classes_z2():
    wg = WreathGroup(Z2, 2)
    classes = wg.conjugacy_classes()
    assert len(classes) == 5 == len(types(Z2, 2))
    seen = set()
    for cl in classes:
        ts = {wg.type_of(wg.elements[i]) for i in cl}
        assert len(ts) == 1
        seen |= ts
    assert len(seen) == 5


@pytest.mark.parametrize("spec,n", [("cyclic:2", 3), ("cyclic:3", 2), ("trivial", 4), ("bd:8", 2)])
def test_class_equation(spec, n):
    g = build_group(spec)
    order = wreath_order(g, n)
    assert sum(Fraction(order, Z(g, rho)) for rho in types(g, n)) == order
    wg = WreathGroup(g, n, limit=200)
    for rho in types(g, n):
        count = sum(1 for x in wg.elements if wg.type_of(x) == rho)
        assert count * Z(g, rho) == order


def test_centralizer_example():
    assert Z(Z2, ((1,), ())) == 2


def test_eta_and_epsilon():
    irr = Z2.irreps()
    assert all(v == 1 for v in eta_n(irr[0], 3).values.values())
    assert eta_n(irr[1], 2)[((1, 1), ())] == 1
    # sign character of S3 from epsilon_3(gamma_0)
    sign = epsilon_n(S.irrep(0), 3)
    assert [sign[((1, 1, 1),)], sign[((2, 1),)], sign[((3,),)]] == [1, -1, 1]
    assert epsilon_n(irr[1], 1).values == eta_n(irr[1], 1).values
    # value at one n-cycle with cycle product in c
    for c in range(2):
        assert eta_n(irr[1], 2)[single(2, c, (2,))] == irr[1][c]
        assert epsilon_n(irr[1], 2)[single(2, c, (2,))] == -irr[1][c]


def test_sigma_functions():
    s2 = sigma_class(S, 0, 2)
    assert s2[((2,),)] == 2 and s2[((1, 1),)] == 0
    assert sigma_class(Z2, 0, 1)[((1,), ())] == 2
    for rho in types(Z2, 2):
        f = sigma_rho(Z2, rho)
        for tau in types(Z2, 2):
            assert f[tau] == (Z(Z2, rho) if tau == rho else 0)


def test_pairing_on_sigma_basis():
    xf = make_xi(Z2, "mckay")
    for rho, tau in itertools.product(types(Z2, 2), repeat=2):
        got = weighted_pairing_n(xf, sigma_rho(Z2, rho), sigma_rho(Z2, tau))
        want = 0
        if tau == rho:  # classes of Z/2 are self-inverse
            want = Z(Z2, rho)
            for c, lam in enumerate(rho):
                want = want * xf.xi[c] ** len(lam)
        assert got == want


def test_n1_pairing_is_base_form():
    xf = make_xi(build_group("cyclic:3"), "mckay")
    g = xf.group
    for i, j in itertools.product(range(3), repeat=2):
        f = WreathClassFn(g, 1, {single(3, c, (1,)): g.irrep(i)[c] for c in range(3)})
        h = WreathClassFn(g, 1, {single(3, c, (1,)): g.irrep(j)[c] for c in range(3)})
        assert weighted_pairing_n(xf, f, h) == xf.A[i][j]


def test_induction_of_trivial_characters():
    triv1 = eta_n(S.irrep(0), 1)
    prod = induction_product(triv1, triv1)
    assert standard_pairing_n(prod, eta_n(S.irrep(0), 2)) == 1
    assert standard_pairing_n(prod, epsilon_n(S.irrep(0), 2)) == 1


def test_induction_matches_elements():
    irr = Z2.irreps()
    f, g = eta_n(irr[1], 1), epsilon_n(irr[0], 2)
    assert induction_product(f, g) == element_induction(f, g)
    assert induction_product(f, g) == induction_product(g, f)
    assert induction_product(unit(Z2), f) == f


def test_multiplicativity_of_eta():
    gamma = Z2.irrep(1)
    prod = induction_product(eta_n(gamma, 1), eta_n(gamma, 1))
    assert standard_pairing_n(prod, eta_n(gamma, 2)) == 1
