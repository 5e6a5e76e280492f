from __future__ import annotations

import itertools
import json
import random

import pytest

from wreathvo.groups import (
    ClassFn,
    GroupError,
    build_group,
    from_cayley,
    make_xi,
    mckay_eigencheck,
    mckay_xi,
    radical_check,
    standard_pairing,
    trivial_xi,
)
from wreathvo.scalar import Cyclo, cyclo

w = Cyclo.zeta(3)


def test_cyclic_tables():
    g = build_group("cyclic:2")
    assert g.char_table == [[1, 1], [1, -1]]
    g3 = build_group("cyclic:3")
    gen = g3.classes[1][0]
    for j in range(3):
        for k in range(3):
            x = 0
            for _ in range(k):
                x = g3.mult[x][gen]
            assert g3.irrep(j)[g3.class_of[x]] == w ** (j * k)


def test_quaternion_group():
    g = build_group("bd:8")
    assert g.order == 8
    assert g.num_classes == 5
    assert sorted(g.degrees) == [1, 1, 1, 1, 2]
    assert sum(d * d for d in g.degrees) == 8


@pytest.mark.parametrize("spec,order,classes", [
    ("bd:12", 12, 6), ("bd:16", 16, 7), ("bt", 24, 7), ("bo", 48, 8), ("bi", 120, 9), ("cyclic:8", 8, 8),
])
def test_group_sizes(spec, order, classes):
    g = build_group(spec)
    assert g.order == order
    assert g.num_classes == classes
    assert sum(d * d for d in g.degrees) == order
    assert g.check_orthogonality() == []


def test_standard_pairing_orthonormal():
    g = build_group("bd:8")
    irr = g.irreps()
    for i, j in itertools.product(range(5), repeat=2):
        assert standard_pairing(irr[i], irr[j]) == (1 if i == j else 0)
    assert standard_pairing(g.regular(), irr[0]) == 1
    assert standard_pairing(g.constant(0), irr[2]) == 0


def test_trivial_xi_is_standard():
    g = build_group("cyclic:3")
    xf = trivial_xi(g)
    rng = random.Random(3)
    for _ in range(5):
        f = ClassFn(g, [cyclo(rng.randint(-3, 3)) + w * rng.randint(-3, 3) for _ in range(3)])
        h = ClassFn(g, [cyclo(rng.randint(-3, 3)) + w * rng.randint(-3, 3) for _ in range(3)])
        assert xf.pair(f, h) == standard_pairing(f, h)
    assert [[int(x.to_int()) for x in row] for row in xf.A] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_mckay_z2():
    g = build_group("cyclic:2")
    xf = mckay_xi(g)
    irr = g.irreps()
    assert xf.pair(irr[0], irr[1]) == -2
    assert xf.pair(irr[0], irr[0]) == 2
    assert xf.A_int == [[2, -2], [-2, 2]]
    assert list(xf.xi.values) == [0, 4]


def test_mckay_z3():
    g = build_group("cyclic:3")
    xf = mckay_xi(g)
    assert xf.A_int == [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
    assert xf.xi[1] == 3
    assert mckay_xi(build_group("bd:8")).xi[0] == 0


def test_real_form_agrees():
    g = build_group("bd:12")
    xf = mckay_xi(g)
    rng = random.Random(7)
    z = Cyclo.zeta(12)
    for _ in range(5):
        f = ClassFn(g, [z ** rng.randint(0, 11) * rng.randint(-2, 2) for _ in range(g.num_classes)])
        h = ClassFn(g, [z ** rng.randint(0, 11) * rng.randint(-2, 2) for _ in range(g.num_classes)])
        assert xf.pair(f, h) == xf.pair_real(f, h)


@pytest.mark.parametrize("spec", ["cyclic:2", "cyclic:5", "bd:8", "bt", "bi"])
def test_eigencheck_and_radical(spec):
    xf = mckay_xi(build_group(spec))
    assert mckay_eigencheck(xf).passed
    rep = radical_check(xf)
    assert rep.passed
    assert rep.details[0]["kernel_dim"] == 1


def test_radical_examples():
    assert radical_check(mckay_xi(build_group("cyclic:2"))).details[0]["kernel_basis"] == [["1", "1"]]
    assert radical_check(mckay_xi(build_group("cyclic:3"))).details[0]["kernel_basis"] == [["1", "1", "1"]]
    assert sorted(build_group("bd:8").degrees) == [1, 1, 1, 1, 2]


def test_xi_must_be_self_dual():
    g = build_group("cyclic:3")
    with pytest.raises(GroupError):
        make_xi(g, "bogus")
    from wreathvo.groups import XiForm

    with pytest.raises(GroupError):
        XiForm(g.irrep(1))


def _s3_table():
    perms = list(itertools.permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}
    return [[idx[tuple(p[q[k]] for k in range(3))] for q in perms] for p in perms]


def test_cayley_s3(tmp_path):
    path = tmp_path / "s3.json"
    path.write_text(json.dumps(_s3_table()))
    g = build_group(f"cayley:{path}")
    assert g.order == 6
    assert sorted(g.degrees) == [1, 1, 2]
    assert g.check_orthogonality() == []
    assert list(g.irrep(0).values) == [1, 1, 1]


def test_cayley_rejects_non_group():
    with pytest.raises(GroupError):
        from_cayley([[0, 1], [0, 1]])


def test_unknown_descriptor():
    with pytest.raises(GroupError):
        build_group("dihedral:6")
    with pytest.raises(GroupError):
        build_group("cyclic:x")
