from __future__ import annotations

import copy
from fractions import Fraction

from wreathvo import suites
from wreathvo.groups import build_group, make_xi, trivial_xi
from wreathvo.lattice import VertexEngine, character_table, clifford_check, ope_check

Z2 = build_group("cyclic:2")


def test_brute_force_rejects_reducible_row():
    rows, cols, values = character_table(Z2, 2)
    assert suites.genuine_character_failures(Z2, 2, values) == 0
    bad = copy.deepcopy(values)
    bad[0] = [a + b for a, b in zip(values[0], values[1])]
    assert suites.genuine_character_failures(Z2, 2, bad) > 0


def test_orthogonality_detects_swap():
    rows, cols, values = character_table(Z2, 2)
    assert suites._orthogonality(Z2, 2, values, rows, cols) == 0
    bad = copy.deepcopy(values)
    bad[2][0], bad[2][1] = bad[2][1], bad[2][0]
    assert suites._orthogonality(Z2, 2, bad, rows, cols) > 0


def test_clifford_needs_the_cocycle():
    eng = VertexEngine(trivial_xi(Z2))
    assert clifford_check(eng, Fraction(3, 2), 1).passed
    eng.eps = lambda a, b: 1  # without the sign cocycle distinct labels commute
    eng._x_cache.clear()
    assert not clifford_check(eng, Fraction(3, 2), 1).passed


def test_ope_needs_the_singular_factor(monkeypatch):
    from wreathvo import lattice

    eng = VertexEngine(make_xi(Z2, "mckay"))
    assert ope_check(eng, (0, 1), (0, 1), 1).passed
    # keep only the leading term of (z - w)^N
    monkeypatch.setattr(lattice, "_binom", lambda N, j: 1 if j == 0 else 0)
    assert not ope_check(eng, (0, 1), (0, 1), 1).passed


def test_heisenberg_suite_counts():
    rep = suites.suite_heisenberg(Z2, "mckay", D=1, M=1)
    assert rep.passed
    assert rep.details[0]["vectors"] == 3


def test_default_gammas():
    gs = suites.default_gammas(Z2)
    assert len(gs) == 3
    assert list(gs[2].irreducible_coordinates()) == [1, -1]


def test_isometry_extended_family():
    assert suites.suite_isometry("cyclic:3", 2, "mckay", extended=True).passed


def test_basic_rep_suite():
    rep = suites.suite_basic_rep("cyclic:3", D=2)
    assert rep.passed
    assert rep.details[0]["irreducibility"] == "untested"
