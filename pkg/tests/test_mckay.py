from __future__ import annotations

import math

import pytest

from wreathvo.groups import build_group
from wreathvo.lattice import FockVec, VertexEngine
from wreathvo.mckay import (
    McKayError,
    basic_rep_check,
    build_affine,
    classify_diagram,
    enumerate_short_vectors,
    expected_label,
    graded_dimensions_expected,
    mckay_summary,
    root_count,
    root_enumeration,
    toroidal_relation_check,
)


def test_z2_is_affine_a1():
    ad = build_affine("cyclic:2")
    assert ad.label == "affine A1"
    assert ad.cartan == [[2, -2], [-2, 2]]
    assert ad.diagram == [(0, 1, 2)]
    assert ad.delta == (1, 1)
    assert ad.passed()


@pytest.mark.parametrize("spec,label", [
    ("cyclic:3", "affine A2"), ("cyclic:6", "affine A5"), ("bd:8", "affine D4"), ("bd:12", "affine D5"),
    ("bt", "affine E6"), ("bo", "affine E7"), ("bi", "affine E8"),
])
def test_labels(spec, label):
    ad = build_affine(spec)
    assert ad.label == label == expected_label(spec)
    assert ad.passed()


def test_quaternion_delta():
    ad = build_affine("bd:8")
    assert sorted(ad.delta) == [1, 1, 1, 1, 2]
    assert len(ad.diagram) == 4


@pytest.mark.parametrize("spec,count", [("cyclic:2", 2), ("cyclic:3", 6), ("bd:8", 24), ("bt", 72)])
def test_root_counts(spec, count):
    ad = build_affine(spec)
    roots = root_enumeration(ad)
    assert len(roots) == count == root_count(ad.label)
    assert all(r[0] == 0 for r in roots)


def test_short_vectors_a2():
    vs = enumerate_short_vectors([[2, -1], [-1, 2]], 2)
    assert sorted(vs) == sorted([(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)])
    with pytest.raises(McKayError):
        enumerate_short_vectors([[1, 2], [2, 1]], 2)


def test_classification_rejects():
    with pytest.raises(McKayError):
        classify_diagram([[2, -1, 0], [-1, 2, -1], [0, -1, 2]])  # finite A3
    with pytest.raises(McKayError):
        classify_diagram([[2, -3], [-3, 2]])
    with pytest.raises(McKayError):
        classify_diagram([[1, 0], [0, 1]])


def test_heisenberg_zero_mode_eigenvalue():
    eng = VertexEngine(build_affine("cyclic:3").xi)
    v = FockVec.lattice_vector((1, -1, 0))
    for i in range(3):
        g = eng.lat.basis(i)
        assert eng.apply_heis(0, g, v) == v * eng.lat.pair(g, (1, -1, 0))


def test_toroidal_small():
    rep = toroidal_relation_check(build_affine("cyclic:2"), M=1, D=1)
    assert rep.passed
    counts = rep.details[0]["checks"]
    assert counts["serre3"] > 0


def test_serre_depth_three_example():
    eng = VertexEngine(build_affine("cyclic:2").xi)
    a0, a1 = (1, 0), (0, 1)
    for v in eng.test_basis(2, 1):
        total = FockVec(2)
        for t in range(4):
            w = v
            for _ in range(t):
                w = eng.apply_X(a0, 0, w)
            w = eng.apply_X(a1, 0, w)
            for _ in range(3 - t):
                w = eng.apply_X(a0, 0, w)
            total = total + w * (math.comb(3, t) * (-1) ** t)
        assert not total


def test_basic_representation_z2():
    ad = build_affine("cyclic:2")
    assert graded_dimensions_expected(ad, 2) == [1, 3, 4]
    rep = basic_rep_check(ad, 2)
    assert rep.passed
    assert rep.details[0]["graded_dims_generated"] == [1, 3, 4]


def test_summary():
    out = mckay_summary("bd:8")
    assert out["label"] == "affine D4"
    assert out["root_count"] == 24
    assert out["passed"]


def test_non_su2_group():
    with pytest.raises(McKayError):
        expected_label("trivial")
