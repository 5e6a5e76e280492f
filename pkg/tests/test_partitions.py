from __future__ import annotations

from fractions import Fraction

import pytest

from wreathvo.partitions import (
    big_Z,
    enumerate_partfn,
    parse_partfn,
    partfn_to_string,
    partition_count_series,
    partitions,
    single,
    z_lambda,
)
from wreathvo.symmetric import character_table, mn_character


def test_z_lambda_values():
    assert z_lambda(()) == 1
    assert z_lambda((2, 1, 1)) == 4
    assert z_lambda((3,)) == 3


def test_partition_counts():
    assert len(partitions(4)) == 5
    assert partitions(3) == ((3,), (2, 1), (1, 1, 1))
    assert [len(partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_big_z():
    assert big_Z(((2, 1),), [1]) == z_lambda((2, 1))
    # Z/2: zeta = 2 for both classes; rho(c0) = (1)
    assert big_Z(((1,), ()), [2, 2]) == 2


def test_partfn_enumeration():
    assert len(enumerate_partfn(1, 4)) == 5
    assert len(enumerate_partfn(2, 2)) == 5
    assert enumerate_partfn(3, 0) == (((), (), ()),)
    assert partition_count_series(2, 3) == [1, 2, 5, 10]


def test_partfn_strings():
    rho = ((3, 1), (2,))
    assert partfn_to_string(rho) == "c0:[3,1];c1:[2]"
    assert parse_partfn("c0:[3,1];c1:[2]", 2) == rho
    assert partfn_to_string(((), ())) == "-"
    assert parse_partfn("-", 2) == ((), ())
    assert single(3, 1, (2,)) == ((), (2,), ())
    with pytest.raises(ValueError):
        parse_partfn("c5:[1]", 2)
    with pytest.raises(ValueError):
        parse_partfn("c0:[0]", 2)


def test_mn_small_tables():
    assert character_table(1) == [[1]]
    # S3 standard character at (3), (2,1), (1,1,1)
    assert [mn_character((2, 1), mu) for mu in partitions(3)] == [-1, 0, 2]
    assert [mn_character((1, 1), mu) for mu in partitions(2)] == [-1, 1]


@pytest.mark.parametrize("n", range(1, 7))
def test_mn_orthogonality(n):
    T = character_table(n)
    ps = partitions(n)
    for i in range(len(ps)):
        for j in range(len(ps)):
            s = sum(Fraction(T[i][k] * T[j][k], z_lambda(mu)) for k, mu in enumerate(ps))
            assert s == (1 if i == j else 0)
