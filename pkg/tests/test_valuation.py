import pytest

from lgrnok.partitions import partitions_in_box, transpose, transpose_classes
from lgrnok.valuation import (
    all_plucker_valuations,
    coordinate_system,
    delta_vertices,
    valuation_from_flows,
    valuation_maxdiag,
)

# the full LGr(3,6) table, keyed by class representative
TABLE_N3 = {
    (3, 3, 3): (0, 0, 0, 0, 0, 0),
    (3, 3, 2): (0, 0, 0, 0, 0, 1),
    (3, 3, 1): (0, 1, 0, 1, 1, 1),
    (3, 3): (1, 1, 1, 2, 1, 1),
    (3, 2, 1): (0, 2, 0, 2, 1, 1),
    (3, 2): (1, 2, 1, 2, 1, 1),
    (3, 1, 1): (0, 2, 0, 2, 1, 2),
    (3, 1): (1, 2, 1, 2, 1, 2),
    (3,): (1, 3, 1, 3, 2, 2),
    (2, 2): (2, 2, 1, 2, 1, 1),
    (2, 1): (2, 2, 1, 2, 1, 2),
    (2,): (2, 3, 1, 3, 2, 2),
    (1,): (2, 4, 1, 4, 2, 2),
    (): (2, 4, 1, 4, 2, 3),
}


def test_coordinate_system_pinned():
    assert coordinate_system(3) == ((3,), (3, 3), (3, 1, 1), (3, 3, 1), (3, 3, 2), (3, 3, 3))
    assert coordinate_system(2) == ((2,), (2, 1), (2, 2))
    assert coordinate_system(1) == ((1,),)
    for n in range(1, 7):
        assert len(coordinate_system(n)) == n * (n + 1) // 2


def test_valuation_table_n3():
    assert all_plucker_valuations(3) == TABLE_N3


def test_maxdiag_examples():
    assert valuation_maxdiag(3, (3, 3, 2)) == (0, 0, 0, 0, 0, 1)
    assert valuation_maxdiag(3, (2,)) == (2, 3, 1, 3, 2, 2)
    for n in (1, 2, 3, 4):
        assert valuation_maxdiag(n, (n,) * n) == (0,) * (n * (n + 1) // 2)


def test_flow_examples():
    assert valuation_from_flows(3, (3, 2, 1)) == (0, 2, 0, 2, 1, 1)
    assert valuation_from_flows(3, (3, 3, 3)) == (0,) * 6
    assert valuation_from_flows(3, ()) == (2, 4, 1, 4, 2, 3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_oracle_equivalence_exhaustive(n):
    for lam in partitions_in_box(n):
        assert valuation_from_flows(n, lam) == valuation_maxdiag(n, lam), lam


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_transpose_invariance(n):
    for lam in partitions_in_box(n):
        assert valuation_maxdiag(n, lam) == valuation_maxdiag(n, transpose(lam))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_empty_partition_is_coordinatewise_maximal(n):
    top = valuation_maxdiag(n, ())
    for lam in partitions_in_box(n):
        assert all(a <= b for a, b in zip(valuation_maxdiag(n, lam), top))


def test_n1_table():
    assert all_plucker_valuations(1) == {(1,): (0,), (): (1,)}


def test_n2_table_golden():
    assert all_plucker_valuations(2) == {
        (2, 2): (0, 0, 0),
        (2, 1): (0, 0, 1),
        (2,): (1, 1, 1),
        (1,): (2, 1, 1),
        (): (2, 1, 2),
    }


def test_table_sizes_and_value_collapse():
    # one row per transpose class; distinct values number C_{n+1}
    for n, classes, values in [(1, 2, 2), (2, 5, 5), (3, 14, 14), (4, 43, 42)]:
        table = all_plucker_valuations(n, cross_check=False)
        assert len(table) == classes
        assert len(set(table.values())) == values
    t4 = all_plucker_valuations(4, cross_check=False)
    assert t4[(4, 3, 1)] == t4[(4, 2, 2)]


def test_delta_vertices():
    assert len(delta_vertices(3)) == 14
    assert len(delta_vertices(4)) == 42
    assert set(delta_vertices(3)) == set(TABLE_N3.values())


def test_cross_check_flag():
    # default replays flows for n <= 4; explicit False must give same values
    assert all_plucker_valuations(2) == all_plucker_valuations(2, cross_check=False)


@pytest.mark.parametrize("n", [2, 3])
def test_minimum_monomial_unique(n):
    # valuation_from_flows raises when the coordinatewise minimum is shared
    for lam in transpose_classes(n):
        valuation_from_flows(n, lam)
