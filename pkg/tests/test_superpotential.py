import pytest
from hypothesis import given, strategies as st

from lgrnok.partitions import staircase_syt_count
from lgrnok.superpotential import (
    antichain_count_formula,
    antichain_indicator,
    antichain_to_dyck,
    build_poset,
    build_superpotential,
    chain_polytope_rows,
    dyck_to_antichain,
    enumerate_antichains,
    gamma_hrep,
    gamma_vertex_set,
    is_antichain,
    lex_cells,
    linear_extension_count,
    maximal_chains,
    quantum_denominator,
    strict_staircase_partitions,
    tropicalize,
)


def test_poset_n3():
    P = build_poset(3)
    assert len(P.elements) == 6
    assert len(P.covers()) == 6  # n(n-1) cover relations
    assert sorted(maximal_chains(P)) == sorted([
        ((1, 1), (1, 2), (1, 3)),
        ((1, 1), (1, 2), (2, 3)),
        ((1, 1), (2, 2), (2, 3)),
        ((1, 1), (2, 2), (3, 3)),
    ])


def test_poset_n1():
    P = build_poset(1)
    assert P.elements == ((1, 1),)
    assert P.covers() == ()


def test_poset_order():
    P = build_poset(4)
    assert ((3, 3), (1, 1)) in P.leq          # b_33 <= b_11
    assert ((2, 4), (1, 2)) in P.leq
    assert not P.comparable((1, 3), (3, 3))   # the antichain of (4,3,1)


@pytest.mark.parametrize("n,count", [(1, 2), (2, 5), (3, 14), (4, 42), (5, 132), (6, 429)])
def test_antichain_counts(n, count):
    P = build_poset(n)
    antichains = enumerate_antichains(P)
    assert len(antichains) == count == antichain_count_formula(n)
    assert frozenset() in antichains
    assert all(is_antichain(P, a) for a in antichains)


def test_dyck_figure_example():
    P = build_poset(3)
    assert antichain_to_dyck(P, {(1, 2)}) == (1, -1, 1, 1, 1, -1, -1, -1)
    assert antichain_to_dyck(P, frozenset()) == (1, -1) * 4


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_dyck_bijection(n):
    P = build_poset(n)
    paths = set()
    for a in enumerate_antichains(P):
        steps = antichain_to_dyck(P, a)
        assert len(steps) == 2 * n + 2
        assert dyck_to_antichain(P, steps) == a
        paths.add(steps)
    assert len(paths) == antichain_count_formula(n)


def test_dyck_rejects_non_antichain():
    P = build_poset(3)
    with pytest.raises(ValueError):
        antichain_to_dyck(P, {(1, 1), (2, 2)})


def _linear_extensions_brute(P):
    from itertools import permutations

    count = 0
    for perm in permutations(P.elements):
        pos = {x: i for i, x in enumerate(perm)}
        # listing must go bottom-up
        if all(pos[x] <= pos[y] for (x, y) in P.leq):
            count += 1
    return count


@pytest.mark.parametrize("n", [1, 2, 3])
def test_linear_extensions_against_brute_force(n):
    P = build_poset(n)
    assert linear_extension_count(P) == _linear_extensions_brute(P)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_linear_extensions_equal_staircase_syt(n):
    assert linear_extension_count(build_poset(n)) == staircase_syt_count(n)


def test_linear_extension_guard():
    with pytest.raises(ValueError):
        linear_extension_count(build_poset(6))


def test_superpotential_n3():
    terms = build_superpotential(3)
    assert len(terms) == 10
    quantum = [t.cells for t in terms if t.kind == "quantum"]
    assert quantum == [
        ((1, 1), (1, 2), (1, 3)),
        ((1, 1), (1, 2), (2, 3)),
        ((1, 1), (2, 2), (2, 3)),
        ((1, 1), (2, 2), (3, 3)),
    ]
    assert str(terms[0]) == "a11"
    assert str(terms[-1]) == "q/(a11 a22 a33)"


def test_superpotential_sizes():
    assert len(build_superpotential(1)) == 2
    assert len(build_superpotential(4)) == 18
    assert len(strict_staircase_partitions(5)) == 2 ** 4


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_quantum_terms_are_maximal_chains(n):
    P = build_poset(n)
    chains = {tuple(sorted(c)) for c in maximal_chains(P)}
    denominators = {
        tuple(sorted(quantum_denominator(n, lam)))
        for lam in strict_staircase_partitions(n)
    }
    assert denominators == chains


def test_tropicalize_n3():
    cells = lex_cells(3)
    rows = {ineq.as_row(cells) for ineq in tropicalize(build_superpotential(3))}
    positivity = {(tuple(1 if c == cell else 0 for c in cells), 0) for cell in cells}
    chain = {
        (tuple(-1 if c in chain else 0 for c in cells), 1)
        for chain in [
            ((1, 1), (1, 2), (1, 3)),
            ((1, 1), (1, 2), (2, 3)),
            ((1, 1), (2, 2), (2, 3)),
            ((1, 1), (2, 2), (3, 3)),
        ]
    }
    assert rows == positivity | chain


def test_gamma_routes_agree():
    for n in (1, 2, 3, 4):
        H = gamma_hrep(n)
        assert set(H.rows) == set(chain_polytope_rows(build_poset(n)))
        assert len(H.rows) == n * (n + 1) // 2 + 2 ** (n - 1)


def test_gamma_n1_is_unit_segment():
    H = gamma_hrep(1)
    assert set(H.rows) == {((1,), 0), ((-1,), 1)}


def test_gamma_vertices_are_indicators():
    P = build_poset(3)
    vertices = gamma_vertex_set(3)
    assert len(vertices) == 14
    assert all(set(v) <= {0, 1} for v in vertices)
    assert antichain_indicator(3, frozenset()) in vertices


@given(st.integers(min_value=1, max_value=5))
def test_ideal_of_antichain_is_downward_closed(n):
    P = build_poset(n)
    for a in enumerate_antichains(P)[:40]:
        ideal = P.down_set(a)
        assert all(y in ideal for x in ideal for y in P.elements if (y, x) in P.leq)
