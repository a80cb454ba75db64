from functools import lru_cache
from itertools import combinations, product

import pytest

from lgrnok import plabic
from lgrnok.partitions import partitions_in_box, partition_to_indexset, transpose
from lgrnok.valuation import orbit_vector


def test_face_labels_n3():
    G = plabic.build_corect_graph(3)
    assert set(G.faces.values()) == {
        (), (3,), (3, 3), (3, 3, 3), (1, 1, 1), (2, 2, 2),
        (3, 1, 1), (3, 2, 2), (3, 3, 1), (3, 3, 2),
    }


def test_face_labels_n4():
    G = plabic.build_corect_graph(4)
    assert set(G.faces.values()) == {
        (), (4,), (4, 4), (4, 4, 4), (4, 4, 4, 4),
        (1, 1, 1, 1), (2, 2, 2, 2), (3, 3, 3, 3),
        (4, 1, 1, 1), (4, 2, 2, 2), (4, 3, 3, 3),
        (4, 4, 1, 1), (4, 4, 2, 2), (4, 4, 3, 3),
        (4, 4, 4, 1), (4, 4, 4, 2), (4, 4, 4, 3),
    }


@pytest.mark.parametrize("n", range(1, 7))
def test_counts(n):
    G = plabic.build_corect_graph(n)
    assert len(G.faces) == n * n + 1
    assert len(G.colors) == 2 * (n - 1) ** 2 + 2
    labels = set(G.faces.values())
    assert labels == {transpose(l) for l in labels}


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_degrees(n):
    G = plabic.build_corect_graph(n)
    for v in G.colors:
        expected = n + 1 if v in (("T",), ("L",)) else 3
        assert len(G.neighbors(v)) == expected
    for b in G.boundary:
        assert len(G.neighbors(b)) == 1


def test_rejects_nonpositive_n():
    with pytest.raises(ValueError):
        plabic.build_corect_graph(0)


def _brute_force_orientations(G, sources):
    """Ground truth by trying all 2^|E| edge directions."""
    src = set(sources)
    edges = G.edges
    found = []
    for bits in product((0, 1), repeat=len(edges)):
        darts = []
        for e, bit in zip(edges, bits):
            u, v = sorted(e)
            darts.append((u, v) if bit else (v, u))
        ok = True
        for b in G.boundary:
            (d,) = [d for d in darts if b in d]
            if (d[0] == b) != (b[1] in src):
                ok = False
                break
        if ok:
            for v, color in G.colors.items():
                outs = sum(1 for d in darts if d[0] == v)
                ins = sum(1 for d in darts if d[1] == v)
                if color == "filled" and outs != 1:
                    ok = False
                    break
                if color == "hollow" and ins != 1:
                    ok = False
                    break
        if ok:
            found.append(tuple(darts))
    return found


def test_orientation_matches_brute_force_n2():
    G = plabic.build_corect_graph(2)
    brute = _brute_force_orientations(G, (1, 2))
    assert len(brute) == 1
    O = plabic.find_perfect_orientation(G, (1, 2))
    assert set(O.direction) == set(brute[0])


@pytest.mark.parametrize("n", [2, 3, 4])
def test_orientation_exists_and_unique(n):
    G, O = plabic.corect_network(n)
    assert O.source_set == tuple(range(1, n + 1))
    outs = {v: 0 for v in G.colors}
    ins = {v: 0 for v in G.colors}
    for t, h in O.direction:
        if t in outs:
            outs[t] += 1
        if h in ins:
            ins[h] += 1
    for v, color in G.colors.items():
        if color == "filled":
            assert outs[v] == 1
        else:
            assert ins[v] == 1


def test_orientation_is_acyclic_n3():
    _, O = plabic.corect_network(3)
    adj = O.out_neighbors()
    seen, done = set(), set()

    def visit(v):
        seen.add(v)
        for w in adj.get(v, ()):
            assert w not in seen or w in done, f"cycle through {w}"
            if w not in done:
                visit(w)
        done.add(v)

    for v in list(adj):
        if v not in done:
            visit(v)


def test_empty_flow():
    for n in (1, 2, 3, 4):
        G, O = plabic.corect_network(n)
        flows = plabic.enumerate_flows(G, O, tuple(range(1, n + 1)))
        assert len(flows) == 1 and flows[0].paths == ()


def _lgv_flow_count(n, J):
    """Independent oracle: path-count determinant for the nested pairing."""
    G, O = plabic.corect_network(n)
    adj = O.out_neighbors()
    sources = sorted(set(O.source_set) - set(J))
    sinks = sorted(set(J) - set(O.source_set), reverse=True)

    def paths(a, b):
        @lru_cache(maxsize=None)
        def count(v):
            if v == ("b", b):
                return 1
            if v[0] == "b" and v != ("b", a):
                return 0
            return sum(count(w) for w in adj.get(v, ()))

        return count(("b", a))

    m = [[paths(a, b) for b in sinks] for a in sources]

    def det(mat):
        if not mat:
            return 1
        return sum(
            (-1) ** i * mat[0][i] * det([r[:i] + r[i + 1:] for r in mat[1:]])
            for i in range(len(mat))
        )

    return abs(det(m))


def test_three_flows_to_145():
    # the unique perfect orientation admits a third flow through
    # L -> f(2,2) -> h(2,2) -> T; LGV determinant confirms the count
    G, O = plabic.corect_network(3)
    flows = plabic.enumerate_flows(G, O, (1, 4, 5))
    assert len(flows) == 3
    assert _lgv_flow_count(3, (1, 4, 5)) == 3


def test_flow_145_worked_example_face_sets():
    """The two path systems of the worked LGr(3,6) example appear verbatim."""
    G, O = plabic.corect_network(3)
    flows = plabic.enumerate_flows(G, O, (1, 4, 5))
    by_paths = {f.paths: f for f in flows}

    def faces(flow, i):
        return sorted(G.faces[x] for x in flow.left_faces[i])

    top = by_paths[(
        (("b", 2), ("f", 1, 2), ("h", 1, 2), ("f", 2, 2), ("h", 2, 2),
         ("f", 2, 1), ("h", 2, 1), ("b", 5)),
        (("b", 3), ("L",), ("T",), ("b", 4)),
    )]
    assert faces(top, 0) == sorted(
        [(3, 3), (3, 3, 1), (3, 3, 2), (3, 2, 2), (2, 2, 2), (3, 3, 3)]
    )
    assert faces(top, 1) == [(3, 3, 3)]

    bottom = by_paths[(
        (("b", 2), ("f", 1, 2), ("h", 1, 2), ("f", 1, 1), ("h", 1, 1),
         ("f", 2, 1), ("h", 2, 1), ("b", 5)),
        (("b", 3), ("L",), ("T",), ("b", 4)),
    )]
    assert faces(bottom, 0) == sorted(
        [(3, 3), (3, 3, 1), (3, 1, 1), (3, 2, 2), (2, 2, 2), (3, 3, 2), (3, 3, 3)]
    )
    assert faces(bottom, 1) == [(3, 3, 3)]


def test_flow_polynomial_145_orbit_form():
    G, O = plabic.corect_network(3)
    vectors = sorted(orbit_vector(3, m) for m in plabic.flow_polynomial(G, O, (1, 4, 5)))
    minimal = (0, 2, 0, 2, 1, 2)
    assert vectors == [minimal,
                       (0, 2, 1, 2, 1, 2),   # minimal * x_(3,1,1)
                       (0, 2, 1, 2, 2, 2)]   # minimal * x_(3,1,1) x_(3,3,2)


def test_flow_counts_against_lgv_oracle_n3():
    G, O = plabic.corect_network(3)
    for J in combinations(range(1, 7), 3):
        assert len(plabic.enumerate_flows(G, O, J)) == _lgv_flow_count(3, J)


def test_n2_golden_flow_polynomials():
    G, O = plabic.corect_network(2)
    golden = {
        (1, 2): [(0, 0, 0)],
        (1, 3): [(0, 0, 1), (0, 1, 1)],
        (1, 4): [(1, 1, 1)],
        (2, 3): [(1, 1, 1)],
        (2, 4): [(2, 1, 1)],
        (3, 4): [(2, 1, 2)],
    }
    for J, expected in golden.items():
        got = sorted(orbit_vector(2, m) for m in plabic.flow_polynomial(G, O, J))
        assert got == sorted(expected), J


@pytest.mark.parametrize("n", [2, 3])
def test_distinct_flows_have_distinct_raw_monomials(n):
    G, O = plabic.corect_network(n)
    for J in combinations(range(1, 2 * n + 1), n):
        monos = [plabic.monomial_key(m) for m in plabic.flow_polynomial(G, O, J)]
        assert len(monos) == len(set(monos)), J


@pytest.mark.parametrize("n", [2, 3])
def test_orbit_polynomial_transpose_symmetric(n):
    # symmetric weighting: p_lam and p_{lam^T} get identical expressions
    G, O = plabic.corect_network(n)
    for lam in partitions_in_box(n):
        t = transpose(lam)
        if t <= lam:
            continue
        p1 = sorted(orbit_vector(n, m) for m in plabic.flow_polynomial(
            G, O, partition_to_indexset(lam, n)))
        p2 = sorted(orbit_vector(n, m) for m in plabic.flow_polynomial(
            G, O, partition_to_indexset(t, n)))
        assert p1 == p2, lam


def test_n1_degenerate_graph():
    G, O = plabic.corect_network(1)
    assert set(G.faces.values()) == {(), (1,)}
    flows = plabic.enumerate_flows(G, O, (2,))
    assert len(flows) == 1
    assert flows[0].monomial(G) == {(1,): 1}


def test_face_boundaries_and_exports():
    G = plabic.build_corect_graph(3)
    entries = plabic.faces_json(G)
    assert len(entries) == 10
    interior = next(e for e in entries if e["label"] == "3,1,1")
    assert len(interior["boundary"]) == 6  # hexagonal interior cell
    dot = plabic.graph_to_dot(G, plabic.corect_network(3)[1])
    assert dot.startswith("digraph") and '"T"' in dot
