"""Valuations of Pluecker coordinates in the co-rectangles coordinate system.

Coordinates are indexed by transpose-orbits of face labels of the graph
(the orbit of the empty label is dropped: no flow ever has that face on its
left, so the coordinate is identically zero).  Each Pluecker coordinate
gets an integer vector two independent ways: the coordinatewise-minimal
exponent vector over its flow monomials, and the closed form

    entry at orbit {mu, mu^T}  =  maxdiag(mu \\ lam) + maxdiag(mu^T \\ lam)

(one summand when mu is self-transpose).
"""

from __future__ import annotations

from collections import Counter
from functools import cache

from . import plabic
from .partitions import (
    Partition,
    check_in_box,
    maxdiag,
    orbit_representative,
    partition_to_indexset,
    skew_cells,
    transpose,
    transpose_classes,
)


@cache
def coordinate_system(n: int) -> tuple[Partition, ...]:
    """Orbit representatives of the nonempty face labels, ordered by
    descending reverse-lexicographic comparison of their index sets."""
    G = plabic.build_corect_graph(n)
    reps = {orbit_representative(label) for label in G.faces.values() if label}

    def key(rep: Partition):
        return tuple(reversed(partition_to_indexset(rep, n)))

    order = tuple(sorted(reps, key=key, reverse=True))
    assert len(order) == n * (n + 1) // 2
    return order


def orbit_vector(n: int, monomial: Counter) -> tuple[int, ...]:
    """Collapse a face-variable monomial to exponents per coordinate orbit."""
    coords = coordinate_system(n)
    totals: Counter = Counter()
    for label, exp in monomial.items():
        totals[orbit_representative(label)] += exp
    if any(rep and rep not in coords for rep in totals):
        raise ValueError("monomial mentions an unknown face orbit")
    return tuple(totals.get(rep, 0) for rep in coords)


def valuation_from_flows(n: int, lam: Partition) -> tuple[int, ...]:
    """Coordinatewise minimum over the flow monomials for p_lam, which must
    be attained by exactly one flow."""
    lam = check_in_box(lam, n)
    G, O = plabic.corect_network(n)
    J = partition_to_indexset(lam, n)
    vectors = [orbit_vector(n, m) for m in plabic.flow_polynomial(G, O, J)]
    if not vectors:
        raise ValueError(f"no flow realizes the Pluecker coordinate of {lam}")
    low = tuple(min(col) for col in zip(*vectors))
    hits = vectors.count(low)
    if hits != 1:
        raise ValueError(
            f"coordinatewise minimum for {lam} attained by {hits} monomials; "
            "a unique minimal flow was expected"
        )
    return low


def valuation_maxdiag(n: int, lam: Partition) -> tuple[int, ...]:
    """Closed-form valuation from diagonal runs of the skew regions."""
    lam = check_in_box(lam, n)
    out = []
    for mu in coordinate_system(n):
        mu_t = transpose(mu)
        entry = maxdiag(skew_cells(mu, lam))
        if mu_t != mu:
            entry += maxdiag(skew_cells(mu_t, lam))
        out.append(entry)
    return tuple(out)


def all_plucker_valuations(n: int, cross_check: bool | None = None) -> dict[Partition, tuple[int, ...]]:
    """Valuation of one representative per transpose class, keyed by the
    representative, in ascending index-set order.

    By default the flow model is replayed against the closed form for
    n <= 4; a mismatch raises.
    """
    if cross_check is None:
        cross_check = n <= 4
    table: dict[Partition, tuple[int, ...]] = {}
    for rep in transpose_classes(n):
        value = valuation_maxdiag(n, rep)
        if cross_check:
            flows = valuation_from_flows(n, rep)
            if flows != value:
                raise AssertionError(
                    f"valuation oracle mismatch at {rep}: flows {flows}, "
                    f"maxdiag {value}"
                )
        table[rep] = value
    return table


def delta_vertices(n: int) -> tuple[tuple[int, ...], ...]:
    """Value set of the Pluecker valuations: the generators whose convex
    hull is the Newton-Okounkov body."""
    return tuple(sorted(set(all_plucker_valuations(n, cross_check=False).values())))
