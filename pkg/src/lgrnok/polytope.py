"""Exact rational polytope engine.

V-polytopes are point lists, H-polytopes are systems c.x + d >= 0 with the
rows scaled to primitive integer vectors.  Conversions both ways run the
double description method on a pointed cone with the combinatorial
adjacency test; no floating point anywhere.

Volumes are normalized (dim! times Euclidean).  They come from a recursive
boundary triangulation: cone each face from its least vertex over the
triangulations of the facets avoiding it, memoized per face so every face
of the polytope is hulled exactly once.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .linalg import affine_pivot_columns, bareiss_det, dot, invert, mat_vec, primitive, rref

Point = tuple[Fraction, ...]
Row = tuple[tuple[int, ...], int]  # (coefficients, constant): c.x + d >= 0

MAX_DIM = 10
MAX_FACE_LATTICE_DIM = 8


class UnboundedError(ValueError):
    pass


class TimeBudgetExceeded(RuntimeError):
    pass


class _Deadline:
    def __init__(self, seconds: float | None):
        self.expires = None if seconds is None else time.monotonic() + seconds

    def check(self):
        if self.expires is not None and time.monotonic() > self.expires:
            raise TimeBudgetExceeded("hull computation exceeded its time budget")


_NO_DEADLINE = _Deadline(None)


def as_point(values) -> Point:
    return tuple(Fraction(v) for v in values)


def normalize_row(coeffs, const) -> Row:
    ints = primitive(tuple(coeffs) + (const,))
    return ints[:-1], ints[-1]


@dataclass(frozen=True)
class VPolytope:
    dim: int
    points: tuple[Point, ...]

    @staticmethod
    def from_points(points) -> "VPolytope":
        pts = tuple(sorted({as_point(p) for p in points}))
        if not pts:
            raise ValueError("a polytope needs at least one point")
        if len({len(p) for p in pts}) != 1:
            raise ValueError("points of mixed dimensions")
        return VPolytope(dim=len(pts[0]), points=pts)


@dataclass(frozen=True)
class HPolytope:
    dim: int
    rows: tuple[Row, ...]
    equalities: tuple[Row, ...] = field(default=())

    def row_set(self) -> frozenset[Row]:
        return frozenset(normalize_row(c, d) for c, d in self.rows)

    def satisfied_by(self, point) -> bool:
        p = as_point(point)
        return all(dot(c, p) + d >= 0 for c, d in self.rows) and all(
            dot(c, p) + d == 0 for c, d in self.equalities
        )


# -- double description ----------------------------------------------------


def _extreme_rays(rows: list[tuple[int, ...]], deadline: _Deadline) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone {x : r.x >= 0 for every row}.

    Raises UnboundedError when the rows leave a lineality space, since every
    caller here wants a pointed cone.
    """
    d = len(rows[0])
    frac = [[Fraction(x) for x in row] for row in rows]
    reduced, pivots = rref(frac)
    if len(pivots) < d:
        raise UnboundedError("cone has a lineality space")

    basis_idx: list[int] = []
    seen: list[list[Fraction]] = []
    for i, row in enumerate(frac):
        trial = seen + [list(row)]
        if len(rref(trial)[0]) > len(seen):
            seen = [list(r) for r in rref(trial)[0]]
            basis_idx.append(i)
        if len(basis_idx) == d:
            break
    basis = [rows[i] for i in basis_idx]
    inv = invert(basis)
    rays = [primitive(col) for col in zip(*inv)]

    processed = list(basis_idx)
    zero_sets: dict[tuple[int, ...], int] = {}

    def zero_mask(ray) -> int:
        mask = 0
        for bit, idx in enumerate(processed):
            if dot(rows[idx], ray) == 0:
                mask |= 1 << bit
        return mask

    for r in rays:
        zero_sets[r] = zero_mask(r)

    for idx, row in enumerate(rows):
        if idx in basis_idx:
            continue
        deadline.check()
        values = {r: dot(row, r) for r in rays}
        plus = [r for r in rays if values[r] > 0]
        zero = [r for r in rays if values[r] == 0]
        minus = [r for r in rays if values[r] < 0]
        if not minus:
            processed.append(idx)
            for r in rays:
                zero_sets[r] = zero_sets[r] | ((values[r] == 0) << (len(processed) - 1))
            continue
        fresh = []
        for rp in plus:
            for rm in minus:
                common = zero_sets[rp] & zero_sets[rm]
                adjacent = not any(
                    r3 is not rp and r3 is not rm and (common & ~zero_sets[r3]) == 0
                    for r3 in rays
                )
                if adjacent:
                    combo = tuple(
                        values[rp] * xm - values[rm] * xp for xp, xm in zip(rp, rm)
                    )
                    fresh.append(primitive(combo))
        processed.append(idx)
        rays = plus + zero + sorted(set(fresh) - set(plus) - set(zero))
        zero_sets = {r: zero_mask(r) for r in rays}
    return sorted(set(rays))


def vertices(H: HPolytope, deadline_seconds: float | None = None) -> VPolytope:
    """Exact vertex enumeration; raises UnboundedError for unbounded input."""
    deadline = _Deadline(deadline_seconds)
    if H.dim > MAX_DIM:
        raise ValueError(f"dimension {H.dim} exceeds the supported {MAX_DIM}")
    cone_rows: list[tuple[int, ...]] = [(1,) + (0,) * H.dim]
    for c, d in H.rows:
        cone_rows.append((d,) + tuple(c))
    for c, d in H.equalities:
        cone_rows.append((d,) + tuple(c))
        cone_rows.append(tuple(-x for x in (d,) + tuple(c)))
    rays = _extreme_rays(cone_rows, deadline)
    points = []
    for ray in rays:
        if ray[0] == 0:
            if any(ray[1:]):
                raise UnboundedError(f"recession ray {ray[1:]}")
            continue
        scale = Fraction(1, ray[0])
        points.append(tuple(Fraction(x) * scale for x in ray[1:]))
    if not points:
        raise ValueError("empty polytope")
    return VPolytope.from_points(points)


def _facets_full_dim(points: tuple[Point, ...], deadline: _Deadline) -> tuple[Row, ...]:
    """Irredundant facets of a full-dimensional hull via the polar dual."""
    d = len(points[0])
    m = len(points)
    centroid = tuple(sum(p[i] for p in points) / m for i in range(d))
    cone_rows = [(1,) + (0,) * d]
    for p in points:
        shifted = tuple(x - c for x, c in zip(p, centroid))
        cone_rows.append(primitive((Fraction(1),) + tuple(-x for x in shifted)))
    rays = _extreme_rays(cone_rows, deadline)
    rows = []
    for ray in rays:
        if ray[0] == 0:
            raise AssertionError("polar of a full-dimensional hull must be bounded")
        y = tuple(Fraction(x, ray[0]) for x in ray[1:])
        # y.(x - centroid) <= 1  becomes  -y.x + (1 + y.centroid) >= 0
        rows.append(normalize_row(tuple(-v for v in y), 1 + dot(y, centroid)))
    return tuple(sorted(set(rows)))


def affine_hull_equalities(points: tuple[Point, ...]) -> tuple[Row, ...]:
    """Equations c.x + d = 0 cutting out the affine hull of the points."""
    d = len(points[0])
    p0 = points[0]
    homo = [[Fraction(1)] + list(p) for p in points]
    reduced, pivots = rref(homo)
    # kernel vectors of the homogenized row space give the equations
    eqs = []
    free = [c for c in range(d + 1) if c not in pivots]
    for f in free:
        vec = [Fraction(0)] * (d + 1)
        vec[f] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            vec[pc] = -row[f]
        eqs.append(normalize_row(tuple(vec[1:]), vec[0]))
    return tuple(eq for eq in eqs if any(eq[0]))


def facets(V: VPolytope, deadline_seconds: float | None = None) -> HPolytope:
    """Irredundant H-representation of conv(points).

    Input that is not full-dimensional is handled inside its affine hull:
    the hull equations come back in `equalities` and the facet rows only
    mention the pivot coordinates of the hull.
    """
    deadline = _Deadline(deadline_seconds)
    if V.dim > MAX_DIM:
        raise ValueError(f"dimension {V.dim} exceeds the supported {MAX_DIM}")
    points = V.points
    pivots = affine_pivot_columns(points)
    if len(pivots) == V.dim:
        return HPolytope(dim=V.dim, rows=_facets_full_dim(points, deadline))
    if len(pivots) == 0:
        return HPolytope(
            dim=V.dim, rows=(), equalities=affine_hull_equalities(points)
        )
    projected = tuple(tuple(p[c] for c in pivots) for p in points)
    proj_rows = _facets_full_dim(tuple(sorted(set(projected))), deadline)
    lifted = []
    for coeffs, const in proj_rows:
        full = [0] * V.dim
        for c, col in zip(coeffs, pivots):
            full[col] = c
        lifted.append((tuple(full), const))
    return HPolytope(
        dim=V.dim, rows=tuple(lifted), equalities=affine_hull_equalities(points)
    )


# -- face lattice and f-vector ----------------------------------------------


def f_vector(V: VPolytope, deadline_seconds: float | None = None) -> tuple[int, ...]:
    """(f_0, ..., f_{d-1}) of conv(points) by closing the vertex-facet
    incidences under intersection."""
    deadline = _Deadline(deadline_seconds)
    pivots = affine_pivot_columns(V.points)
    d = len(pivots)
    if d > MAX_FACE_LATTICE_DIM:
        raise ValueError(f"face lattice enumeration guarded to dim {MAX_FACE_LATTICE_DIM}")
    H = facets(V)
    verts = vertices_of_hull(V, H)
    facet_sets = []
    for coeffs, const in H.rows:
        facet_sets.append(
            frozenset(i for i, p in enumerate(verts) if dot(coeffs, p) + const == 0)
        )
    faces: set[frozenset[int]] = set(facet_sets)
    frontier = set(facet_sets)
    while frontier:
        deadline.check()
        fresh: set[frozenset[int]] = set()
        for face in frontier:
            for fs in facet_sets:
                cut = face & fs
                if cut and cut != face and cut not in faces:
                    fresh.add(cut)
        faces |= fresh
        frontier = fresh
    counts = [0] * d
    for face in faces:
        pts = [verts[i] for i in face]
        counts[len(affine_pivot_columns(pts))] += 1
    return tuple(counts)


def vertices_of_hull(V: VPolytope, H: HPolytope | None = None) -> tuple[Point, ...]:
    """Extreme points among V.points (drops interior and boundary-interior
    points)."""
    H = H or facets(V)
    out = []
    for p in V.points:
        active = [row for row in H.rows if dot(row[0], p) + row[1] == 0]
        span = [row[0] for row in active] + [eq[0] for eq in H.equalities]
        if span and len(rref([[Fraction(x) for x in r] for r in span])[0]) == V.dim:
            out.append(p)
    return tuple(out)


# -- volume ------------------------------------------------------------------


def _triangulate(points: tuple[Point, ...], memo, deadline: _Deadline):
    """Simplices (as point tuples) triangulating conv(points).

    Cones the least point over triangulations of the facets that avoid it;
    memoized on the point set so shared faces are hulled once.
    """
    if points in memo:
        return memo[points]
    pivots = affine_pivot_columns(points)
    if len(points) == len(pivots) + 1:
        memo[points] = [points]
        return memo[points]
    projected = tuple(tuple(p[c] for c in pivots) for p in points)
    proj_rows = _facets_full_dim(tuple(sorted(set(projected))), deadline)
    apex = points[0]
    apex_proj = projected[0]
    simplices = []
    for coeffs, const in proj_rows:
        if dot(coeffs, apex_proj) + const == 0:
            continue
        deadline.check()
        on_facet = tuple(
            p for p, q in zip(points, projected) if dot(coeffs, q) + const == 0
        )
        for s in _triangulate(on_facet, memo, deadline):
            simplices.append((apex,) + s)
    memo[points] = simplices
    return simplices


def normalized_volume(V: VPolytope, deadline_seconds: float | None = None) -> Fraction:
    """dim! times the Euclidean volume, by exact triangulation."""
    deadline = _Deadline(deadline_seconds)
    if V.dim > MAX_DIM:
        raise ValueError(f"dimension {V.dim} exceeds the supported {MAX_DIM}")
    pivots = affine_pivot_columns(V.points)
    if len(pivots) < V.dim:
        raise ValueError("normalized_volume needs a full-dimensional polytope")
    total = Fraction(0)
    for simplex in _triangulate(V.points, {}, deadline):
        base = simplex[0]
        rows = [[x - b for x, b in zip(p, base)] for p in simplex[1:]]
        scale = 1
        for row in rows:
            for x in row:
                scale = scale * x.denominator // _gcd(scale, x.denominator)
        int_rows = [[int(x * scale) for x in row] for row in rows]
        total += Fraction(abs(bareiss_det(int_rows)), scale ** len(rows))
    return total


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def euclidean_volume(V: VPolytope, deadline_seconds: float | None = None) -> Fraction:
    return normalized_volume(V, deadline_seconds) / factorial(V.dim)


# -- unimodular maps ----------------------------------------------------------


@dataclass(frozen=True)
class UnimodularMap:
    """x -> M x + t with M an integer matrix of determinant +-1."""

    matrix: tuple[tuple[int, ...], ...]
    translation: tuple[int, ...] | None = None

    def __post_init__(self):
        det = bareiss_det(self.matrix)
        if det not in (1, -1):
            raise ValueError(f"matrix has determinant {det}, not +-1")

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def apply_point(self, p) -> Point:
        image = mat_vec(self.matrix, as_point(p))
        if self.translation:
            image = tuple(x + t for x, t in zip(image, self.translation))
        return tuple(Fraction(x) for x in image)


def apply_map(m: UnimodularMap, V: VPolytope) -> VPolytope:
    if m.dim != V.dim:
        raise ValueError(f"map dimension {m.dim} != polytope dimension {V.dim}")
    return VPolytope.from_points(m.apply_point(p) for p in V.points)


def euler_characteristic_ok(fvec: tuple[int, ...]) -> bool:
    d = len(fvec)
    return sum((-1) ** i * f for i, f in enumerate(fvec)) == 1 - (-1) ** d
