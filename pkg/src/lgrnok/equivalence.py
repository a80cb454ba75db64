"""The valuation matrix M_n and the unimodular match of the two polytopes.

Columns of M_n are valuations of the Pluecker coordinates squeezed between
the (n-1) x (n-1) and n x n squares: pair (i, j) with 0 <= i <= j <= n-1
names the diagram with j extra boxes right of the diagonal and i below,
columns ordered by ascending i then descending j.  Rows follow the
valuation coordinate system.  M_n carries the antichain indicator vertices
of the superpotential polytope onto the Pluecker valuation set; the block
structure, the constructive column reduction, and that vertex match are
each checkable in exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from . import polytope, superpotential
from .linalg import bareiss_det, identity, mat_mul, mat_vec
from .partitions import (
    Partition,
    complement,
    diagonal_balance,
    hook_decomposition,
    hook_partition,
    normalize,
    staircase_syt_count,
    transpose_classes,
)
from .superpotential import (
    antichain_indicator,
    build_poset,
    enumerate_antichains,
    gamma_hrep,
    is_antichain,
    lex_cells,
)
from .valuation import coordinate_system, valuation_maxdiag

Pair = tuple[int, int]


def column_pairs(n: int) -> tuple[Pair, ...]:
    """(i, j) with 0 <= i <= j <= n-1: ascending i, descending j."""
    return tuple((i, j) for i in range(n) for j in range(n - 1, i - 1, -1))


def column_partition(n: int, i: int, j: int) -> Partition:
    """Diagram containing the (n-1) x (n-1) square with j boxes added right
    of the main diagonal and i below."""
    if not 0 <= i <= j <= n - 1:
        raise ValueError(f"bad column pair ({i}, {j}) for n={n}")
    return normalize((n,) * j + (n - 1,) * (n - 1 - j) + (i,))


@dataclass(frozen=True)
class ValuationMatrix:
    n: int
    entries: tuple[tuple[int, ...], ...]
    row_labels: tuple[Partition, ...]
    col_pairs: tuple[Pair, ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def column(self, t: int) -> tuple[int, ...]:
        return tuple(row[t] for row in self.entries)

    def apply(self, vector) -> tuple:
        return mat_vec(self.entries, tuple(vector))


@cache
def build_valuation_matrix(n: int) -> ValuationMatrix:
    rows = coordinate_system(n)
    pairs = column_pairs(n)
    columns = [valuation_maxdiag(n, column_partition(n, i, j)) for (i, j) in pairs]
    entries = tuple(tuple(col[r] for col in columns) for r in range(len(rows)))
    return ValuationMatrix(n=n, entries=entries, row_labels=rows, col_pairs=pairs)


# -- block structure ---------------------------------------------------------


def upper_left_closed_form(n: int) -> tuple[tuple[int, ...], ...]:
    """1 on the bottom row, else 1 up to the antidiagonal and 2 past it."""
    return tuple(
        tuple(1 if i == n else (1 if j <= n - i else 2) for j in range(1, n + 1))
        for i in range(1, n + 1)
    )


@dataclass(frozen=True)
class BlockReport:
    n: int
    upper_left_ok: bool
    lower_right_ok: bool
    lower_left_ok: bool
    upper_right_bottom_row_ok: bool
    witness: str = ""

    @property
    def all_ok(self) -> bool:
        return (
            self.upper_left_ok
            and self.lower_right_ok
            and self.lower_left_ok
            and self.upper_right_bottom_row_ok
        )


def check_blocks(M: ValuationMatrix) -> BlockReport:
    n = M.n
    if n < 2:
        raise ValueError("block structure needs n >= 2")
    e = M.entries
    witness = []

    ul_expect = upper_left_closed_form(n)
    ul_ok = all(e[i][j] == ul_expect[i][j] for i in range(n) for j in range(n))
    if not ul_ok:
        bad = next(
            (i, j, e[i][j], ul_expect[i][j])
            for i in range(n)
            for j in range(n)
            if e[i][j] != ul_expect[i][j]
        )
        witness.append(f"upper left {bad}")

    prev = build_valuation_matrix(n - 1).entries
    lr_ok = all(
        e[n + r][n + c] == prev[r][c]
        for r in range(len(prev))
        for c in range(len(prev))
    )
    if not lr_ok:
        witness.append("lower right block differs from the (n-1) matrix")

    ll_cols = [tuple(e[r][c] for r in range(n, M.size)) for c in range(n)]
    ll_ok = len(set(ll_cols)) == 1 and any(ll_cols[0])
    if not ll_ok:
        witness.append(f"lower left columns {ll_cols}")

    ur_ok = all(e[n - 1][c] == 0 for c in range(n, M.size))
    if not ur_ok:
        witness.append(f"upper right bottom row {[e[n - 1][c] for c in range(n, M.size)]}")

    return BlockReport(
        n=n,
        upper_left_ok=ul_ok,
        lower_right_ok=lr_ok,
        lower_left_ok=ll_ok,
        upper_right_bottom_row_ok=ur_ok,
        witness="; ".join(witness),
    )


# -- unimodularity ------------------------------------------------------------


def _block_diag(a, b):
    na, nb = len(a), len(b)
    out = []
    for i in range(na + nb):
        row = []
        for j in range(na + nb):
            if i < na and j < na:
                row.append(a[i][j])
            elif i >= na and j >= na:
                row.append(b[i - na][j - na])
            else:
                row.append(0)
        out.append(tuple(row))
    return tuple(out)


def corner_transform(n: int) -> tuple[tuple[int, ...], ...]:
    """Column operations sending the upper left block to the identity:
    subtract each column from its right neighbour, subtract all later
    columns from the first, then reverse the column order."""
    a = tuple(
        tuple(1 if i == j else (-1 if j == i + 1 else 0) for j in range(n))
        for i in range(n)
    )
    b = tuple(
        tuple(1 if i == j else (-1 if j == 0 and i > 0 else 0) for j in range(n))
        for i in range(n)
    )
    c = tuple(tuple(1 if i + j == n - 1 else 0 for j in range(n)) for i in range(n))
    return mat_mul(mat_mul(a, b), c)


@cache
def reduction_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """Unimodular column operations R with M_n R lower triangular, unit
    diagonal.  Built blockwise: the corner transform upstairs, the (n-1)
    reduction downstairs, then column clean-up of the upper right block."""
    if n == 1:
        return identity(1)
    M = build_valuation_matrix(n).entries
    R = [list(row) for row in _block_diag(corner_transform(n), reduction_matrix(n - 1))]
    N = len(M)
    prod = [list(row) for row in mat_mul(M, R)]
    for r in range(n - 1):
        for c in range(n, N):
            coef = prod[r][c]
            if coef:
                for row_p, row_r in zip(prod, R):
                    row_p[c] -= coef * row_p[r]
                    row_r[c] -= coef * row_r[r]
    reduced = tuple(tuple(row) for row in prod)
    if not is_lower_triangular_unit(reduced):
        raise AssertionError(f"constructive reduction failed for n={n}")
    return tuple(tuple(row) for row in R)


def is_lower_triangular_unit(matrix) -> bool:
    return all(
        (matrix[i][j] == 0 if j > i else (j < i or matrix[i][i] == 1))
        for i in range(len(matrix))
        for j in range(len(matrix))
    )


def is_unimodular(M: ValuationMatrix) -> tuple[bool, int]:
    """(|det| == 1, det), with the constructive reduction replayed as a
    second witness."""
    det = bareiss_det(M.entries)
    reduced = mat_mul(M.entries, reduction_matrix(M.n))
    constructive_ok = is_lower_triangular_unit(reduced)
    return det in (1, -1) and constructive_ok, det


# -- hooks, antichains, and the main theorem ----------------------------------


def antichain_from_partition(n: int, lam: Partition) -> frozenset[Pair]:
    """Hooks of the complement of lam, read as poset elements
    (n+1-a, b+n+1-a); they are pairwise incomparable.

    A hook with arm <= leg is transposed first (complementing a hook or its
    transpose names the same Pluecker class and the same valuation); without
    this the element would fall outside the poset, e.g. the (1,1) hook of
    (4,2,2) in the 4x4 square.
    """
    lam = normalize(lam)
    above, below = diagonal_balance(lam)
    if above < below:
        raise ValueError(f"{lam} has more boxes below the diagonal than right of it")
    hooks = hook_decomposition(complement(lam, n))
    balanced = [(b + 1, a - 1) if a <= b else (a, b) for (a, b) in hooks]
    members = frozenset((n + 1 - a, b + n + 1 - a) for (a, b) in balanced)
    P = build_poset(n)
    if len(members) != len(balanced) or not members <= set(P.elements):
        raise AssertionError(f"hooks of {lam} do not land in the poset: {sorted(members)}")
    if not is_antichain(P, members):
        raise AssertionError(f"hooks of {lam} do not form an antichain: {sorted(members)}")
    return members


def singleton_column_pair(i: int, j: int, n: int) -> Pair:
    """Column pair matched to the singleton antichain {b_ij}."""
    return (i - 1, n - 1 - (j - i))


def verify_singleton_images(n: int) -> bool:
    """Each unit vector lands on the valuation of the complement of the
    matching hook, and the pair bijection is position-preserving."""
    M = build_valuation_matrix(n)
    for t, (i, j) in enumerate(lex_cells(n)):
        if M.col_pairs[t] != singleton_column_pair(i, j, n):
            return False
        hook = hook_partition(n + 1 - i, j - i)
        expected = valuation_maxdiag(n, complement(hook, n))
        if M.column(t) != expected:
            return False
    return True


def verify_maxdiag_additivity(n: int) -> bool:
    """maxdiag(mu \\ lam) splits as the sum over the complement's hooks."""
    from . import plabic
    from .partitions import maxdiag, skew_cells

    G = plabic.build_corect_graph(n)
    labels = sorted(set(G.faces.values()))
    for lam in transpose_classes(n):
        pieces = [complement(hook_partition(a, b), n)
                  for (a, b) in hook_decomposition(complement(lam, n))]
        for mu in labels:
            whole = maxdiag(skew_cells(mu, lam))
            split = sum(maxdiag(skew_cells(mu, piece)) for piece in pieces)
            if whole != split:
                return False
    return True


def verify_valuation_additivity(n: int) -> bool:
    """val(p_lam) is the coordinatewise sum over the complement's hooks."""
    for lam in transpose_classes(n):
        pieces = [complement(hook_partition(a, b), n)
                  for (a, b) in hook_decomposition(complement(lam, n))]
        total = [0] * (n * (n + 1) // 2)
        for piece in pieces:
            total = [a + b for a, b in zip(total, valuation_maxdiag(n, piece))]
        if tuple(total) != valuation_maxdiag(n, lam):
            return False
    return True


@dataclass(frozen=True)
class MainTheoremReport:
    n: int
    vertex_ok: bool
    volume_ok: bool | None
    hull_ok: bool | None
    detail: str = ""

    @property
    def all_ok(self) -> bool:
        return self.vertex_ok and self.volume_ok is not False and self.hull_ok is not False


def image_of_antichains(n: int) -> dict[frozenset, tuple[int, ...]]:
    M = build_valuation_matrix(n)
    P = build_poset(n)
    return {
        a: tuple(M.apply(antichain_indicator(n, a)))
        for a in enumerate_antichains(P)
    }


def verify_main_theorem(
    n: int,
    level: str = "vertex",
    deadline_seconds: float | None = None,
) -> MainTheoremReport:
    """Check that the valuation matrix carries the superpotential polytope
    onto the Newton-Okounkov body.

    level "vertex": antichain indicators land bijectively on the Pluecker
    valuations, matched by the hook-decomposition bijection.  level "hull"
    additionally compares facet systems and normalized volumes.
    """
    if level not in ("vertex", "hull"):
        raise ValueError(f"unknown level {level!r}")
    detail = []

    images = image_of_antichains(n)
    valuations = {lam: valuation_maxdiag(n, lam) for lam in transpose_classes(n)}
    vertex_ok = set(images.values()) == set(valuations.values())
    vertex_ok &= len(set(images.values())) == len(images)
    for lam, value in valuations.items():
        if images[antichain_from_partition(n, lam)] != value:
            vertex_ok = False
            detail.append(f"hook bijection fails at {lam}")
            break
    if not vertex_ok and not detail:
        detail.append("image of antichain indicators != valuation set")

    volume_ok = hull_ok = None
    if level == "hull":
        expected = staircase_syt_count(n)
        gamma_pts = polytope.VPolytope.from_points(
            superpotential.gamma_vertex_set(n)
        )
        delta_pts = polytope.VPolytope.from_points(images.values())
        vol_gamma = polytope.normalized_volume(gamma_pts, deadline_seconds)
        vol_delta = polytope.normalized_volume(delta_pts, deadline_seconds)
        volume_ok = vol_gamma == vol_delta == Fraction(expected)
        if not volume_ok:
            detail.append(f"volumes {vol_gamma} / {vol_delta}, expected {expected}")
        facets_gamma_image = polytope.facets(delta_pts, deadline_seconds).row_set()
        delta_direct = polytope.VPolytope.from_points(
            valuation_maxdiag(n, lam) for lam in transpose_classes(n)
        )
        facets_delta = polytope.facets(delta_direct, deadline_seconds).row_set()
        hull_ok = facets_gamma_image == facets_delta
        if not hull_ok:
            detail.append("facet systems differ")

    return MainTheoremReport(
        n=n,
        vertex_ok=vertex_ok,
        volume_ok=volume_ok,
        hull_ok=hull_ok,
        detail="; ".join(detail),
    )


def gamma_vertices_match_hrep(n: int, deadline_seconds: float | None = None) -> bool:
    """Vertex enumeration of the superpotential H-rep returns exactly the
    antichain indicator vectors."""
    enumerated = polytope.vertices(gamma_hrep(n), deadline_seconds)
    expected = tuple(sorted(polytope.as_point(v) for v in superpotential.gamma_vertex_set(n)))
    return enumerated.points == expected
