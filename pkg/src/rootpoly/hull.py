"""Brute-force geometric ground truth for face questions.

Everything here works directly from the definition of a face: a subset S of
the polytope's vertices is a face exactly when some hyperplane touches the
polytope precisely at S.  That existence question is an exact rational
linear program, solved without any of the combinatorial theory, so the
module serves as an independent oracle for cross-checks at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterable, Sequence

from .graphs import Digraph, Subgraph
from .linprog import STOPPED, UNBOUNDED, simplex_maximize


class NotASubsetOfVerticesError(ValueError):
    pass


class EmptySetError(ValueError):
    pass


class TooLargeError(ValueError):
    pass


Point = tuple[int, ...]


@dataclass(frozen=True)
class VertexSet:
    """The vertices of the polytope of G: the origin, then e_i - e_j per edge, in edge order."""

    n: int
    points: tuple[Point, ...]

    @cached_property
    def index_of(self) -> dict[Point, int]:
        return {p: i for i, p in enumerate(self.points)}


def polytope_vertices(g: Digraph) -> VertexSet:
    pts = [tuple([0] * g.n)]
    for u, v in g.edges:
        p = [0] * g.n
        p[u - 1] = 1
        p[v - 1] = -1
        pts.append(tuple(p))
    return VertexSet(g.n, tuple(pts))


def descriptor_indices(h: Subgraph, contains_origin: bool) -> frozenset[int]:
    """Vertex indices (into the parent's VertexSet) of the face encoded by (H, origin flag)."""
    idx = {i + 1 for i in h.mask}
    if contains_origin:
        idx.add(0)
    return frozenset(idx)


# --- exact linear algebra helpers -------------------------------------------


def _row_reduce(rows: list[list[Fraction]]) -> tuple[list[int], list[list[Fraction]]]:
    """In-place reduced row echelon form; returns pivot column indices."""
    if not rows:
        return [], rows
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        sel = -1
        for i in range(r, len(rows)):
            if rows[i][col] != 0:
                sel = i
                break
        if sel < 0:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return pivots, rows


def _rank(vectors: Sequence[Sequence[int]]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    pivots, _ = _row_reduce(rows)
    return len(pivots)


def _nullspace_basis(vectors: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    """Integer basis of {c : v.c = 0 for all v}, one column per free coordinate."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    pivots, rows = _row_reduce(rows)
    pivot_set = set(pivots)
    basis: list[list[int]] = []
    for free in range(n):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * n
        vec[free] = Fraction(1)
        for r, col in enumerate(pivots):
            vec[col] = -rows[r][free]
        scale = lcm(*(x.denominator for x in vec))
        basis.append([int(x * scale) for x in vec])
    return basis


def affine_dimension(points: Iterable[Point]) -> int:
    """Rank over the rationals of the differences from a base point."""
    pts = list(points)
    if not pts:
        raise EmptySetError("affine dimension of the empty set")
    base = pts[0]
    diffs = [[x - y for x, y in zip(p, base)] for p in pts[1:]]
    return _rank(diffs)


# --- the supporting-hyperplane linear program --------------------------------


def _face_lp(vs: VertexSet, included: frozenset[int], want_witness: bool):
    """Decide whether the vertex subset is a face; optionally return (c, c0).

    Maximises the separation margin delta subject to c.v = c.v0 on the
    subset, c.v >= c.v0 + delta off it, and -1 <= c_i <= 1; the subset is a
    face exactly when the optimum is positive.  Conventions: the empty set
    and the full vertex set are faces.
    """
    k = len(vs.points)
    n = vs.n
    if not included:
        return True, (tuple(Fraction(0) for _ in range(n)), Fraction(-1))
    if len(included) == k:
        return True, (tuple(Fraction(0) for _ in range(n)), Fraction(0))

    inc = sorted(included)
    v0 = vs.points[inc[0]]
    eq_rows = [[x - y for x, y in zip(vs.points[i], v0)] for i in inc[1:]]
    basis = _nullspace_basis(eq_rows, n)
    d = len(basis)
    if d == 0:
        # Only c = 0 satisfies the equalities; no strict separation possible.
        return False, None

    # Reduced coordinates: c = sum_r y_r * basis[r], variables y = p - q >= 0
    # plus the margin delta; columns are (p_1..p_d, q_1..q_d, delta).
    lhs: list[list[int]] = []
    rhs: list[int] = []
    for j in range(k):
        if j in included:
            continue
        wv = [x - y for x, y in zip(vs.points[j], v0)]
        a = [sum(wi * bi for wi, bi in zip(wv, b)) for b in basis]
        lhs.append([-x for x in a] + a + [1])
        rhs.append(0)
    for i in range(n):
        row = [b[i] for b in basis]
        if not any(row):
            continue
        lhs.append(row + [-x for x in row] + [0])
        rhs.append(1)
        lhs.append([-x for x in row] + row + [0])
        rhs.append(1)

    objective = [0] * (2 * d) + [1]
    stop = None if want_witness else 0
    res = simplex_maximize(objective, lhs, rhs, stop_above=stop)
    if res.status == UNBOUNDED:
        raise RuntimeError("separation program is unbounded; input points are inconsistent")
    is_face = res.status == STOPPED or res.value > 0
    if not want_witness:
        return is_face, None
    if not is_face:
        return False, None
    y = [res.x[r] - res.x[d + r] for r in range(d)]
    c = tuple(sum(Fraction(b[i]) * y[r] for r, b in enumerate(basis)) for i in range(n))
    c0 = sum(ci * x for ci, x in zip(c, v0))
    return True, (c, c0)


def _as_indices(vs: VertexSet, subset: Iterable[Point | int]) -> frozenset[int]:
    out = set()
    for item in subset:
        if isinstance(item, int):
            if not (0 <= item < len(vs.points)):
                raise NotASubsetOfVerticesError(f"vertex index {item} out of range")
            out.add(item)
        else:
            idx = vs.index_of.get(tuple(item))
            if idx is None:
                raise NotASubsetOfVerticesError(f"{item} is not a vertex of the polytope")
            out.add(idx)
    return frozenset(out)


def is_face_bruteforce(g: Digraph, subset: Iterable[Point | int]) -> bool:
    """True iff the given vertices (points or indices) are exactly the vertex set of a face."""
    vs = polytope_vertices(g)
    included = _as_indices(vs, subset)
    ok, _ = _face_lp(vs, included, want_witness=False)
    return ok


def supporting_hyperplane(
    g: Digraph, subset: Iterable[Point | int]
) -> tuple[tuple[Fraction, ...], Fraction] | None:
    """An exact (c, c0) touching the polytope precisely at the subset, or None."""
    vs = polytope_vertices(g)
    included = _as_indices(vs, subset)
    ok, witness = _face_lp(vs, included, want_witness=True)
    return witness if ok else None


# --- exhaustive face lattice ---------------------------------------------------


@dataclass
class FaceLattice:
    """Every face of the polytope as a vertex-index set with its dimension.

    Includes the empty face (dimension -1) and the improper face (the whole
    polytope); the f-vector flags control whether those two are reported.
    """

    vertex_set: VertexSet
    faces: dict[frozenset[int], int]

    @property
    def dim(self) -> int:
        return self.faces[frozenset(range(len(self.vertex_set.points)))]

    def is_face(self, indices: Iterable[int]) -> bool:
        return frozenset(indices) in self.faces

    def facets(self) -> list[frozenset[int]]:
        d = self.dim
        return sorted(
            (s for s, fd in self.faces.items() if fd == d - 1), key=sorted
        )

    def f_vector(self, include_empty: bool = False, include_improper: bool = False) -> dict[int, int]:
        counts: dict[int, int] = {}
        full = frozenset(range(len(self.vertex_set.points)))
        for s, fd in self.faces.items():
            if not s and not include_empty:
                continue
            if s == full and not include_improper:
                continue
            counts[fd] = counts.get(fd, 0) + 1
        return dict(sorted(counts.items()))


def enumerate_faces_bruteforce(g: Digraph, cap: int = 16) -> FaceLattice:
    """Test every vertex subset with the separation program; desk scale only."""
    vs = polytope_vertices(g)
    k = len(vs.points)
    if k > cap:
        raise TooLargeError(f"{k} vertices exceeds the cap of {cap}")
    faces: dict[frozenset[int], int] = {}
    for mask in range(1 << k):
        included = frozenset(i for i in range(k) if mask >> i & 1)
        ok, _ = _face_lp(vs, included, want_witness=False)
        if ok:
            if included:
                dim = affine_dimension([vs.points[i] for i in included])
            else:
                dim = -1
            faces[included] = dim
    return FaceLattice(vs, faces)
