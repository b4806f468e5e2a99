"""Boundary triangulations, coning, and the visibility half-open construction.

The pipeline is: triangulate each facet by recursively pulling its
lexicographically smallest vertex, cone the boundary cells over an interior
apex, then pick a generic point y and remove from every cell the facets whose
halfspace excludes y.  That turns the cover into a genuine partition with
exactly one closed cell, which is what makes constant terms add up correctly
downstream.

Everything is deterministic: vertex orderings are lexicographic and the
generic point comes from a fixed perturbation schedule that is verified
exactly and retried with a finer step on failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil, floor

from .errors import (
    AffinelyDependent,
    BoundExceeded,
    ExhaustedRetries,
    NotFullDimensional,
    NotGeneric,
    NotLatticePolytope,
)
from .geometry import Halfspace, Point, Polytope, _make_halfspace, as_point, build_polytope
from .linalg import diagonalize, matrix_rank, solve_unique, vec_add, vec_scale, vec_sub


@dataclass(frozen=True)
class HalfOpenSimplex:
    """Simplex with a mask of removed facets; facet i is opposite vertices[i].

    A True mask entry removes the facet opposite that vertex, i.e. forces the
    barycentric coordinate of that vertex to stay strictly positive.
    """

    vertices: tuple[Point, ...]
    missing: tuple[bool, ...]

    def __post_init__(self):
        if len(self.vertices) != len(self.missing):
            raise ValueError("mask length must equal vertex count")
        edges = [vec_sub(v, self.vertices[0]) for v in self.vertices[1:]]
        if matrix_rank(edges) != len(self.vertices) - 1:
            raise AffinelyDependent("simplex vertices are affinely dependent")

    @staticmethod
    def closed(vertices) -> "HalfOpenSimplex":
        vs = tuple(as_point(v) for v in vertices)
        return HalfOpenSimplex(vs, (False,) * len(vs))

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    @property
    def is_closed(self) -> bool:
        return not any(self.missing)

    @property
    def missing_count(self) -> int:
        return sum(self.missing)

    def barycentric(self, x: Point):
        """Barycentric coordinates of x, or None when x is off the affine span."""
        rows = [list(v) + [1] for v in self.vertices]
        columns = list(zip(*rows))
        return solve_unique(columns, list(x) + [1])

    def contains(self, x) -> bool:
        """Half-open membership: lambda_i >= 0, strictly so on missing facets."""
        coords = self.barycentric(as_point(x))
        if coords is None:
            return False
        return all(c > 0 if miss else c >= 0
                   for c, miss in zip(coords, self.missing))

    def to_json_dict(self, pool: dict[Point, int]) -> dict:
        return {"vertices": [pool[v] for v in self.vertices],
                "missing": list(self.missing)}


@dataclass(frozen=True)
class BoundaryTriangulation:
    """Disjoint half-open triangulation of the boundary, one closed cell."""

    simplices: tuple[HalfOpenSimplex, ...]
    parent: Polytope

    def __post_init__(self):
        closed = sum(1 for s in self.simplices if s.is_closed)
        if closed != 1:
            raise ValueError("expected exactly one closed simplex, found %d" % closed)


@dataclass(frozen=True)
class ConeTriangulation:
    apex: Point
    cells: tuple[HalfOpenSimplex, ...]
    parent: Polytope


def _facet_vertices(P: Polytope, hs: Halfspace) -> tuple[Point, ...]:
    return tuple(v for v in P.vertices if hs.slack(v) == 0)


def _chart(points):
    """Exact coordinates of the points in a chart of their affine hull."""
    base = points[0]
    basis = []
    for p in points[1:]:
        trial = basis + [vec_sub(p, base)]
        if matrix_rank(trial) == len(trial):
            basis.append(vec_sub(p, base))
    columns = list(zip(*basis))
    return [solve_unique(columns, vec_sub(p, base)) for p in points], len(basis)


def _pull_triangulate(points) -> list[tuple[Point, ...]]:
    """Pulling triangulation of conv(points): recursively cone the lex-min vertex
    over the facets that do not contain it.  Returns lex-sorted vertex tuples."""
    points = sorted(points)
    charted, k = _chart(points)
    if k == 0:
        return [(points[0],)]
    if len(points) == k + 1:
        return [tuple(points)]
    sub = build_polytope(charted)
    chart_of = dict(zip(charted, points))
    apex_chart = min(sub.vertices)
    simplices = []
    for hs in sub.facets:
        face = _facet_vertices(sub, hs)
        if apex_chart in face:
            continue
        for piece in _pull_triangulate(face):
            simplices.append(tuple(sorted(chart_of[c] for c in piece) )
                             + (chart_of[apex_chart],))
    # re-sort each simplex so vertex order is the global lexicographic one
    return sorted(tuple(sorted(s)) for s in simplices)


def triangulate_boundary(P: Polytope) -> list[HalfOpenSimplex]:
    """Closed (d-1)-simplices covering the boundary, using only vertices of P."""
    if not P.is_full_dimensional:
        raise NotFullDimensional("boundary triangulation needs a full-dimensional polytope")
    if P.dim < 1:
        raise NotFullDimensional("boundary triangulation needs dimension >= 1")
    simplices = []
    for hs in P.facets:
        for piece in _pull_triangulate(_facet_vertices(P, hs)):
            simplices.append(HalfOpenSimplex.closed(piece))
    return sorted(simplices, key=lambda s: s.vertices)


def pyramid(x, S: HalfOpenSimplex) -> HalfOpenSimplex:
    """Cone S over the apex x; the new facet opposite x is present."""
    x = as_point(x)
    rows = [vec_sub(v, S.vertices[0]) for v in S.vertices[1:]]
    if matrix_rank(rows + [vec_sub(x, S.vertices[0])]) == len(rows):
        raise AffinelyDependent("apex lies in the affine span of the simplex")
    return HalfOpenSimplex(S.vertices + (x,), S.missing + (False,))


def cone_over_boundary(T, P: Polytope, apex) -> ConeTriangulation:
    apex = as_point(apex)
    cells = tuple(pyramid(apex, S) for S in T)
    return ConeTriangulation(apex, cells, P)


def cell_halfspaces(S: HalfOpenSimplex) -> list[Halfspace]:
    """Facet halfspaces of a full-dimensional simplex; entry i is opposite vertex i."""
    out = []
    for i, v in enumerate(S.vertices):
        others = [w for j, w in enumerate(S.vertices) if j != i]
        out.append(_make_halfspace(others, v))
    return out


def pick_generic_point(Tprime: ConeTriangulation, seed: int = 0) -> Point:
    """Deterministic rational interior point off every cell hyperplane.

    Starts from the apex (or the vertex centroid when the apex sits on the
    boundary) and perturbs along a power schedule epsilon, epsilon^2, ... in
    the coordinate directions; genericity is verified exactly and the step is
    halved up to 32 times.
    """
    P = Tprime.parent
    if not Tprime.cells:
        raise ValueError("cone triangulation has no cells")
    d = P.ambient_dim
    from .geometry import contains  # local import to avoid cycle at module load

    base = Tprime.apex
    if not contains(P, base, "interior"):
        base = vec_scale(Fraction(1, len(P.vertices)),
                         [sum(v[c] for v in P.vertices) for c in range(d)])
    planes = [hs for cell in Tprime.cells for hs in cell_halfspaces(cell)]
    for attempt in range(32):
        eps = Fraction(1, 64 * (seed + 1) * 2 ** attempt)
        offsetv = [Fraction(0)] * d
        for i in range(d):
            offsetv[(i + seed) % d] += eps ** (i + 1)
        y = vec_add(base, offsetv)
        if contains(P, y, "interior") and all(hs.slack(y) != 0 for hs in planes):
            return y
    raise ExhaustedRetries("no generic point found after 32 refinements")


def _apply_visibility(cell: HalfOpenSimplex, y: Point) -> HalfOpenSimplex:
    """Remove the facets of a closed cell whose halfspace excludes y."""
    mask = []
    for hs in cell_halfspaces(cell):
        slack = hs.slack(y)
        if slack == 0:
            raise NotGeneric("point lies on a cell hyperplane")
        mask.append(slack < 0)
    return HalfOpenSimplex(cell.vertices, tuple(mask))


def half_open_decompose(T, P: Polytope, y=None, apex=None, seed: int = 0):
    """Turn closed boundary cells into a disjoint half-open triangulation.

    T is a list of closed (d-1)-simplices covering the boundary.  The cells
    are coned over `apex` (default: the canonical interior point of minimal
    dilation denominator), facets visible from the generic point y are
    removed, and the masks are restricted back to the boundary cells.  Returns
    (BoundaryTriangulation, ConeTriangulation).
    """
    if apex is None:
        apex = find_interior_point(P)[1]
    cone = cone_over_boundary(T, P, apex)
    if y is None:
        y = pick_generic_point(cone, seed=seed)
    else:
        y = as_point(y)
    open_cells = tuple(_apply_visibility(cell, y) for cell in cone.cells)
    boundary = tuple(
        HalfOpenSimplex(cell.vertices[:-1], cell.missing[:-1]) for cell in open_cells)
    # the facet opposite the apex is never visible, so masks restrict cleanly
    assert all(not cell.missing[-1] for cell in open_cells)
    return (BoundaryTriangulation(boundary, P),
            ConeTriangulation(cone.apex, open_cells, P))


def interior_lattice_points(P: Polytope) -> list[tuple[int, ...]]:
    """All integer points strictly inside P, in lexicographic order."""
    facets = P.facets
    lows = [ceil(min(v[c] for v in P.vertices)) for c in range(P.ambient_dim)]
    highs = [floor(max(v[c] for v in P.vertices)) for c in range(P.ambient_dim)]
    out = []
    for u in product(*(range(lo, hi + 1) for lo, hi in zip(lows, highs))):
        if all(hs.slack(u) > 0 for hs in facets):
            out.append(u)
    return out


def find_interior_point(P: Polytope):
    """Smallest positive integer ell with an interior lattice point in ell*P.

    Returns (ell, x) with x = u / ell for the lexicographically smallest such
    lattice point u.  The search cannot legitimately pass q*(d+1).
    """
    if not P.is_full_dimensional:
        raise NotFullDimensional("interior point search needs a full-dimensional polytope")
    from .geometry import dilate  # late import: geometry must not depend on us

    bound = P.denominator_q * (P.dim + 1)
    for ell in range(1, bound + 1):
        pts = interior_lattice_points(dilate(P, ell))
        if pts:
            u = pts[0]
            return ell, tuple(Fraction(c, ell) for c in u)
    raise BoundExceeded("no interior lattice point up to dilation %d" % bound)


def is_unimodular(T, parent: Polytope | None = None) -> bool:
    """True when every boundary simplex has normalized volume one.

    T may be a BoundaryTriangulation or a plain list of simplices together
    with the parent polytope (masks are irrelevant to volumes).
    """
    if isinstance(T, BoundaryTriangulation):
        simplices, parent = T.simplices, T.parent
    else:
        simplices = tuple(T)
        if parent is None:
            raise ValueError("parent polytope required for a bare simplex list")
    if not parent.is_lattice:
        raise NotLatticePolytope("unimodularity is defined for lattice polytopes")
    for S in simplices:
        rows = [tuple(int(c) for c in v) + (1,) for v in S.vertices]
        diag, _ = diagonalize(list(zip(*rows)))  # columns = homogenized vertices
        vol = 1
        for s in diag:
            vol *= s
        if vol != 1:
            return False
    return True


def triangulation_to_json_dict(cone: ConeTriangulation) -> dict:
    """Cells as vertex-index lists into a shared point pool, plus masks."""
    pool_points = list(cone.parent.vertices)
    index = {v: i for i, v in enumerate(pool_points)}
    for cell in cone.cells:
        for v in cell.vertices:
            if v not in index:
                index[v] = len(pool_points)
                pool_points.append(v)
    from .geometry import format_rational
    return {
        "points": [[format_rational(c) for c in v] for v in pool_points],
        "apex": index[cone.apex],
        "cells": [cell.to_json_dict(index) for cell in cone.cells],
    }
