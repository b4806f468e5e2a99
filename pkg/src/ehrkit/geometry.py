"""Exact rational polytopes: vertices, facets, containment, dilation, duality.

Points are tuples of Fraction; every predicate is decided exactly.  Facet
enumeration is an incremental beneath-beyond insertion, which is all the
sophistication needed at desk scale (dimension <= 6, <= 50 vertices).

All types are immutable values; the only mutation anywhere is the
construct-once facet cache, which is idempotent and safe to publish across
threads.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import lcm

from .errors import (
    EmptyInput,
    MixedDimensions,
    NoLatticePoints,
    NonpositiveScale,
    NotFullDimensional,
    OriginNotInterior,
)
from .linalg import (
    diagonalize,
    dot,
    hyperplane_through,
    invert_unimodular,
    matrix_rank,
    primitive_row,
    solve_unique,
    vec_add,
    vec_scale,
    vec_sub,
)

Point = tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse 'p' or 'p/q' exactly; floats and anything else are rejected."""
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise ValueError("not an exact rational literal: %r" % (text,))
    return Fraction(text.strip())


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


def as_point(coords) -> Point:
    return tuple(Fraction(c) for c in coords)


def point_denominator(p: Point) -> int:
    return lcm(*(c.denominator for c in p)) if p else 1


@dataclass(frozen=True, order=True)
class Halfspace:
    """Inequality normal . x <= offset with gcd(normal entries, offset) == 1."""

    normal: tuple[int, ...]
    offset: int

    def slack(self, x: Point) -> Fraction:
        """offset - normal . x; nonnegative on the polytope, zero on the facet."""
        return Fraction(self.offset) - dot(self.normal, x)

    def to_json_dict(self) -> dict:
        return {"normal": [str(a) for a in self.normal], "offset": str(self.offset)}


def _make_halfspace(points: list[Point], inside: Point) -> Halfspace:
    """Halfspace through the given d points, oriented to contain `inside` strictly."""
    normal, offset = hyperplane_through(points)
    side = dot(normal, inside) - offset
    if side == 0:
        raise ValueError("orientation reference lies on the hyperplane")
    if side > 0:
        normal, offset = tuple(-a for a in normal), -offset
    return Halfspace(normal, offset)


def _hull_full_dim(points: list[Point], d: int):
    """Beneath-beyond hull of points affinely spanning R^d.

    Returns (vertices, facets): the extreme points (lex sorted) and the
    irredundant gcd-normalized facet list (lex sorted).  Coplanar simplicial
    pieces produced during insertion are merged by supporting hyperplane at
    the end, and extreme points are recognized by their tight facet normals
    having full rank.
    """
    # greedy affinely independent start simplex
    simplex = [0]
    for i in range(1, len(points)):
        trial = simplex + [i]
        if matrix_rank([vec_sub(points[j], points[trial[0]]) for j in trial[1:]]) == len(trial) - 1:
            simplex.append(i)
        if len(simplex) == d + 1:
            break
    if len(simplex) != d + 1:
        raise ValueError("points do not span the ambient space")

    centroid = vec_scale(Fraction(1, d + 1),
                         [sum(points[i][c] for i in simplex) for c in range(d)])

    def make_facet(vert_ids):
        hs = _make_halfspace([points[i] for i in vert_ids], centroid)
        return (tuple(sorted(vert_ids)), hs)

    facets = [make_facet([j for j in simplex if j != i]) for i in simplex]

    for ip in range(len(points)):
        if ip in simplex:
            continue
        p = points[ip]
        visible = {fi for fi, (_, hs) in enumerate(facets) if hs.slack(p) < 0}
        if not visible:
            continue
        ridge_map: dict[frozenset, list[int]] = {}
        for fi, (verts, _) in enumerate(facets):
            for drop in verts:
                ridge_map.setdefault(frozenset(verts) - {drop}, []).append(fi)
        horizon = []
        for ridge, incident in ridge_map.items():
            assert len(incident) == 2, "hull boundary is not a closed pseudomanifold"
            if (incident[0] in visible) != (incident[1] in visible):
                horizon.append(ridge)
        new_facets = [make_facet(sorted(ridge) + [ip]) for ridge in sorted(horizon, key=sorted)]
        facets = [f for fi, f in enumerate(facets) if fi not in visible] + new_facets

    merged = sorted({hs for _, hs in facets})
    for p in points:
        assert all(hs.slack(p) >= 0 for hs in merged), "hull misses an input point"

    vertices = []
    for p in points:
        tight = [hs.normal for hs in merged if hs.slack(p) == 0]
        if len(tight) >= d and matrix_rank(tight) == d:
            vertices.append(p)
    return tuple(sorted(vertices)), tuple(merged)


@dataclass(frozen=True)
class Polytope:
    """Rational polytope given by its extreme points.

    vertices are lexicographically sorted and irredundant; denominator_q is
    the least positive integer q with q * (every vertex) integral.  The facet
    description is computed on demand and only for full-dimensional polytopes.
    """

    vertices: tuple[Point, ...]
    ambient_dim: int
    dim: int
    denominator_q: int

    @cached_property
    def facets(self) -> tuple[Halfspace, ...]:
        if self.dim != self.ambient_dim:
            raise NotFullDimensional(
                "facet description needs dim == ambient_dim (%d != %d); "
                "project to the affine hull first" % (self.dim, self.ambient_dim))
        _, facets = _hull_full_dim(list(self.vertices), self.ambient_dim)
        return facets

    @property
    def is_lattice(self) -> bool:
        return self.denominator_q == 1

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    def __str__(self) -> str:
        kind = "lattice" if self.is_lattice else "rational (q=%d)" % self.denominator_q
        return "%d-dimensional %s polytope with %d vertices in R^%d" % (
            self.dim, kind, len(self.vertices), self.ambient_dim)

    def to_json_dict(self) -> dict:
        return {"vertices": [[format_rational(c) for c in v] for v in self.vertices]}


def build_polytope(points) -> Polytope:
    """Convex hull of the given rational points, as a Polytope value.

    Interior and otherwise redundant points are dropped; dimension and
    denominator are computed.  Lower-dimensional input is accepted (the hull
    runs in a chart of the affine hull), but facet-based operations will
    refuse it later.
    """
    pts = [as_point(p) for p in points]
    if not pts:
        raise EmptyInput("need at least one point")
    ambient = len(pts[0])
    if ambient == 0 or any(len(p) != ambient for p in pts):
        raise MixedDimensions("points must share a positive ambient dimension")
    pts = sorted(set(pts))
    dim = matrix_rank([vec_sub(p, pts[0]) for p in pts[1:]])

    if dim == 0:
        verts = (pts[0],)
    elif dim == ambient:
        verts, facets = _hull_full_dim(pts, ambient)
        poly = Polytope(verts, ambient, dim, lcm(*(point_denominator(v) for v in verts)))
        poly.__dict__["facets"] = facets  # hull byproduct; identical to lazy result
        return poly
    else:
        basis = [0]
        for i in range(1, len(pts)):
            trial = basis + [i]
            if matrix_rank([vec_sub(pts[j], pts[0]) for j in trial[1:]]) == len(trial) - 1:
                basis.append(i)
            if len(basis) == dim + 1:
                break
        chart_rows = [vec_sub(pts[j], pts[basis[0]]) for j in basis[1:]]
        columns = list(zip(*chart_rows))
        charted = [solve_unique(columns, vec_sub(p, pts[basis[0]])) for p in pts]
        chart_verts, _ = _hull_full_dim(charted, dim)
        keep = set(chart_verts)
        verts = tuple(sorted(p for p, c in zip(pts, charted) if c in keep))

    return Polytope(verts, ambient, dim, lcm(*(point_denominator(v) for v in verts)))


def facet_description(P: Polytope) -> tuple[Halfspace, ...]:
    """Irredundant gcd-normalized halfspaces of a full-dimensional polytope."""
    return P.facets


def contains(P: Polytope, x, mode: str = "closed") -> bool:
    """Exact membership test against the facet inequalities."""
    x = as_point(x)
    if len(x) != P.ambient_dim:
        raise MixedDimensions("query point has wrong dimension")
    if mode not in ("closed", "interior", "boundary"):
        raise ValueError("mode must be closed, interior or boundary")
    slacks = [hs.slack(x) for hs in P.facets]
    if mode == "closed":
        return all(s >= 0 for s in slacks)
    if mode == "interior":
        return all(s > 0 for s in slacks)
    return all(s >= 0 for s in slacks) and any(s == 0 for s in slacks)


def dilate(P: Polytope, t) -> Polytope:
    """Scale by the positive rational t about the origin."""
    t = Fraction(t)
    if t <= 0:
        raise NonpositiveScale("dilation factor must be positive, got %s" % t)
    verts = tuple(sorted(vec_scale(t, v) for v in P.vertices))
    out = Polytope(verts, P.ambient_dim, P.dim, lcm(*(point_denominator(v) for v in verts)))
    if "facets" in P.__dict__ and P.is_full_dimensional:
        scaled = []
        for hs in P.facets:
            row = primitive_row(list(hs.normal) + [t * hs.offset])
            scaled.append(Halfspace(row[:-1], row[-1]))
        out.__dict__["facets"] = tuple(sorted(scaled))
    return out


def translate(P: Polytope, v) -> Polytope:
    v = as_point(v)
    if len(v) != P.ambient_dim:
        raise MixedDimensions("translation vector has wrong dimension")
    verts = tuple(sorted(vec_add(p, v) for p in P.vertices))
    out = Polytope(verts, P.ambient_dim, P.dim, lcm(*(point_denominator(p) for p in verts)))
    if "facets" in P.__dict__ and P.is_full_dimensional:
        moved = []
        for hs in P.facets:
            row = primitive_row(list(hs.normal) + [hs.offset + dot(hs.normal, v)])
            moved.append(Halfspace(row[:-1], row[-1]))
        out.__dict__["facets"] = tuple(sorted(moved))
    return out


def dual(P: Polytope) -> Polytope:
    """Polar dual {x : x . y <= 1 for all y in P}; needs the origin interior."""
    origin = as_point([0] * P.ambient_dim)
    if not contains(P, origin, "interior"):
        raise OriginNotInterior("dual polytope needs the origin strictly inside")
    duals = [tuple(Fraction(a, hs.offset) for a in hs.normal) for hs in P.facets]
    return build_polytope(duals)


def vertices_from_halfspaces(halfspaces, ambient_dim: int) -> tuple[Point, ...]:
    """Vertex enumeration of a bounded intersection of halfspaces."""
    verts = set()
    for combo in combinations(halfspaces, ambient_dim):
        rows = [hs.normal for hs in combo]
        try:
            x = solve_unique(rows, [hs.offset for hs in combo])
        except ValueError:
            continue
        if x is None:
            continue
        if all(hs.slack(x) >= 0 for hs in halfspaces):
            verts.add(x)
    return tuple(sorted(verts))


def project_to_affine_hull(P: Polytope) -> Polytope:
    """Rewrite P in integer-unimodular coordinates on its affine hull.

    The chart identifies aff(P) with R^dim so that lattice points correspond
    to lattice points, which keeps all Ehrhart data intact.  Raises
    NoLatticePoints when aff(P) misses the integer lattice entirely (then no
    such chart can exist).
    """
    if P.is_full_dimensional:
        return P
    if P.dim == 0:
        raise NoLatticePoints("a single point has no positive-dimensional chart")

    # integer spanning rows of the homogenized affine hull
    homog = []
    for v in P.vertices:
        den = point_denominator(v)
        homog.append(tuple(int(c * den) for c in v) + (den,))
    basis = [homog[0]]
    for row in homog[1:]:
        if matrix_rank(basis + [row]) > len(basis):
            basis.append(row)
    r = len(basis)  # == dim + 1

    columns = [list(col) for col in zip(*basis)]  # (d+1) x r, full column rank
    _, _, u = diagonalize(columns, want_u=True)
    u_inv = invert_unimodular(u)
    sat = [[u_inv[i][j] for i in range(len(u_inv))] for j in range(r)]  # saturation basis

    # gcd-eliminate last coordinates until exactly one basis vector keeps one
    while True:
        nonzero = [j for j in range(r) if sat[j][-1] != 0]
        if len(nonzero) <= 1:
            break
        j0 = min(nonzero, key=lambda j: abs(sat[j][-1]))
        for j in nonzero:
            if j != j0:
                q = sat[j][-1] // sat[j0][-1]
                sat[j] = [a - q * b for a, b in zip(sat[j], sat[j0])]
    k = next(j for j in range(r) if sat[j][-1] != 0)
    if abs(sat[k][-1]) != 1:
        raise NoLatticePoints("affine hull contains no lattice points")
    base = sat[k] if sat[k][-1] == 1 else [-a for a in sat[k]]
    directions = [sat[j][:-1] for j in range(r) if j != k]

    columns = list(zip(*directions))  # d x (r-1)
    charted = []
    for v in P.vertices:
        rhs = vec_sub(v, as_point(base[:-1]))
        charted.append(solve_unique(columns, rhs))
    return build_polytope(charted)


# -- JSON interchange -----------------------------------------------------------

def polytope_from_json_dict(data) -> Polytope:
    if not isinstance(data, dict) or "vertices" not in data:
        raise ValueError("polytope JSON needs a 'vertices' key")
    rows = data["vertices"]
    points = []
    for row in rows:
        coords = []
        for entry in row:
            if isinstance(entry, float):
                raise ValueError("floats are not accepted; use 'p/q' strings")
            coords.append(parse_rational(entry))
        points.append(coords)
    return build_polytope(points)


def load_polytope(path: str) -> Polytope:
    with open(path, "r", encoding="utf-8") as fh:
        return polytope_from_json_dict(json.load(fh))
