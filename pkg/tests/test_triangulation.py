import random
from fractions import Fraction as F

import pytest

from ehrkit.errors import AffinelyDependent, NotFullDimensional, NotGeneric
from ehrkit.geometry import build_polytope, contains, dilate
from ehrkit.triangulation import (
    BoundaryTriangulation,
    HalfOpenSimplex,
    cone_over_boundary,
    find_interior_point,
    half_open_decompose,
    interior_lattice_points,
    is_unimodular,
    pick_generic_point,
    pyramid,
    triangulate_boundary,
)

from conftest import CORPUS
from helpers import count_in_scaled_cell, sample_in_polytope


def pts(*coords):
    return [tuple(F(c) for c in p) for p in coords]


square2 = build_polytope(pts((0, 0), (0, 2), (2, 0), (2, 2)))
triangle = build_polytope(pts((0, 0), (1, 0), (0, 1)))
cube = build_polytope([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])
seg_half = build_polytope([(F(-1, 2),), (F(1, 2),)])


def test_triangulate_boundary_counts():
    assert len(triangulate_boundary(square2)) == 4
    assert len(triangulate_boundary(triangle)) == 3
    assert len(triangulate_boundary(cube)) == 12
    with pytest.raises(NotFullDimensional):
        triangulate_boundary(build_polytope(pts((0, 0), (1, 1))))


def test_triangulate_boundary_uses_only_vertices():
    for _, P in CORPUS:
        if not P.is_full_dimensional:
            continue
        for S in triangulate_boundary(P):
            assert all(v in P.vertices for v in S.vertices)
            assert S.is_closed and S.dim == P.dim - 1


def test_pyramid_mask_rule():
    base = HalfOpenSimplex.closed(pts((0, 0), (1, 0)))
    cone = pyramid((0, 1), base)
    assert cone.vertices[-1] == (F(0), F(1))
    assert cone.missing == (False, False, False)

    half = HalfOpenSimplex(tuple(pts((0, 0), (1, 0))), (True, False))
    cone = pyramid((0, 1), half)
    assert cone.missing == (True, False, False)
    assert cone.missing_count == half.missing_count

    with pytest.raises(AffinelyDependent):
        pyramid((F(1, 2), F(0)), base)


def test_find_interior_point():
    assert find_interior_point(triangle) == (3, (F(1, 3), F(1, 3)))
    box = build_polytope(pts((-1, -1), (-1, 1), (1, -1), (1, 1)))
    assert find_interior_point(box) == (1, (F(0), F(0)))
    halfP52 = dilate(build_polytope(pts((0, 0), (0, 2), (5, 2))), F(1, 2))
    assert find_interior_point(halfP52) == (2, (F(1, 2), F(1, 2)))
    assert find_interior_point(seg_half) == (1, (F(0),))


def test_half_open_decompose_square():
    T = triangulate_boundary(square2)
    boundary, cone = half_open_decompose(T, square2)
    masks = sorted(s.missing_count for s in boundary.simplices)
    assert masks == [0, 1, 1, 2]
    assert sum(1 for s in boundary.simplices if s.is_closed) == 1
    assert len(cone.cells) == 4


def test_half_open_decompose_triangle_cases():
    T = triangulate_boundary(triangle)
    boundary, _ = half_open_decompose(T, triangle)
    counts = sorted(s.missing_count for s in boundary.simplices)
    assert counts in ([0, 1, 1], [0, 1, 2])
    assert sum(1 for s in boundary.simplices if s.is_closed) == 1


def test_half_open_decompose_segment():
    T = triangulate_boundary(seg_half)
    boundary, _ = half_open_decompose(T, seg_half)
    assert sorted(s.missing_count for s in boundary.simplices) == [0, 1]


def test_half_open_decompose_rejects_nongeneric_y():
    T = triangulate_boundary(square2)
    with pytest.raises(NotGeneric):
        half_open_decompose(T, square2, y=(1, 1), apex=(1, 1))


def test_figure_configuration_with_split_edge():
    """Square with one subdivided edge: masks come out 1 closed, 3 single, 1 double."""
    P = build_polytope(pts((0, 0), (0, 3), (3, 0), (3, 3)))
    T = [HalfOpenSimplex.closed(pts((0, 0), (0, 1))),
         HalfOpenSimplex.closed(pts((0, 1), (0, 3))),
         HalfOpenSimplex.closed(pts((0, 3), (3, 3))),
         HalfOpenSimplex.closed(pts((3, 0), (3, 3))),
         HalfOpenSimplex.closed(pts((0, 0), (3, 0)))]
    boundary, _ = half_open_decompose(T, P, y=(F(7, 5), F(2, 5)), apex=(2, 2))
    by_verts = {s.vertices: s for s in boundary.simplices}
    closed = [s for s in boundary.simplices if s.is_closed]
    assert len(closed) == 1
    assert closed[0].vertices == tuple(pts((0, 0), (3, 0)))  # the cell containing y
    assert sorted(s.missing_count for s in boundary.simplices) == [0, 1, 1, 1, 2]
    far_edge = by_verts[tuple(pts((0, 3), (3, 3)))]
    assert far_edge.missing_count == 2


def test_pick_generic_point_is_generic():
    from ehrkit.triangulation import cell_halfspaces
    T = triangulate_boundary(square2)
    cone = cone_over_boundary(T, square2, (1, 1))
    y = pick_generic_point(cone)
    assert contains(square2, y, "interior")
    for cell in cone.cells:
        for hs in cell_halfspaces(cell):
            assert hs.slack(y) != 0


def test_exactly_one_closed_over_corpus():
    for _, P in CORPUS:
        if not P.is_full_dimensional:
            continue
        T = triangulate_boundary(P)
        boundary, _ = half_open_decompose(T, P)
        assert sum(1 for s in boundary.simplices if s.is_closed) == 1


def test_is_unimodular():
    sq1 = build_polytope(pts((0, 0), (0, 1), (1, 0), (1, 1)))
    assert is_unimodular(triangulate_boundary(sq1), sq1)
    tri2 = build_polytope(pts((0, 0), (2, 0), (0, 2)))
    assert not is_unimodular(triangulate_boundary(tri2), tri2)
    box = build_polytope(pts((-1, -1), (-1, 1), (1, -1), (1, 1)))
    assert not is_unimodular(triangulate_boundary(box), box)


def test_boundary_triangulation_invariant():
    with pytest.raises(ValueError):
        BoundaryTriangulation(tuple(triangulate_boundary(square2)), square2)


def test_interior_lattice_points():
    assert interior_lattice_points(dilate(triangle, 3)) == [(1, 1)]
    assert interior_lattice_points(square2) == [(1, 1)]


@pytest.mark.parametrize("name,P", [
    ("square2", square2),
    ("triangle", triangle),
    ("seg_half", seg_half),
    ("cube", cube),
])
def test_partition_by_sampling(name, P):
    """Each sampled point of P lies in exactly one half-open cone cell."""
    T = triangulate_boundary(P)
    boundary, cone = half_open_decompose(T, P)
    rng = random.Random(1234)
    for x in sample_in_polytope(P, rng, 1000 if P.dim <= 2 else 250):
        hits = sum(1 for cell in cone.cells if cell.contains(x))
        assert hits == 1, (name, x)


@pytest.mark.parametrize("name,P", [
    ("square2", square2),
    ("triangle", triangle),
    ("seg_half", seg_half),
])
def test_boundary_partition_by_sampling(name, P):
    """Each sampled boundary point lies in exactly one half-open boundary cell."""
    T = triangulate_boundary(P)
    boundary, _ = half_open_decompose(T, P)
    rng = random.Random(99)
    samples = []
    closed_cells = [HalfOpenSimplex.closed(s.vertices) for s in boundary.simplices]
    for _ in range(1000):
        cell = closed_cells[rng.randrange(len(closed_cells))]
        weights = [F(rng.randint(0, 6)) for _ in cell.vertices]
        if sum(weights) == 0:
            weights[0] = F(1)
        total = sum(weights)
        samples.append(tuple(
            sum(w / total * v[c] for w, v in zip(weights, cell.vertices))
            for c in range(P.ambient_dim)))
    for x in samples:
        hits = sum(1 for s in boundary.simplices if s.contains(x))
        assert hits == 1, (name, x)


@pytest.mark.parametrize("name,P", [
    ("square2", square2),
    ("triangle", triangle),
    ("seg_half", seg_half),
    ("halfP52", dilate(build_polytope(pts((0, 0), (0, 2), (5, 2))), F(1, 2))),
])
def test_counting_identity(name, P):
    """Summing |Z^d ∩ n*cell| over the disjoint cells matches the direct count."""
    from ehrkit.oracle import count_points
    T = triangulate_boundary(P)
    _, cone = half_open_decompose(T, P)
    q, d = P.denominator_q, P.dim
    for n in range(1, q * (d + 1) + 1):
        total = sum(count_in_scaled_cell(cell, n) for cell in cone.cells)
        assert total == count_points(P, n, "closed"), (name, n)
