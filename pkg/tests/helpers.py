"""Independent brute-force oracles used only by the tests.

These deliberately avoid the residue-enumeration kernel: parallelepiped
points are found by scanning the integer bounding box and solving for the
generator coefficients, and half-open membership counts go through the
barycentric definition.  Slow and obviously correct.
"""

from fractions import Fraction
from itertools import product
from math import ceil, floor

from ehrkit.linalg import solve_unique


def brute_force_fpp(vertices, missing, heights):
    """Heights multiset of the fundamental parallelepiped, by box scan."""
    gens = []
    for h, v in zip(heights, vertices):
        gens.append(tuple(int(h * c) for c in v) + (int(h),))
    dim = len(gens[0])
    lows, highs = [], []
    for c in range(dim):
        span = [g[c] for g in gens]
        lows.append(sum(min(0, s) for s in span))
        highs.append(sum(max(0, s) for s in span))
    columns = list(zip(*gens))  # dim x n
    out = []
    for candidate in product(*(range(lo, hi + 1) for lo, hi in zip(lows, highs))):
        try:
            alphas = solve_unique(columns, candidate)
        except ValueError:
            raise AssertionError("generators must be linearly independent")
        if alphas is None:
            continue
        ok = True
        for a, miss in zip(alphas, missing):
            if miss:
                ok = ok and 0 < a <= 1
            else:
                ok = ok and 0 <= a < 1
        if ok:
            out.append(candidate[-1])
    return tuple(sorted(out))


def count_in_scaled_cell(simplex, n):
    """|Z^d ∩ n * cell| for a half-open simplex, via barycentric membership."""
    verts = [tuple(n * c for c in v) for v in simplex.vertices]
    d = len(verts[0])
    lows = [ceil(min(v[c] for v in verts)) for c in range(d)]
    highs = [floor(max(v[c] for v in verts)) for c in range(d)]
    rows = [list(v) + [1] for v in verts]
    columns = list(zip(*rows))
    count = 0
    for candidate in product(*(range(lo, hi + 1) for lo, hi in zip(lows, highs))):
        coords = solve_unique(columns, list(candidate) + [1])
        if coords is None:
            continue
        if all(c > 0 if miss else c >= 0
               for c, miss in zip(coords, simplex.missing)):
            count += 1
    return count


def sample_in_polytope(P, rng, count):
    """Deterministic rational sample points of P (random convex combinations)."""
    out = []
    verts = P.vertices
    for _ in range(count):
        weights = [Fraction(rng.randint(0, 8)) for _ in verts]
        if sum(weights) == 0:
            weights[rng.randrange(len(weights))] = Fraction(1)
        total = sum(weights)
        weights = [w / total for w in weights]
        out.append(tuple(sum(w * v[c] for w, v in zip(weights, verts))
                         for c in range(P.ambient_dim)))
    return out
