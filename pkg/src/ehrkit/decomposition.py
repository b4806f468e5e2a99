"""Symmetric decomposition of h* and the inequality audit built on it.

Writing (1 + ... + z^(ell-1))/(1 + ... + z^(q-1)) * h*_P as a(z) + z^ell b(z)
with both parts palindromic has a unique solution; here a is recovered in
closed form from the reversal identity and cross-checked against two
independent computations: the boundary h*-polynomial and a per-simplex
parallelepiped route that cones the half-open boundary cells over an interior
point of dilation denominator ell.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import ApexInSpan, NoSolution, NotDivisible, NotFullDimensional
from .geometry import Point, Polytope, as_point, build_polytope, point_denominator
from .gradedpoly import GradedPolynomial
from .ehrhart import (
    fpp_lattice_points,
    hstar_boundary,
    hstar_polytope,
    hstar_simplex,
    quasi_coefficients,
    _disjoint_cells,
)
from .triangulation import (
    HalfOpenSimplex,
    find_interior_point,
    half_open_decompose,
    is_unimodular,
    pyramid,
    triangulate_boundary,
)


def _geometric(k: int) -> GradedPolynomial:
    return GradedPolynomial.geometric(k)


def symmetric_decompose(h: GradedPolynomial, q: int, ell: int, d: int):
    """Unique palindromic pair (a, b) with geom(ell)/geom(q) * h = a + z^ell b.

    a is palindromic of degree q*d, b of degree q*d - ell (or zero).  The
    closed form comes from reversing the left side in degree q*d: the reversal
    fixes a and negates the z^ell-shift, so b = (reverse - lhs) / (1 - z^ell).
    """
    if h.grid != 1:
        raise ValueError("decomposition works on integer-exponent polynomials")
    quot, rem = h.divmod_exact(_geometric(q))
    if not rem.is_zero:
        raise NotDivisible("input is not divisible by 1 + z + ... + z^%d" % (q - 1))
    lhs = quot * _geometric(ell)
    n = q * d
    if lhs.degree_key > n:
        raise NoSolution("left side exceeds degree %d" % n)
    one_minus = GradedPolynomial.from_dict({0: 1, ell: -1})
    b, rem = (lhs.reverse(n) - lhs).divmod_exact(one_minus)
    if not rem.is_zero:
        raise NoSolution("reversal difference is not divisible by 1 - z^ell")
    a = lhs - b.shift(ell)
    if not (a.is_palindromic(n) and (b.is_zero or b.is_palindromic(n - ell))):
        raise NoSolution("decomposition is not palindromic")
    return a, b


@dataclass(frozen=True)
class DecompositionReport:
    q: int
    ell: int
    lhs: GradedPolynomial
    a: GradedPolynomial
    b: GradedPolynomial
    a_equals_boundary: bool
    s_degree: int

    def to_json_dict(self) -> dict:
        return {
            "q": str(self.q),
            "ell": str(self.ell),
            "s_degree": str(self.s_degree),
            "lhs": self.lhs.to_json_dict(),
            "a": self.a.to_json_dict(),
            "b": self.b.to_json_dict(),
            "a_equals_boundary": self.a_equals_boundary,
        }

    @staticmethod
    def from_json_dict(data: dict) -> "DecompositionReport":
        return DecompositionReport(
            q=int(data["q"]),
            ell=int(data["ell"]),
            lhs=GradedPolynomial.from_json_dict(data["lhs"]),
            a=GradedPolynomial.from_json_dict(data["a"]),
            b=GradedPolynomial.from_json_dict(data["b"]),
            a_equals_boundary=bool(data["a_equals_boundary"]),
            s_degree=int(data["s_degree"]),
        )


def pyramid_b_polynomial(P: Polytope, ell: int, x: Point) -> GradedPolynomial:
    """b(z) recomputed cell by cell from parallelepiped points with beta > 0.

    Cones every half-open boundary simplex over x (denominator ell) with
    heights (q, ..., q, ell).  The lattice points with positive apex
    coefficient sit at heights >= ell by minimality of ell; their height
    multiset, shifted down by ell, sums to b(z).
    """
    q = P.denominator_q
    T = triangulate_boundary(P)
    boundary, _ = half_open_decompose(T, P, apex=x)
    counts: dict[int, int] = {}
    for simplex in boundary.simplices:
        cell = pyramid(x, simplex)
        heights = [q] * len(simplex.vertices) + [ell]
        for point, alpha_nums, _denom in fpp_lattice_points(cell, heights):
            if alpha_nums[-1] > 0:
                height = point[-1]
                assert height >= ell, "apex point below ell contradicts minimality"
                counts[height - ell] = counts.get(height - ell, 0) + 1
    return GradedPolynomial.from_dict(counts)


def stapledon_report(P: Polytope) -> DecompositionReport:
    """Full symmetric-decomposition bundle with both b-routes cross-checked."""
    if not P.is_full_dimensional:
        raise NotFullDimensional("decomposition needs a full-dimensional polytope")
    q, d = P.denominator_q, P.dim
    h = hstar_polytope(P)
    s = h.degree_key
    ell, x = find_interior_point(P)
    assert ell == q * (d + 1) - s, "interior-dilate search disagrees with reciprocity"

    a, b = symmetric_decompose(h, q, ell, d)
    h_boundary = hstar_boundary(P, apex=x)
    a_equals_boundary = a == h_boundary
    assert a_equals_boundary, "a(z) must equal the boundary h*-polynomial"

    b_geometric = pyramid_b_polynomial(P, ell, x)
    assert b_geometric == b, "parallelepiped route disagrees with the algebraic b(z)"

    lhs = a + b.shift(ell)
    return DecompositionReport(q=q, ell=ell, lhs=lhs, a=a, b=b,
                               a_equals_boundary=a_equals_boundary, s_degree=s)


def pyramid_hstar_compare(P: Polytope, x):
    """Compare h* of a base polytope with that of its pyramid over x.

    P must be full-dimensional at height zero inside R^d (its ambient space);
    x needs a nonzero last coordinate.  Both numerators use denominator
    (1 - z^q)^d, the pyramid with an extra (1 - z^r) factor, r the denominator
    of x.  Returns (h_base, h_pyramid, h_base <= h_pyramid); equality is
    asserted when x is the unit apex e_d.
    """
    x = as_point(x)
    d = P.ambient_dim
    if P.dim != d - 1 or any(v[-1] != 0 for v in P.vertices):
        raise NotFullDimensional("base must be full-dimensional at height zero")
    if x[-1] == 0:
        raise ApexInSpan("apex must leave the base hyperplane")
    q = P.denominator_q
    r = point_denominator(x)

    base_proj = build_polytope([v[:-1] for v in P.vertices])
    cells = _disjoint_cells(base_proj)
    h_base = GradedPolynomial.zero()
    h_pyr = GradedPolynomial.zero()
    for cell in cells:
        h_base = h_base + hstar_simplex(cell, q)
        lifted = HalfOpenSimplex(tuple(v + (Fraction(0),) for v in cell.vertices),
                                 cell.missing)
        cone = pyramid(x, lifted)
        counts: dict[int, int] = {}
        for point, _, _ in fpp_lattice_points(cone, [q] * len(lifted.vertices) + [r]):
            counts[point[-1]] = counts.get(point[-1], 0) + 1
        h_pyr = h_pyr + GradedPolynomial.from_dict(counts)
    leq = h_pyr.dominates(h_base)
    if x == tuple([Fraction(0)] * (d - 1) + [Fraction(1)]):
        assert h_base == h_pyr, "unit-apex pyramid must preserve h*"
    return h_base, h_pyr, leq


# -- inequality audit ----------------------------------------------------------

@dataclass(frozen=True)
class AuditItem:
    name: str
    applicable: bool
    passed: bool
    witness: str
    level: str = "requirement"  # or "warning"


@dataclass(frozen=True)
class InequalityAudit:
    items: tuple[AuditItem, ...]

    @property
    def all_passed(self) -> bool:
        return all(item.passed for item in self.items
                   if item.applicable and item.level == "requirement")

    @property
    def warnings(self) -> tuple[AuditItem, ...]:
        return tuple(i for i in self.items if i.level == "warning" and i.applicable)


def inequality_audit(P: Polytope) -> InequalityAudit:
    """Evaluate the coefficient inequalities implied by the decomposition.

    Cumulative lower/upper chains on h*_P, the bound between the two leading
    quasipolynomial coefficients (lattice polytopes), and boundary domination
    h*_boundary <= h*_P when ell <= q.  Chains that are only known under a
    unimodular boundary triangulation are reported as warnings.
    """
    if not P.is_full_dimensional:
        raise NotFullDimensional("audit needs a full-dimensional polytope")
    q, d = P.denominator_q, P.dim
    h = hstar_polytope(P)
    hb = hstar_boundary(P)
    ell, _ = find_interior_point(P)
    s = h.degree_key
    hd = h.as_dict()
    top = q * (d + 1) - 1
    items = []

    ok, witness = True, "all indices"
    for j in range((top + 1) // 2):
        low = sum(hd.get(i, 0) for i in range(0, j + 2))
        high = sum(hd.get(top - i, 0) for i in range(0, j + 1))
        if low < high:
            ok, witness = False, "j=%d: %d < %d" % (j, low, high)
            break
    items.append(AuditItem("cumulative_lower", True, ok, witness))

    ok, witness = True, "all indices"
    for j in range(s + 1):
        high = sum(hd.get(s - i, 0) for i in range(0, j + 1))
        low = sum(hd.get(i, 0) for i in range(0, j + 1))
        if high < low:
            ok, witness = False, "j=%d: %d < %d" % (j, high, low)
            break
    items.append(AuditItem("cumulative_upper", True, ok, witness))

    if P.is_lattice:
        quasi = quasi_coefficients(P)
        k_d = quasi.value(d, 0)
        k_d1 = quasi.value(d - 1, 0)
        bound = Fraction(ell * d, 2) * k_d
        items.append(AuditItem(
            "leading_coefficient_bound", True, bound >= k_d1,
            "(ell*d/2)*k_d = %s vs k_{d-1} = %s" % (bound, k_d1)))
    else:
        items.append(AuditItem("leading_coefficient_bound", False, True,
                               "lattice polytopes only"))

    if ell <= q:
        items.append(AuditItem("boundary_dominated", True, h.dominates(hb),
                               "ell=%d <= q=%d" % (ell, q)))
    else:
        items.append(AuditItem("boundary_dominated", False, True,
                               "ell=%d > q=%d" % (ell, q)))

    unimodular = P.is_lattice and is_unimodular(triangulate_boundary(P), P)
    if unimodular:
        hbd = hb.as_dict()
        chain_ok = all(hbd.get(j, 0) <= hbd.get(j + 1, 0) for j in range(d // 2))
        chain_ok = chain_ok and hbd.get(0, 0) == 1
        binom_ok = all(hbd.get(j, 0) <= comb(hbd.get(1, 0) + j - 1, j)
                       for j in range(d + 1))
        items.append(AuditItem("unimodular_chain", True, chain_ok,
                               "monotone start of boundary h*", level="warning"))
        items.append(AuditItem("unimodular_binomial_bound", True, binom_ok,
                               "h*_j <= C(h*_1 + j - 1, j)", level="warning"))
    else:
        items.append(AuditItem("unimodular_chain", False, True,
                               "no unimodular boundary triangulation", level="warning"))
        items.append(AuditItem("unimodular_binomial_bound", False, True,
                               "no unimodular boundary triangulation", level="warning"))

    return InequalityAudit(tuple(items))


@dataclass(frozen=True)
class EhrhartReport:
    """One-stop bundle: h* data, decomposition, and the audit flags."""

    q: int
    d: int
    ell: int
    hstar: GradedPolynomial
    hstar_boundary: GradedPolynomial
    hstar_interior: GradedPolynomial
    decomposition: DecompositionReport
    audit: InequalityAudit


def ehrhart_report(P: Polytope) -> EhrhartReport:
    from .ehrhart import hstar_interior
    report = stapledon_report(P)
    return EhrhartReport(
        q=P.denominator_q,
        d=P.dim,
        ell=report.ell,
        hstar=hstar_polytope(P),
        hstar_boundary=report.a,
        hstar_interior=hstar_interior(P),
        decomposition=report,
        audit=inequality_audit(P),
    )
