"""Integer-coefficient polynomials on the exponent grid (1/s) * Z>=0.

The same value type carries classical h*-polynomials (grid 1) and the
fractional-exponent numerators of rational Ehrhart series (grid r or 2r).
A key k stands for the monomial z^(k/grid); zero coefficients are never
stored, so equality is structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


def _dense_divmod(num: list[int], den: list[int]):
    """Long division of dense integer coefficient lists (may leave rational rem)."""
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    while den and den[-1] == 0:
        den.pop()
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    quot = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    rem = num[:]
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + len(den) - 1] / den[-1]
        quot[k] = c
        if c:
            for i, d in enumerate(den):
                rem[k + i] -= c * d
    return quot, rem


@dataclass(frozen=True)
class GradedPolynomial:
    grid: int
    coeffs: tuple[tuple[int, int], ...]  # sorted (key, coeff) pairs, coeff != 0

    # -- construction ---------------------------------------------------------

    @staticmethod
    def from_dict(mapping, grid: int = 1) -> "GradedPolynomial":
        items = []
        for k, c in mapping.items():
            k, c = int(k), int(c)
            if k < 0:
                raise ValueError("exponent keys must be nonnegative")
            if c:
                items.append((k, c))
        return GradedPolynomial(grid, tuple(sorted(items)))

    @staticmethod
    def from_list(values, grid: int = 1) -> "GradedPolynomial":
        return GradedPolynomial.from_dict({k: c for k, c in enumerate(values)}, grid)

    @staticmethod
    def zero(grid: int = 1) -> "GradedPolynomial":
        return GradedPolynomial(grid, ())

    @staticmethod
    def one(grid: int = 1) -> "GradedPolynomial":
        return GradedPolynomial(grid, ((0, 1),))

    @staticmethod
    def monomial(key: int, coeff: int = 1, grid: int = 1) -> "GradedPolynomial":
        return GradedPolynomial.from_dict({key: coeff}, grid)

    @staticmethod
    def geometric(length: int, grid: int = 1) -> "GradedPolynomial":
        """1 + z + ... + z^(length-1) on the given grid."""
        if length < 1:
            raise ValueError("length must be >= 1")
        return GradedPolynomial.from_dict({k: 1 for k in range(length)}, grid)

    # -- accessors ------------------------------------------------------------

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    def coeff(self, key: int) -> int:
        for k, c in self.coeffs:
            if k == key:
                return c
        return 0

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree_key(self) -> int:
        """Largest stored key; -1 for the zero polynomial."""
        return self.coeffs[-1][0] if self.coeffs else -1

    @property
    def degree(self) -> Fraction:
        return Fraction(self.degree_key, self.grid)

    @property
    def is_nonnegative(self) -> bool:
        return all(c >= 0 for _, c in self.coeffs)

    def evaluate_at_one(self) -> int:
        return sum(c for _, c in self.coeffs)

    # -- algebra ---------------------------------------------------------------

    def _require_same_grid(self, other: "GradedPolynomial"):
        if self.grid != other.grid:
            raise ValueError("grid mismatch: %d vs %d" % (self.grid, other.grid))

    def __add__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        self._require_same_grid(other)
        out = self.as_dict()
        for k, c in other.coeffs:
            out[k] = out.get(k, 0) + c
        return GradedPolynomial.from_dict(out, self.grid)

    def __sub__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        self._require_same_grid(other)
        out = self.as_dict()
        for k, c in other.coeffs:
            out[k] = out.get(k, 0) - c
        return GradedPolynomial.from_dict(out, self.grid)

    def __mul__(self, other):
        if isinstance(other, int):
            return GradedPolynomial.from_dict({k: c * other for k, c in self.coeffs}, self.grid)
        self._require_same_grid(other)
        out: dict[int, int] = {}
        for k1, c1 in self.coeffs:
            for k2, c2 in other.coeffs:
                key = k1 + k2
                out[key] = out.get(key, 0) + c1 * c2
        return GradedPolynomial.from_dict(out, self.grid)

    __rmul__ = __mul__

    def shift(self, key_offset: int) -> "GradedPolynomial":
        """Multiply by z^(key_offset/grid)."""
        return GradedPolynomial.from_dict({k + key_offset: c for k, c in self.coeffs}, self.grid)

    def reverse(self, deg_key: int) -> "GradedPolynomial":
        """Coefficient reversal z^(deg_key/grid) * p(1/z)."""
        if deg_key < self.degree_key:
            raise ValueError("reversal degree below actual degree")
        return GradedPolynomial.from_dict({deg_key - k: c for k, c in self.coeffs}, self.grid)

    def is_palindromic(self, deg_key: int | None = None) -> bool:
        if self.is_zero:
            return True
        if deg_key is None:
            deg_key = self.degree_key
        return self.reverse(deg_key) == self

    def dominates(self, other: "GradedPolynomial") -> bool:
        """Coefficient-wise self >= other."""
        self._require_same_grid(other)
        theirs = other.as_dict()
        mine = self.as_dict()
        keys = set(mine) | set(theirs)
        return all(mine.get(k, 0) >= theirs.get(k, 0) for k in keys)

    def to_dense(self) -> list[int]:
        out = [0] * (self.degree_key + 1)
        for k, c in self.coeffs:
            out[k] = c
        return out

    def divmod_exact(self, other: "GradedPolynomial"):
        """Polynomial divmod; both quotient and remainder must be integral."""
        self._require_same_grid(other)
        if self.is_zero:
            return GradedPolynomial.zero(self.grid), GradedPolynomial.zero(self.grid)
        quot, rem = _dense_divmod(self.to_dense(), other.to_dense())
        if any(c.denominator != 1 for c in quot + rem):
            raise ValueError("division left non-integer coefficients")
        q = GradedPolynomial.from_dict({k: int(c) for k, c in enumerate(quot)}, self.grid)
        r = GradedPolynomial.from_dict({k: int(c) for k, c in enumerate(rem)}, self.grid)
        return q, r

    # -- grid handling ----------------------------------------------------------

    def regrade(self, new_grid: int) -> "GradedPolynomial":
        """Reinterpret integer exponents k as k/new_grid (only from grid 1)."""
        if self.grid != 1:
            raise ValueError("regrade starts from grid 1")
        return GradedPolynomial(new_grid, self.coeffs)

    def integer_part(self) -> "GradedPolynomial":
        """Sub-polynomial of the terms whose exponent is an integer, on grid 1."""
        return GradedPolynomial.from_dict(
            {k // self.grid: c for k, c in self.coeffs if k % self.grid == 0}, 1)

    def simplified(self) -> "GradedPolynomial":
        """Reduce the grid by the common divisor of all keys and the grid."""
        g = self.grid
        for k, _ in self.coeffs:
            g = gcd(g, k)
        if g <= 1:
            return self
        return GradedPolynomial(self.grid // g,
                                tuple((k // g, c) for k, c in self.coeffs))

    # -- rendering ----------------------------------------------------------------

    def text(self, var: str = "z") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, c in self.coeffs:
            exp = Fraction(k, self.grid)
            if exp == 0:
                term = str(c)
            else:
                if exp == 1:
                    power = var
                elif exp.denominator == 1:
                    power = "%s^%d" % (var, exp.numerator)
                else:
                    power = "%s^(%d/%d)" % (var, exp.numerator, exp.denominator)
                term = power if c == 1 else ("-%s" % power if c == -1 else "%d*%s" % (c, power))
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            if term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out

    def __str__(self) -> str:
        return self.text()

    def to_json_dict(self) -> dict:
        return {"grid": str(self.grid),
                "coeffs": {str(k): str(c) for k, c in self.coeffs}}

    @staticmethod
    def from_json_dict(data: dict) -> "GradedPolynomial":
        return GradedPolynomial.from_dict(
            {int(k): int(c) for k, c in data["coeffs"].items()}, int(data["grid"]))
