"""Exact scalar arithmetic: rationals, dense polynomials in n, rational functions in n.

Every quantity this package computes that depends on the matrix dimension n
is carried as a :class:`RatFuncN`, a reduced ratio of two polynomials with
``fractions.Fraction`` coefficients.  Values are immutable and safe to share
between workers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

NEG_INF = float("-inf")


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""


class InterpolationError(ValueError):
    """Raised when sample points are inconsistent with the stated degree bound."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class PolyN:
    """Dense univariate polynomial in the dimension variable n.

    Coefficients are stored in ascending degree with no trailing zeros; the
    zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("PolyN is immutable")

    @staticmethod
    def const(c) -> "PolyN":
        return PolyN([c])

    @staticmethod
    def variable() -> "PolyN":
        """The polynomial n itself."""
        return PolyN([0, 1])

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self):
        """Degree as an int, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, PolyN) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("PolyN", self.coeffs))

    def __add__(self, other: "PolyN") -> "PolyN":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyN(out)

    def __neg__(self) -> "PolyN":
        return PolyN([-c for c in self.coeffs])

    def __sub__(self, other: "PolyN") -> "PolyN":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolyN([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyN()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return PolyN(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "PolyN"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.coeffs
        dn = len(d) - 1
        lead = d[-1]
        if len(rem) <= dn:
            return PolyN(), self
        quot = [Fraction(0)] * (len(rem) - dn)
        for i in range(len(rem) - 1, dn - 1, -1):
            c = rem[i]
            if c:
                q = c / lead
                quot[i - dn] = q
                for j in range(dn + 1):
                    rem[i - dn + j] -= q * d[j]
        return PolyN(quot), PolyN(rem)

    def __mod__(self, other: "PolyN") -> "PolyN":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "PolyN") -> "PolyN":
        return divmod(self, other)[0]

    def monic(self) -> "PolyN":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return PolyN([c / lead for c in self.coeffs])

    def gcd(self, other: "PolyN") -> "PolyN":
        """Monic greatest common divisor by the Euclidean algorithm."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def eval(self, n0) -> Fraction:
        """Exact value at an integer (or rational) point, by Horner's rule."""
        acc = Fraction(0)
        x = _as_fraction(n0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift_up(self, k: int) -> "PolyN":
        """Multiply by n**k."""
        if self.is_zero() or k == 0:
            return self
        return PolyN([Fraction(0)] * k + list(self.coeffs))

    def __repr__(self):
        return f"PolyN({list(self.coeffs)!r})"

    def pretty(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*n" if c != 1 else "n")
            else:
                parts.append(f"{c}*n^{i}" if c != 1 else f"n^{i}")
        return " + ".join(reversed(parts))


POLY_ZERO = PolyN()
POLY_ONE = PolyN([1])
POLY_N = PolyN([0, 1])


class RatFuncN:
    """Reduced rational function of n.

    Canonical form: gcd(num, den) = 1, den monic and nonzero; the zero
    function is 0/1.  Equality is structural, which the canonical form
    makes equivalent to equality as functions.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: PolyN, den: PolyN = POLY_ONE, _reduced: bool = False):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in RatFuncN")
        if not _reduced:
            if num.is_zero():
                den = POLY_ONE
            else:
                g = num.gcd(den)
                if g.degree() != 0 or g.leading() != 1:
                    num, den = num // g, den // g
                lead = den.leading()
                if lead != 1:
                    num = num * (1 / lead)
                    den = den.monic()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RatFuncN is immutable")

    @staticmethod
    def const(c) -> "RatFuncN":
        return RatFuncN(PolyN([c]), POLY_ONE, _reduced=True)

    @staticmethod
    def from_frac(num, den) -> "RatFuncN":
        """Build num/den where either argument may be a PolyN or a scalar."""
        np_ = num if isinstance(num, PolyN) else PolyN([num])
        dp = den if isinstance(den, PolyN) else PolyN([den])
        return RatFuncN(np_, dp)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def degree(self):
        """deg(num) - deg(den); -inf for the zero function."""
        if self.is_zero():
            return NEG_INF
        return self.num.degree() - self.den.degree()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFuncN.const(other)
        return (
            isinstance(other, RatFuncN)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash(("RatFuncN", self.num.coeffs, self.den.coeffs))

    def _coerce(self, other) -> "RatFuncN":
        if isinstance(other, RatFuncN):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFuncN.const(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        num = self.num * o.den + o.num * self.den
        return RatFuncN(num, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFuncN(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RatFuncN(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFuncN(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def eval(self, n0) -> Fraction:
        """Exact value at n0; raises PoleError at a denominator root."""
        d = self.den.eval(n0)
        if d == 0:
            raise PoleError(f"pole at n = {n0}")
        return self.num.eval(n0) / d

    def __repr__(self):
        return f"RatFuncN({self.pretty()})"

    def pretty(self) -> str:
        if self.den == POLY_ONE:
            return self.num.pretty()
        return f"({self.num.pretty()}) / ({self.den.pretty()})"

    # -- JSON wire format ------------------------------------------------
    #
    # {"num": ["p/q", ...], "den": ["p/q", ...]} with coefficients in
    # ascending degree; bit-exact round trip.

    def to_json(self) -> dict:
        return {
            "num": [f"{c.numerator}/{c.denominator}" for c in self.num.coeffs],
            "den": [f"{c.numerator}/{c.denominator}" for c in self.den.coeffs],
        }

    @staticmethod
    def from_json(obj: dict) -> "RatFuncN":
        def parse(ss):
            out = []
            for s in ss:
                p, q = s.split("/")
                out.append(Fraction(int(p), int(q)))
            return out

        return RatFuncN(PolyN(parse(obj["num"])), PolyN(parse(obj["den"])))


RF_ZERO = RatFuncN.const(0)
RF_ONE = RatFuncN.const(1)
RF_N = RatFuncN(POLY_N, POLY_ONE, _reduced=True)


def rf_npow(k: int) -> RatFuncN:
    """The rational function n**k for a (possibly negative) integer k."""
    if k >= 0:
        return RatFuncN(POLY_ONE.shift_up(k), POLY_ONE, _reduced=True)
    return RatFuncN(POLY_ONE, POLY_ONE.shift_up(-k), _reduced=True)


def poly_interpolate(points: Sequence[tuple], degree_bound: int) -> PolyN:
    """Interpolate an exact polynomial of degree <= degree_bound through points.

    ``points`` is a sequence of (x, y) pairs with distinct integer x and
    rational y.  The first degree_bound + 1 points determine the candidate
    by Newton's divided differences; every surplus point must lie on it,
    otherwise an :class:`InterpolationError` is raised.
    """
    if degree_bound < 0:
        raise ValueError("degree_bound must be >= 0")
    pts = [(int(x), _as_fraction(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation points must have distinct x values")
    need = degree_bound + 1
    if len(pts) < need:
        raise ValueError(
            f"need at least {need} points for degree bound {degree_bound}, got {len(pts)}"
        )
    base = pts[:need]
    # Newton form: divided-difference table, then expand to monomials.
    coeffs = [y for _, y in base]
    for level in range(1, need):
        for i in range(need - 1, level - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (base[i][0] - base[i - level][0])
    poly = PolyN()
    basis = POLY_ONE
    for i in range(need):
        poly = poly + basis * coeffs[i]
        basis = basis * PolyN([-base[i][0], 1])
    for x, y in pts:
        if poly.eval(x) != y:
            raise InterpolationError(
                f"point ({x}, {y}) is inconsistent with degree bound {degree_bound}"
            )
    return poly
