"""The Weingarten element of the symmetric group algebra, and entrywise
Haar integration of matrix coefficients over the unitary group.

The coefficient attached to a permutation s of degree k is the rational
function of n

    (1/k!^2) * sum over partitions lam of k of  d_lam^2 * chi_lam(s) / D_lam(n)

where d_lam is the symmetric-group dimension and D_lam(n) the U(n)
dimension polynomial.  The row-length cutoff that restricts the partition
sum for very small n is dropped: the resulting rational function agrees
with the defining sum at every integer n >= k, which is the only regime
any downstream evaluation uses.  Coefficients are cached per (k, cycle
type); the element is a class function.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exactnum import RF_ONE, RatFuncN, PolyN
from .repdata import dim_un_poly
from .symgroup import (
    Permutation,
    YoungDiagram,
    character,
    dim_irrep,
    enumerate_sym,
    partitions,
)

WG_DEGREE_CAP = 7


class GroupAlgElem:
    """Sparse symmetric-group-algebra element with RatFuncN coefficients.

    Multiplication is convolution: (x*y)[g] = sum over a*b = g of x[a]*y[b],
    with permutation products composing right factor first.
    """

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms=None):
        t = {}
        for p, c in (terms or {}).items():
            if not isinstance(c, RatFuncN):
                c = RatFuncN.const(c)
            if c.is_zero():
                continue
            if p.degree != degree:
                raise ValueError("permutation degree mismatch in GroupAlgElem")
            t[p] = c
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", t)

    def __setattr__(self, *a):
        raise AttributeError("GroupAlgElem is immutable")

    @staticmethod
    def unit(degree: int) -> "GroupAlgElem":
        return GroupAlgElem(degree, {Permutation.identity(degree): RF_ONE})

    def coeff(self, p: Permutation) -> RatFuncN:
        return self.terms.get(p, RatFuncN.const(0))

    def __add__(self, other: "GroupAlgElem") -> "GroupAlgElem":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out[p] + c if p in out else c
        return GroupAlgElem(self.degree, out)

    def scale(self, c) -> "GroupAlgElem":
        if not isinstance(c, RatFuncN):
            c = RatFuncN.const(c)
        return GroupAlgElem(self.degree, {p: v * c for p, v in self.terms.items()})

    def __mul__(self, other: "GroupAlgElem") -> "GroupAlgElem":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        out = {}
        for p, cp in self.terms.items():
            for q, cq in other.terms.items():
                r = p * q
                c = cp * cq
                out[r] = out[r] + c if r in out else c
        return GroupAlgElem(self.degree, out)

    def __eq__(self, other):
        return (
            isinstance(other, GroupAlgElem)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        items = ", ".join(
            f"{p.cycle_string()}: {c.pretty()}" for p, c in sorted(
                self.terms.items(), key=lambda pc: pc[0].images
            )
        )
        return f"GroupAlgElem(m={self.degree}, {{{items}}})"


@lru_cache(maxsize=None)
def _wg_coeff_by_type(k: int, ctype: tuple) -> RatFuncN:
    total = RatFuncN.const(0)
    for parts in partitions(k):
        lam = YoungDiagram(parts) if parts else None
        if lam is None:
            continue
        d = dim_irrep(lam)
        chi = character(lam, ctype)
        if chi == 0:
            continue
        total = total + RatFuncN(PolyN([Fraction(d * d * chi)]), dim_un_poly(lam))
    return total * RatFuncN.const(Fraction(1, factorial(k) ** 2))


def wg_coeff(k: int, p: Permutation) -> RatFuncN:
    """Weingarten coefficient of p for tensor power k, as a rational
    function of n valid at every integer n >= k."""
    if p.degree != k:
        raise ValueError(f"permutation degree {p.degree} does not match k = {k}")
    return _wg_coeff_by_type(k, p.cycle_type())


def wg_element(k: int) -> GroupAlgElem:
    """The full Weingarten element for tensor power k (1 <= k <= 7)."""
    if not 1 <= k <= WG_DEGREE_CAP:
        raise ValueError(f"k = {k} outside supported range [1, {WG_DEGREE_CAP}]")
    terms = {}
    for p in enumerate_sym(k):
        terms[p] = _wg_coeff_by_type(k, p.cycle_type())
    return GroupAlgElem(k, terms)


@lru_cache(maxsize=None)
def _wg_value(k: int, ctype: tuple, n0: int) -> Fraction:
    return _wg_coeff_by_type(k, ctype).eval(n0)


def entry_integral(k, i, j, ip, jp, n0: int) -> Fraction:
    """Exact Haar integral of u_{i1 j1} ... u_{ik jk} conj(u)_{i'1 j'1} ...
    conj(u)_{i'k j'k} over the n0 by n0 unitary group.

    Index tuples are 1-based with entries in [n0]; requires n0 >= k so the
    Weingarten inversion is valid.
    """
    i, j, ip, jp = tuple(i), tuple(j), tuple(ip), tuple(jp)
    if not (len(i) == len(j) == len(ip) == len(jp) == k):
        raise ValueError("index tuples must all have length k")
    for t in i + j + ip + jp:
        if not 1 <= t <= n0:
            raise ValueError(f"index {t} out of range [1, {n0}]")
    if n0 < k:
        raise ValueError(f"need n0 >= k, got n0 = {n0}, k = {k}")
    total = Fraction(0)
    for sigma in enumerate_sym(k):
        if any(i[m] != ip[sigma(m)] for m in range(k)):
            continue
        for tau in enumerate_sym(k):
            if any(j[m] != jp[tau(m)] for m in range(k)):
                continue
            total += _wg_value(k, (tau * sigma.inverse()).cycle_type(), n0)
    return total
