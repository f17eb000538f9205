"""Dimension data for U(n) and SU(n) irreducibles, and the truncated Witten zeta.

A mixed label [mu, nu] names the rational irreducible representation of U(n)
whose signature pads mu with zeros and appends the negated reverse of nu.
Its dimension is a polynomial in n of degree |mu| + |nu|, recovered here by
exact interpolation of the Weyl dimension product.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exactnum import PolyN, poly_interpolate
from .symgroup import YoungDiagram, partitions


class MixedLabel:
    """Pair of Young diagrams (mu, nu) labelling a mixed U(n) irreducible."""

    __slots__ = ("mu", "nu")

    def __init__(self, mu=(), nu=()):
        mu = mu.parts if isinstance(mu, YoungDiagram) else tuple(mu)
        nu = nu.parts if isinstance(nu, YoungDiagram) else tuple(nu)
        object.__setattr__(self, "mu", YoungDiagram(mu) if mu else None)
        object.__setattr__(self, "nu", YoungDiagram(nu) if nu else None)

    def __setattr__(self, *a):
        raise AttributeError("MixedLabel is immutable")

    @property
    def mu_parts(self) -> tuple:
        return self.mu.parts if self.mu else ()

    @property
    def nu_parts(self) -> tuple:
        return self.nu.parts if self.nu else ()

    @property
    def k(self) -> int:
        return sum(self.mu_parts)

    @property
    def l(self) -> int:
        return sum(self.nu_parts)

    @property
    def min_dim(self) -> int:
        """Smallest n for which the signature exists."""
        return len(self.mu_parts) + len(self.nu_parts)

    def __eq__(self, other):
        return (
            isinstance(other, MixedLabel)
            and self.mu_parts == other.mu_parts
            and self.nu_parts == other.nu_parts
        )

    def __hash__(self):
        return hash(("MixedLabel", self.mu_parts, self.nu_parts))

    def __repr__(self):
        return f"MixedLabel({list(self.mu_parts)}, {list(self.nu_parts)})"


def signature_of(label: MixedLabel, n: int) -> tuple:
    """Signature (mu..., 0..., -reversed(nu)...) of length n."""
    mu, nu = label.mu_parts, label.nu_parts
    if n < len(mu) + len(nu):
        raise ValueError(f"n = {n} below the {len(mu) + len(nu)} rows of the label")
    middle = (0,) * (n - len(mu) - len(nu))
    return mu + middle + tuple(-p for p in reversed(nu))


def weyl_dim(signature) -> int:
    """Weyl dimension product over pairs of signature entries."""
    lam = tuple(signature)
    n = len(lam)
    val = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            val *= Fraction(lam[i] - lam[j] + j - i, j - i)
    assert val.denominator == 1
    return int(val)


@lru_cache(maxsize=None)
def _dim_un_poly_cached(parts: tuple) -> PolyN:
    poly = PolyN([1])
    hooks = 1
    lam = YoungDiagram(parts) if parts else None
    if lam is None:
        return poly
    for i, j in lam.cells():
        poly = poly * PolyN([j - i, 1])
        hooks *= lam.hook(i, j)
    return poly * Fraction(1, hooks)


def dim_un_poly(lam) -> PolyN:
    """Dimension of the U(n) irreducible with highest weight lam, as a
    polynomial in n (hook content formula).  Degree is |lam|."""
    parts = lam.parts if isinstance(lam, YoungDiagram) else tuple(lam)
    return _dim_un_poly_cached(parts)


@lru_cache(maxsize=None)
def _dim_mixed_cached(mu: tuple, nu: tuple) -> PolyN:
    label = MixedLabel(mu, nu)
    d = label.k + label.l
    n0 = max(label.min_dim, 1)
    pts = []
    for n in range(n0, n0 + d + 4):
        pts.append((n, weyl_dim(signature_of(label, n))))
    # d+4 samples against a degree-d bound: three surplus consistency points.
    return poly_interpolate(pts, d)


def dim_mixed_poly(label: MixedLabel) -> PolyN:
    """Dimension polynomial of the mixed irreducible [mu, nu].

    Exact interpolation of the Weyl product; agrees with the Weyl dimension
    for every integer n >= rows(mu) + rows(nu) and has degree |mu| + |nu|.
    """
    return _dim_mixed_cached(label.mu_parts, label.nu_parts)


def witten_zeta_truncated(s: int, n: int, max_boxes: int) -> Fraction:
    """Partial sum of (dim W)^-s over SU(n) irreducibles.

    SU(n) irreducibles are enumerated in highest-weight normal form as
    partitions with at most n - 1 rows; the truncation keeps those with at
    most ``max_boxes`` boxes.  The trivial representation (empty partition)
    is always included, so the value is >= 1 and non-decreasing in the
    truncation bound.
    """
    if s < 1:
        raise ValueError("s must be a positive integer")
    if n < 2:
        raise ValueError("n must be >= 2")
    if max_boxes < 0:
        raise ValueError("max_boxes must be >= 0")
    total = Fraction(0)
    for boxes in range(max_boxes + 1):
        for parts in partitions(boxes):
            if len(parts) > n - 1:
                continue
            dim = dim_un_poly(parts).eval(n)
            assert dim.denominator == 1 and dim > 0
            total += Fraction(1, int(dim) ** s)
    return total
