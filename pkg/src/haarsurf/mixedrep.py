"""Projection data for mixed tensor representations.

For a label [mu, nu] the machinery needs two scalars attached to the
highest-weight-type vector living in mixed tensor space: the squared norm
(a positive rational independent of n) and the group-algebra element z
whose coefficients express the orthogonal projection onto the orbit span.
The element z is the ordered product

    (1/norm^2) * P * (sum over the Young subgroup of mu and nu) * P * Wg

inside the rational-function group algebra of the symmetric group on
k + l letters, where P projects onto the (mu, nu)-isotypic part of the
block subgroup S_k x S_l.  Products are taken exactly in this order;
group-algebra multiplication does not commute.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exactnum import RatFuncN
from .repdata import MixedLabel
from .symgroup import (
    Permutation,
    YoungDiagram,
    character_perm,
    dim_irrep,
    enumerate_sym,
)
from .weingarten import GroupAlgElem, wg_element

LABEL_SIZE_CAP = 6
Z_SIZE_CAP = 5


def _check_label_size(label: MixedLabel, cap: int):
    if label.k + label.l > cap:
        raise ValueError(
            f"label with k+l = {label.k + label.l} exceeds supported size {cap}"
        )


def _young_subgroup_perms(parts: tuple, degree: int, offset: int):
    """Permutations of [degree] moving only the consecutive blocks of
    ``parts`` starting at ``offset``, as full-degree Permutations."""
    blocks = []
    pos = offset
    for p in parts:
        blocks.append(list(range(pos, pos + p)))
        pos += p
    out = []
    for choice in itertools.product(*[itertools.permutations(b) for b in blocks]):
        img = list(range(degree))
        for block, perm in zip(blocks, choice):
            for src, dst in zip(block, perm):
                img[src] = dst
        out.append(Permutation(img))
    return out


def _restrict(p: Permutation, lo: int, hi: int) -> Permutation:
    """The permutation of [0, hi-lo) induced on the invariant block [lo, hi)."""
    return Permutation(tuple(p.images[x] - lo for x in range(lo, hi)))


@lru_cache(maxsize=None)
def _theta_norm_sq_cached(mu: tuple, nu: tuple) -> Fraction:
    def factor(parts: tuple) -> Fraction:
        # (1/|S_parts|) * sum over the full group of the squared Young-subgroup
        # character sum; the summand is constant on cosets of the subgroup.
        k = sum(parts)
        if k == 0:
            return Fraction(1)
        lam = YoungDiagram(parts)
        sub = _young_subgroup_perms(parts, k, 0)
        total = Fraction(0)
        for s in enumerate_sym(k):
            inner = sum(character_perm(lam, s * t) for t in sub)
            total += Fraction(inner) ** 2
        return total / len(sub)

    dmu = dim_irrep(YoungDiagram(mu)) if mu else 1
    dnu = dim_irrep(YoungDiagram(nu)) if nu else 1
    k, l = sum(mu), sum(nu)
    scale = Fraction(dmu * dnu, factorial(k) * factorial(l)) ** 2
    return scale * factor(mu) * factor(nu)


def theta_norm_sq(label: MixedLabel) -> Fraction:
    """Squared norm of the highest-weight-type vector; positive, n-free."""
    _check_label_size(label, LABEL_SIZE_CAP)
    return _theta_norm_sq_cached(label.mu_parts, label.nu_parts)


@lru_cache(maxsize=None)
def _p_mu_tensor_nu_cached(mu: tuple, nu: tuple) -> GroupAlgElem:
    k, l = sum(mu), sum(nu)
    m = k + l
    dmu = dim_irrep(YoungDiagram(mu)) if mu else 1
    dnu = dim_irrep(YoungDiagram(nu)) if nu else 1
    scale = Fraction(dmu * dnu, factorial(k) * factorial(l))
    lam_mu = YoungDiagram(mu) if mu else None
    lam_nu = YoungDiagram(nu) if nu else None
    terms = {}
    for left in itertools.permutations(range(k)):
        for right in itertools.permutations(range(k, m)):
            p = Permutation(left + right)
            chi = 1
            if lam_mu is not None:
                chi *= character_perm(lam_mu, _restrict(p, 0, k))
            if lam_nu is not None:
                chi *= character_perm(lam_nu, _restrict(p, k, m))
            if chi:
                terms[p] = RatFuncN.const(scale * chi)
    return GroupAlgElem(m, terms)


def p_mu_tensor_nu(label: MixedLabel) -> GroupAlgElem:
    """Isotypic projector for (mu, nu) inside the block subgroup S_k x S_l,
    as an element of the degree k+l group algebra (zero off the subgroup)."""
    _check_label_size(label, LABEL_SIZE_CAP)
    return _p_mu_tensor_nu_cached(label.mu_parts, label.nu_parts)


@lru_cache(maxsize=None)
def _z_theta_cached(mu: tuple, nu: tuple) -> GroupAlgElem:
    k, l = sum(mu), sum(nu)
    m = k + l
    p = _p_mu_tensor_nu_cached(mu, nu)
    sub_sum = GroupAlgElem(
        m,
        {
            s: RatFuncN.const(1)
            for s in _young_subgroup_double(mu, nu)
        },
    )
    core = p * sub_sum * p
    z = core * wg_element(m)
    return z.scale(RatFuncN.const(1 / _theta_norm_sq_cached(mu, nu)))


def _young_subgroup_double(mu: tuple, nu: tuple):
    k, l = sum(mu), sum(nu)
    m = k + l
    left = _young_subgroup_perms(mu, m, 0)
    right = _young_subgroup_perms(nu, m, k)
    out = []
    for a in left:
        for b in right:
            out.append(a * b)
    return out


def z_theta(label: MixedLabel) -> GroupAlgElem:
    """Projection coefficients for the label, over RatFuncN.

    Requires 1 <= k+l <= 5; the k+l = 0 case is handled by the plain word
    integral and deliberately rejected here.
    """
    if label.k + label.l == 0:
        raise ValueError("z is undefined for the empty label; use the k+l = 0 path")
    _check_label_size(label, Z_SIZE_CAP)
    return _z_theta_cached(label.mu_parts, label.nu_parts)
