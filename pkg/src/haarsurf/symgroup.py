"""Symmetric groups: permutations, Young diagrams, characters, and norms.

Characters are computed by the Murnaghan-Nakayama border-strip recursion
with memoization on (diagram, cycle type); everything stays in exact
integer arithmetic.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial

ENUM_DEGREE_CAP = 9


class Permutation:
    """Permutation of {0, ..., m-1}, stored as a tuple of images.

    ``p * q`` composes left-to-right in the functional sense: the product
    applies q first, then p.
    """

    __slots__ = ("images",)

    def __init__(self, images):
        object.__setattr__(self, "images", tuple(images))

    def __setattr__(self, *a):
        raise AttributeError("Permutation is immutable")

    @staticmethod
    def identity(m: int) -> "Permutation":
        return Permutation(range(m))

    @staticmethod
    def transposition(m: int, i: int, j: int) -> "Permutation":
        img = list(range(m))
        img[i], img[j] = img[j], img[i]
        return Permutation(img)

    @staticmethod
    def from_cycles(m: int, cycles) -> "Permutation":
        """Build from 0-based cycles, e.g. from_cycles(3, [(0, 1)])."""
        img = list(range(m))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)((cyc[0],))):
                img[a] = b
        return Permutation(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        o = other.images
        return Permutation(tuple(self.images[x] for x in o))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self):
        """Cycles as tuples of 0-based points, longest first then lexicographic."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            out.append(tuple(cyc))
        out.sort(key=lambda c: (-len(c), c))
        return out

    def cycle_type(self) -> tuple:
        """Cycle lengths as a partition of the degree, decreasing."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def num_cycles(self) -> int:
        seen = [False] * len(self.images)
        count = 0
        for start in range(len(self.images)):
            if seen[start]:
                continue
            count += 1
            x = start
            while not seen[x]:
                seen[x] = True
                x = self.images[x]
        return count

    def cycle_string(self) -> str:
        """1-based cycle notation; fixed points omitted; identity is 'id'."""
        parts = [
            "(" + " ".join(str(x + 1) for x in c) + ")"
            for c in self.cycles()
            if len(c) > 1
        ]
        return "".join(parts) if parts else "id"

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self.cycle_string()}, m={self.degree})"


def enumerate_sym(m: int):
    """All m! permutations of degree m in lexicographic image order.

    Guarded at m <= 9 so a bad argument cannot trigger a runaway loop.
    """
    if not 0 <= m <= ENUM_DEGREE_CAP:
        raise ValueError(f"degree {m} outside supported range [0, {ENUM_DEGREE_CAP}]")
    for images in itertools.permutations(range(m)):
        yield Permutation(images)


def transposition_norm(p: Permutation) -> int:
    """Minimum number of transpositions whose product is p."""
    return p.degree - p.num_cycles()


def _block_perms(k: int, l: int):
    """All permutations of degree k+l preserving the blocks [0,k) and [k,k+l)."""
    out = []
    for left in itertools.permutations(range(k)):
        for right in itertools.permutations(range(k, k + l)):
            out.append(Permutation(left + right))
    return out


def coset_norm(p: Permutation, k: int, l: int) -> int:
    """Distance from p to the block subgroup S_k x S_l in transpositions.

    Exhaustive minimum of transposition_norm(s0^-1 * p) over the subgroup;
    zero exactly when p preserves the blocks.
    """
    if p.degree != k + l:
        raise ValueError(f"degree {p.degree} does not match k+l = {k + l}")
    best = None
    for s0 in _block_perms(k, l):
        d = transposition_norm(s0.inverse() * p)
        if best is None or d < best:
            best = d
            if best == 0:
                break
    return best


@lru_cache(maxsize=None)
def partitions(k: int) -> tuple:
    """All partitions of k as decreasing tuples, in reverse lexicographic order."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return ((),)
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, maxpart), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(k, k, [])
    return tuple(out)


class YoungDiagram:
    """Partition shape indexing an irreducible representation of S_k."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        ps = tuple(int(p) for p in parts)
        if any(p <= 0 for p in ps):
            raise ValueError("parts must be positive integers")
        if any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
            raise ValueError(f"parts must be weakly decreasing, got {ps}")
        object.__setattr__(self, "parts", ps)

    def __setattr__(self, *a):
        raise AttributeError("YoungDiagram is immutable")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def rows(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "YoungDiagram":
        if not self.parts:
            return self
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return YoungDiagram(cols)

    def cells(self):
        for i, p in enumerate(self.parts):
            for j in range(p):
                yield (i, j)

    def hook(self, i: int, j: int) -> int:
        arm = self.parts[i] - j - 1
        leg = sum(1 for p in self.parts[i + 1 :] if p > j)
        return arm + leg + 1

    def __eq__(self, other):
        return isinstance(other, YoungDiagram) and self.parts == other.parts

    def __hash__(self):
        return hash(("YD", self.parts))

    def __repr__(self):
        return f"YoungDiagram({list(self.parts)})"


def dim_irrep(lam: YoungDiagram) -> int:
    """Dimension of the S_k irreducible for lam, by the hook length formula."""
    num = factorial(lam.size)
    for i, j in lam.cells():
        num //= lam.hook(i, j)
    return num


@lru_cache(maxsize=None)
def _char_rec(parts: tuple, ctype: tuple) -> int:
    # Murnaghan-Nakayama in beta-set form: a border strip of length t is the
    # move b -> b - t on one first-column hook length, legal when the target
    # is free; its height is the number of beta values jumped over.
    if not ctype:
        return 1
    t, rest = ctype[0], ctype[1:]
    r = len(parts)
    beta = [parts[i] + (r - 1 - i) for i in range(r)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - t
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        newbeta = sorted((x for x in beta if x != b), reverse=True)
        newbeta.append(nb)
        newbeta.sort(reverse=True)
        newparts = tuple(newbeta[i] - (r - 1 - i) for i in range(r))
        shape = tuple(p for p in newparts if p > 0)
        total += (-1) ** height * _char_rec(shape, rest)
    return total


def character(lam: YoungDiagram, cycle_type) -> int:
    """Irreducible character of S_k at a conjugacy class given by cycle type."""
    ct = tuple(sorted((int(c) for c in cycle_type), reverse=True))
    if sum(ct) != lam.size:
        raise ValueError(f"cycle type {ct} has size {sum(ct)}, diagram has {lam.size}")
    if any(c <= 0 for c in ct):
        raise ValueError("cycle type entries must be positive")
    return _char_rec(lam.parts, ct)


def character_perm(lam: YoungDiagram, p: Permutation) -> int:
    return character(lam, p.cycle_type())


def central_idempotent_coeff(lam: YoungDiagram, p: Permutation) -> Fraction:
    """Coefficient of p in the central projector onto the lam-isotypic block."""
    if p.degree != lam.size:
        raise ValueError("permutation degree does not match diagram size")
    return Fraction(dim_irrep(lam) * character_perm(lam, p), factorial(lam.size))


def class_size(cycle_type) -> int:
    """Number of permutations with the given cycle type."""
    ct = tuple(sorted(cycle_type, reverse=True))
    k = sum(ct)
    z = 1
    for length in set(ct):
        m = ct.count(length)
        z *= length**m * factorial(m)
    return factorial(k) // z
