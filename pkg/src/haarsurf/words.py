"""Words in free groups, cyclic reduction, and Dehn shortening in surface groups.

A word lives in the free group on an even alphabet a_1, b_1, ..., a_g, b_g
(2g generators).  Letters are nonzero integers: +i is the i-th generator,
-i its inverse, with a_j = 2j-1 and b_j = 2j.  For genus 2 the compact
one-letter aliases are a, b, c, d with uppercase meaning inverse, so
"abAB" is the commutator of the first generator pair.

Dehn shortening replaces any cyclic subword that covers more than half of
a cyclic rotation of the surface relator (or its inverse) by the shorter
complementary side.  A cyclically reduced word admitting no such subword
is taken as a shortest representative of its conjugacy class.
"""

from __future__ import annotations

from functools import lru_cache


class WordError(ValueError):
    pass


def _free_reduce(letters):
    out = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


class Word:
    """Freely reduced word over 2g generators."""

    __slots__ = ("letters", "genus")

    def __init__(self, letters, genus: int):
        if genus < 1:
            raise WordError("genus must be >= 1")
        ls = _free_reduce([int(x) for x in letters])
        for x in ls:
            if x == 0 or abs(x) > 2 * genus:
                raise WordError(f"letter {x} outside alphabet of {2 * genus} generators")
        object.__setattr__(self, "letters", tuple(ls))
        object.__setattr__(self, "genus", genus)

    def __setattr__(self, *a):
        raise AttributeError("Word is immutable")

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return (
            isinstance(other, Word)
            and self.letters == other.letters
            and self.genus == other.genus
        )

    def __hash__(self):
        return hash(("Word", self.letters, self.genus))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters, self.genus)

    def inverse(self) -> "Word":
        return Word([-x for x in reversed(self.letters)], self.genus)

    def rotate(self, i: int) -> "Word":
        """Cyclic rotation starting at position i (only sensible when
        cyclically reduced, otherwise the result may reduce further)."""
        L = self.letters
        i %= max(len(L), 1)
        return Word(L[i:] + L[:i], self.genus)

    def is_cyclically_reduced(self) -> bool:
        L = self.letters
        return len(L) < 2 or L[0] != -L[-1]

    def exponent_sums(self) -> tuple:
        sums = [0] * (2 * self.genus)
        for x in self.letters:
            sums[abs(x) - 1] += 1 if x > 0 else -1
        return tuple(sums)

    def generator_counts(self) -> tuple:
        """Occurrences of each generator with positive sign."""
        counts = [0] * (2 * self.genus)
        for x in self.letters:
            if x > 0:
                counts[x - 1] += 1
        return tuple(counts)

    def __repr__(self):
        return f"Word({word_to_str(self)!r}, g={self.genus})"


_COMPACT = "abcdefghijklm"


def parse_word(text: str, g: int) -> Word:
    """Parse a word over 2g generators.

    Two syntaxes: whitespace-separated tokens like "a1 b2 -a1", or a compact
    run of single letters where position in the alphabet picks the generator
    and uppercase means inverse ("abAB"; for g = 2 the letters a, b, c, d
    name a1, b1, a2, b2).  The empty string is the identity.
    """
    text = text.strip()
    if not text:
        return Word([], g)
    if any(ch.isdigit() for ch in text) or any(ch.isspace() for ch in text):
        letters = []
        for tok in text.split():
            sign = 1
            if tok.startswith("-"):
                sign = -1
                tok = tok[1:]
            if len(tok) < 2 or tok[0] not in "ab" or not tok[1:].isdigit():
                raise WordError(f"unknown token {tok!r}")
            idx = int(tok[1:])
            if not 1 <= idx <= g:
                raise WordError(f"generator index {idx} exceeds genus {g}")
            base = 2 * (idx - 1) + (1 if tok[0] == "a" else 2)
            letters.append(sign * base)
        return Word(letters, g)
    letters = []
    for ch in text:
        low = ch.lower()
        pos = _COMPACT.find(low)
        if pos < 0 or pos >= 2 * g:
            raise WordError(f"unknown letter {ch!r} for genus {g}")
        letters.append(-(pos + 1) if ch.isupper() else pos + 1)
    return Word(letters, g)


def word_to_str(w: Word) -> str:
    if not w.letters:
        return ""
    if 2 * w.genus <= len(_COMPACT):
        out = []
        for x in w.letters:
            ch = _COMPACT[abs(x) - 1]
            out.append(ch.upper() if x < 0 else ch)
        return "".join(out)
    toks = []
    for x in w.letters:
        idx = (abs(x) - 1) // 2 + 1
        name = "a" if abs(x) % 2 == 1 else "b"
        toks.append(("-" if x < 0 else "") + f"{name}{idx}")
    return " ".join(toks)


def cyclic_reduce(w: Word) -> Word:
    """A cyclically reduced conjugate, trimming matched first/last letters."""
    L = list(w.letters)
    while len(L) >= 2 and L[0] == -L[-1]:
        L = L[1:-1]
    return Word(L, w.genus)


def in_commutator_subgroup(w: Word) -> bool:
    """True when every generator has zero exponent sum (abelianization test)."""
    return all(s == 0 for s in w.exponent_sums())


def relator(g: int) -> Word:
    """The surface relator, the product of commutators of generator pairs."""
    letters = []
    for j in range(g):
        aj, bj = 2 * j + 1, 2 * j + 2
        letters += [aj, bj, -aj, -bj]
    return Word(letters, g)


@lru_cache(maxsize=None)
def _relator_rotations(g: int) -> tuple:
    """All cyclic rotations of the relator and of its inverse, as tuples."""
    rots = []
    for base in (relator(g), relator(g).inverse()):
        L = base.letters
        for i in range(len(L)):
            rots.append(L[i:] + L[:i])
    return tuple(rots)


def _longest_relator_match(letters, start, g, cyclic: bool):
    """Length of the longest subword of ``letters`` beginning at ``start``
    that is a prefix of some rotation of the relator or its inverse; 0 if
    below the replacement threshold 2g+1.  With ``cyclic`` the subword may
    wrap around the end."""
    n = len(letters)
    cap = min(n if cyclic else n - start, 4 * g)
    if cap < 2 * g + 1:
        return 0
    best = 0
    for rot in _relator_rotations(g):
        m = 0
        while m < cap and letters[(start + m) % n] == rot[m]:
            m += 1
        if m > best:
            best = m
            if best == cap:
                break
    return best if best >= 2 * g + 1 else 0


def _complement_inverse(sub, g):
    """For a subword matching rotation = sub + v, return v^-1 as letters."""
    m = len(sub)
    for rot in _relator_rotations(g):
        if rot[:m] == sub:
            return [-x for x in reversed(rot[m:])]
    raise AssertionError("matched subword not found among relator rotations")


def dehn_shorten(w: Word) -> Word:
    """Shorten w as an element of the genus-g surface group.

    Repeatedly finds the leftmost (then longest) contiguous subword of
    length >= 2g+1 that covers more than half of some rotation of the
    relator or its inverse, and replaces it by the inverse of the shorter
    complementary side.  Rotations of the relator all represent the
    identity, so every step preserves the group element; every step
    strictly shortens the word, and the fixed scan order makes the result
    deterministic.  A word is returned unchanged exactly when it carries no
    such subword, so the operation is idempotent.
    """
    g = w.genus
    cur = w
    while True:
        L = cur.letters
        n = len(L)
        if n < 2 * g + 1:
            return cur
        found = None
        for start in range(n - 2 * g):
            m = _longest_relator_match(L, start, g, cyclic=False)
            if m:
                found = (start, m)
                break
        if found is None:
            return cur
        start, m = found
        replacement = _complement_inverse(L[start : start + m], g)
        cur = Word(list(L[:start]) + replacement + list(L[start + m :]), g)


def is_shortest_conj_rep(w: Word) -> bool:
    """Dehn criterion for shortest conjugacy representatives.

    True when w is cyclically reduced and no cyclic subword of length
    >= 2g+1 occurs in any rotation of the relator or its inverse.
    """
    if not w.is_cyclically_reduced():
        return False
    g = w.genus
    L = w.letters
    if len(L) < 2 * g + 1:
        return True
    return all(_longest_relator_match(L, s, g, cyclic=True) == 0 for s in range(len(L)))


def shortest_in_conjugacy_class(w: Word) -> Word:
    """Certified shortest representative of the conjugacy class of w.

    Alternates cyclic reduction with replacement of over-half relator
    subwords of the cyclic word (rotating the word first when the match
    wraps, which moves within the conjugacy class).  Terminates because
    every replacement strictly shortens; the result passes
    :func:`is_shortest_conj_rep`.
    """
    g = w.genus
    cur = cyclic_reduce(w)
    while True:
        L = cur.letters
        n = len(L)
        if n < 2 * g + 1:
            return cur
        found = None
        for start in range(n):
            m = _longest_relator_match(L, start, g, cyclic=True)
            if m:
                found = (start, m)
                break
        if found is None:
            return cur
        start, m = found
        rotated = tuple(L[(start + t) % n] for t in range(n))
        replacement = _complement_inverse(rotated[:m], g)
        cur = cyclic_reduce(Word(replacement + list(rotated[m:]), g))
