"""Exact Haar word integrals over powers of the unitary group.

The expected trace of a word map under independent Haar unitaries is a
rational function of the dimension n.  It is computed by integrating each
generator separately: the trace expansion assigns one matrix index to each
endpoint of a word position, the entrywise integration rule turns each
generator into a sum over pairs of permutations matching plus-occurrences
to inverse-occurrences, and for a fixed choice of matchings the surviving
index constraints close into disjoint loops, each worth a factor n.

Unbalanced words (some generator with nonzero exponent sum) integrate to
zero and short-circuit.  The returned rational function agrees with the
integral at every integer n >= max over generators of the occurrence
count.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .exactnum import NEG_INF, RF_N, RatFuncN, rf_npow
from .symgroup import Permutation
from .weingarten import _wg_coeff_by_type
from .words import Word

WORD_LENGTH_CAP = 12


@dataclass(frozen=True)
class WordIntegralResult:
    value: RatFuncN
    normalized: RatFuncN
    degree: object  # int or -inf

    def to_json(self) -> dict:
        return {
            "value": self.value.to_json(),
            "normalized": self.normalized.to_json(),
            "degree": None if self.degree == NEG_INF else int(self.degree),
        }


def _count_cycles(partner1, partner2):
    """Cycles of the union of two perfect matchings given as partner arrays."""
    size = len(partner1)
    seen = bytearray(size)
    cycles = 0
    for start in range(size):
        if seen[start]:
            continue
        cycles += 1
        x = start
        use_first = True
        while not seen[x]:
            seen[x] = 1
            x = partner1[x] if use_first else partner2[x]
            use_first = not use_first
    return cycles


def _perm_tuples(m: int):
    return list(itertools.permutations(range(m)))


def haar_word_integral(r: int, w: Word) -> WordIntegralResult:
    """Exact expected trace of the word map w over r independent Haar
    unitaries, as a rational function of n."""
    if any(abs(x) > r for x in w.letters):
        raise ValueError(f"word uses generators beyond 1..{r}")
    L = len(w)
    if L > WORD_LENGTH_CAP:
        raise ValueError(f"word length {L} exceeds enumeration guard {WORD_LENGTH_CAP}")
    if L == 0:
        return WordIntegralResult(RF_N, RatFuncN.const(1), 1)

    gens = sorted({abs(x) for x in w.letters})
    plus_occ = {f: [] for f in gens}
    minus_occ = {f: [] for f in gens}
    for pos, x in enumerate(w.letters):
        (plus_occ if x > 0 else minus_occ)[abs(x)].append(pos)
    if any(len(plus_occ[f]) != len(minus_occ[f]) for f in gens):
        zero = RatFuncN.const(0)
        return WordIntegralResult(zero, zero, NEG_INF)

    size = 2 * L
    partner1 = [0] * size  # position chaining: endpoint 1 of j meets endpoint 0 of j+1
    for j in range(L):
        a = 2 * j + 1
        b = 2 * ((j + 1) % L)
        partner1[a] = b
        partner1[b] = a

    # Per generator: every (sigma, tau) choice, its matching arcs and the
    # cycle type driving the Weingarten weight.
    per_gen = []
    for f in gens:
        p = len(plus_occ[f])
        options = []
        perms = _perm_tuples(p)
        for sigma in perms:
            for tau in perms:
                arcs = []
                for i in range(p):
                    arcs.append((2 * plus_occ[f][i], 2 * minus_occ[f][sigma[i]] + 1))
                    arcs.append((2 * plus_occ[f][i] + 1, 2 * minus_occ[f][tau[i]]))
                st = Permutation(sigma) * Permutation(tau).inverse()
                options.append((arcs, (p, st.cycle_type())))
        per_gen.append(options)

    buckets = Counter()
    partner2 = [0] * size
    for combo in itertools.product(*per_gen):
        wg_key = []
        for arcs, key in combo:
            wg_key.append(key)
            for a, b in arcs:
                partner2[a] = b
                partner2[b] = a
        loops = _count_cycles(partner1, partner2)
        buckets[(tuple(sorted(wg_key)), loops)] += 1

    total = RatFuncN.const(0)
    for (wg_key, loops), count in sorted(buckets.items()):
        weight = RatFuncN.const(count)
        for p, ctype in wg_key:
            weight = weight * _wg_coeff_by_type(p, ctype)
        total = total + weight * rf_npow(loops)
    return WordIntegralResult(total, total / RF_N, total.degree())


def normalized_trace(r: int, w: Word) -> RatFuncN:
    """Expected trace divided by n (the trace functional normalized to 1)."""
    return haar_word_integral(r, w).normalized


def multi_trace_integral(r: int, words) -> RatFuncN:
    """Exact expected value of a product of word traces.

    Integrates tr(w_1(x)) * ... * tr(w_m(x)) over r independent Haar
    unitaries by the same per-generator matching expansion as the single
    trace, with one chained index loop per factor.  An empty word factor
    contributes tr(identity) = n.  Used as the flat entrywise oracle for
    the mixed-character pipeline; shares nothing with it beyond the basic
    Weingarten coefficients.
    """
    words = list(words)
    scalar = rf_npow(sum(1 for w in words if len(w) == 0))
    words = [w for w in words if len(w)]
    if not words:
        return scalar
    total_len = sum(len(w) for w in words)
    if total_len > 2 * WORD_LENGTH_CAP:
        raise ValueError(
            f"total trace length {total_len} exceeds guard {2 * WORD_LENGTH_CAP}"
        )
    offsets = []
    pos = 0
    for w in words:
        offsets.append(pos)
        pos += len(w)
    L = pos
    gens = sorted({abs(x) for w in words for x in w.letters})
    if any(abs(x) > r for w in words for x in w.letters):
        raise ValueError(f"words use generators beyond 1..{r}")
    plus_occ = {f: [] for f in gens}
    minus_occ = {f: [] for f in gens}
    for w, off in zip(words, offsets):
        for j, x in enumerate(w.letters):
            (plus_occ if x > 0 else minus_occ)[abs(x)].append(off + j)
    if any(len(plus_occ[f]) != len(minus_occ[f]) for f in gens):
        return RatFuncN.const(0)

    size = 2 * L
    partner1 = [0] * size
    for w, off in zip(words, offsets):
        for j in range(len(w)):
            a = 2 * (off + j) + 1
            b = 2 * (off + (j + 1) % len(w))
            partner1[a] = b
            partner1[b] = a

    per_gen = []
    for f in gens:
        p = len(plus_occ[f])
        options = []
        perms = _perm_tuples(p)
        for sigma in perms:
            for tau in perms:
                arcs = []
                for i in range(p):
                    arcs.append((2 * plus_occ[f][i], 2 * minus_occ[f][sigma[i]] + 1))
                    arcs.append((2 * plus_occ[f][i] + 1, 2 * minus_occ[f][tau[i]]))
                st = Permutation(sigma) * Permutation(tau).inverse()
                options.append((arcs, (p, st.cycle_type())))
        per_gen.append(options)

    buckets = Counter()
    partner2 = [0] * size
    for combo in itertools.product(*per_gen):
        wg_key = []
        for arcs, key in combo:
            wg_key.append(key)
            for a, b in arcs:
                partner2[a] = b
                partner2[b] = a
        loops = _count_cycles(partner1, partner2)
        buckets[(tuple(sorted(wg_key)), loops)] += 1

    total = RatFuncN.const(0)
    for (wg_key, loops), count in sorted(buckets.items()):
        weight = RatFuncN.const(count)
        for p, ctype in wg_key:
            weight = weight * _wg_coeff_by_type(p, ctype)
        total = total + weight * rf_npow(loops)
    return total * scalar
