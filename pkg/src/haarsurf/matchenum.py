"""Enumeration of matching data and exact evaluation of the mixed-character
word integral as a rational function of n.

For a balanced cyclically reduced word w over 2g generators and a mixed
label with k and l boxes, the integral of tr(w(x)) times the mixed
character of the relator word factors into a finite sum over matching
data: per generator f, a pair of permutations (sigma_f, tau_f) matching
plus-occurrences to inverse-occurrences among k relator slots, l
inverse-relator slots and the word occurrences; and per relator junction,
a permutation pi of the k + l slots wiring consecutive relator letters
together.  Each datum contributes a product of Weingarten coefficients,
projection coefficients z(pi), and n to the number of closed index loops.

Slot convention per generator: slots 0..k-1 are relator copies, slots
k..k+l-1 are inverse-relator copies, and the word occurrences follow in
order of position.  The excluded cross pairings (a relator slot matched
with an inverse-relator slot by some sigma or tau) contribute zero and
are filtered out up front.

The genus-2 junction wiring is the normative case; the same cyclic rule
generates the wiring for any genus (gated behind ``allow_general_genus``
and cross-checked only statistically), and the generated g = 2 table is
unit-tested against the eight hand-transcribed maps.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exactnum import NEG_INF, RatFuncN, rf_npow
from .repdata import MixedLabel, dim_mixed_poly
from .mixedrep import z_theta
from .symgroup import Permutation
from .weingarten import _wg_coeff_by_type
from .words import Word, in_commutator_subgroup, relator

COST_GUARD = 10**8


class CostGuardError(ValueError):
    """Enumeration size exceeds the configured guard."""


@dataclass(frozen=True)
class MatchingDatum:
    """One term of the expanded integral: per-generator matching pairs plus
    junction permutations."""

    genus: int
    k: int
    l: int
    sigma: tuple  # Permutation per generator, degree k+l+p_f
    tau: tuple
    pis: tuple  # 4g Permutations of degree k+l


@dataclass(frozen=True)
class JResult:
    j: RatFuncN
    dj: RatFuncN
    match_count: int
    max_chi: int

    def to_json(self) -> dict:
        return {
            "j": self.j.to_json(),
            "dj": self.dj.to_json(),
            "degree_j": None if self.j.is_zero() else int(self.j.degree()),
            "degree_dj": None if self.dj.is_zero() else int(self.dj.degree()),
            "match_count": self.match_count,
            "max_chi": self.max_chi,
        }


def relator_letters(g: int) -> tuple:
    """Letters of the surface relator as (generator index 0-based, sign)."""
    return tuple((abs(x) - 1, 1 if x > 0 else -1) for x in relator(g).letters)


def junction_wiring(g: int) -> tuple:
    """Junction block table: entry t wires relator positions t and t+1.

    Each entry is ((dom_R, dom_Rinv), (ran_R, ran_Rinv)) where a block
    (f, s) means the slots of generator f on its plus side (s = +1,
    occurrences of f) or minus side (s = -1, occurrences of f inverse).
    Domain blocks are read at slot start-points, range blocks at slot
    end-points.
    """
    letters = relator_letters(g)
    table = []
    for t in range(len(letters)):
        f1, e1 = letters[t]
        f2, e2 = letters[(t + 1) % len(letters)]
        dom = ((f2, e2), (f1, -e1))
        ran = ((f1, e1), (f2, -e2))
        table.append((dom, ran))
    return tuple(table)


class MatchContext:
    """Fixed index tables for one (w, k, l) enumeration."""

    def __init__(self, w: Word, k: int, l: int, allow_general_genus: bool = False):
        if w.genus != 2 and not allow_general_genus:
            raise ValueError(
                "genus != 2 requires allow_general_genus (validated only by "
                "Monte Carlo, not by the exact oracle)"
            )
        if not w.is_cyclically_reduced():
            raise ValueError("word must be cyclically reduced")
        if not in_commutator_subgroup(w):
            raise ValueError("word must lie in the commutator subgroup (balanced)")
        self.w = w
        self.k = k
        self.l = l
        self.g = w.genus
        self.L = len(w)
        self.n_gens = 2 * self.g
        kl = k + l
        self.kl = kl
        counts = w.generator_counts()
        self.p = list(counts)
        self.m = [kl + pf for pf in self.p]

        self.plus_occ = [[] for _ in range(self.n_gens)]
        self.minus_occ = [[] for _ in range(self.n_gens)]
        for pos, x in enumerate(w.letters):
            (self.plus_occ if x > 0 else self.minus_occ)[abs(x) - 1].append(pos)

        # Node ids: word endpoints first, then relator-slot endpoints.
        self.word_nodes = 2 * self.L
        self.size = self.word_nodes + self.n_gens * 2 * kl * 2
        self.ports = list(range(self.word_nodes, self.size))

        cost = 1
        for mf in self.m:
            cost *= factorial(mf) ** 2
        cost *= factorial(kl) ** (4 * self.g)
        self.cost = cost

    def rnode(self, f: int, pm: int, slot: int, e: int) -> int:
        block = 2 * f + (0 if pm > 0 else 1)
        return self.word_nodes + (block * self.kl + slot) * 2 + e

    def plus_node(self, f: int, i: int, e: int) -> int:
        if i < self.kl:
            return self.rnode(f, +1, i, e)
        return 2 * self.plus_occ[f][i - self.kl] + e

    def minus_node(self, f: int, i: int, e: int) -> int:
        if i < self.kl:
            return self.rnode(f, -1, i, e)
        return 2 * self.minus_occ[f][i - self.kl] + e

    def intermediate_edges(self):
        """Word-loop chaining: end of position j meets start of position j+1."""
        return [(2 * j + 1, 2 * ((j + 1) % self.L)) for j in range(self.L)]

    def matching_arcs(self, f: int, sigma, tau):
        """Arcs of one generator: start-points via sigma, end-points via tau."""
        arcs = []
        for i in range(self.m[f]):
            arcs.append((self.plus_node(f, i, 0), self.minus_node(f, sigma[i], 1)))
            arcs.append((self.plus_node(f, i, 1), self.minus_node(f, tau[i], 0)))
        return arcs

    def pi_edges(self, t: int, pi):
        """Junction edges for junction t carrying permutation pi of [k+l]."""
        (dom_r, dom_ri), (ran_r, ran_ri) = junction_wiring(self.g)[t]
        k = self.k
        out = []
        for mslot in range(self.kl):
            fd, sd = dom_r if mslot < k else dom_ri
            v = pi[mslot]
            fr, sr = ran_r if v < k else ran_ri
            out.append((self.rnode(fd, sd, mslot, 0), self.rnode(fr, sr, v, 1)))
        return out

    def allowed_sigma(self, f: int):
        """All permutations of the slot set of f that never pair a relator
        slot with an inverse-relator slot."""
        k, kl, mf = self.k, self.kl, self.m[f]
        out = []
        for images in itertools.permutations(range(mf)):
            ok = True
            for i in range(k):
                if k <= images[i] < kl:
                    ok = False
                    break
            if ok:
                for i in range(k, kl):
                    if images[i] < k:
                        ok = False
                        break
            if ok:
                out.append(images)
        return out

    def block_pis(self):
        """Junction permutations preserving the relator / inverse-relator split."""
        out = []
        for left in itertools.permutations(range(self.k)):
            for right in itertools.permutations(range(self.k, self.kl)):
                out.append(left + right)
        return out

    def all_pis(self):
        return list(itertools.permutations(range(self.kl)))


def enumerate_match(w: Word, k: int, l: int, star: bool = False, allow_general_genus: bool = False):
    """Yield every matching datum of (w, k, l) in lexicographic order.

    With ``star`` the restricted family is produced: tau equal to sigma per
    generator and every junction permutation preserving the relator and
    inverse-relator blocks.
    """
    if k + l < 1:
        raise ValueError("k + l must be >= 1")
    ctx = MatchContext(w, k, l, allow_general_genus)
    if ctx.cost > COST_GUARD:
        raise CostGuardError(
            f"enumeration cost {ctx.cost:.3e} exceeds guard {COST_GUARD:.1e}"
        )
    per_gen = [ctx.allowed_sigma(f) for f in range(ctx.n_gens)]
    pis = ctx.block_pis() if star else ctx.all_pis()
    n_junc = 4 * ctx.g
    for sigmas in itertools.product(*per_gen):
        tau_space = [(s,) for s in sigmas] if star else per_gen
        for taus in itertools.product(*tau_space):
            for pi_tuple in itertools.product(pis, repeat=n_junc):
                yield MatchingDatum(
                    genus=ctx.g,
                    k=k,
                    l=l,
                    sigma=tuple(Permutation(s) for s in sigmas),
                    tau=tuple(Permutation(t) for t in taus),
                    pis=tuple(Permutation(p) for p in pi_tuple),
                )


def _cycles_of_union(partner1, partner2, size):
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


def datum_partner_arrays(ctx: MatchContext, d: MatchingDatum):
    """Partner arrays (boundary-chaining side, matching-arc side) of a datum."""
    size = ctx.size
    p1 = [-1] * size
    for a, b in ctx.intermediate_edges():
        p1[a] = b
        p1[b] = a
    for t, pi in enumerate(d.pis):
        for a, b in ctx.pi_edges(t, pi.images):
            p1[a] = b
            p1[b] = a
    p2 = [-1] * size
    for f in range(ctx.n_gens):
        for a, b in ctx.matching_arcs(f, d.sigma[f].images, d.tau[f].images):
            p2[a] = b
            p2[b] = a
    return p1, p2


def count_N_exponent(d: MatchingDatum, w: Word) -> int:
    """Number of closed index loops of a datum; the index count is n to
    this power."""
    ctx = MatchContext(w, d.k, d.l, allow_general_genus=(w.genus != 2))
    p1, p2 = datum_partner_arrays(ctx, d)
    return _cycles_of_union(p1, p2, ctx.size)


def _boundary_pairing(ctx, sigmas, taus, partner1_w):
    """Contract matching arcs against word chaining.

    Returns (pairing dict on relator-slot endpoints, closed loop count).
    Every word endpoint has one chaining edge and one arc; following the
    alternation from a relator-slot endpoint either reaches another
    relator-slot endpoint or never leaves the word loop (a closed loop).
    """
    size = ctx.size
    p2 = [-1] * size
    for f in range(ctx.n_gens):
        for a, b in ctx.matching_arcs(f, sigmas[f], taus[f]):
            p2[a] = b
            p2[b] = a
    word_nodes = ctx.word_nodes
    pairing = {}
    seen = bytearray(size)
    for port in ctx.ports:
        if seen[port]:
            continue
        # Walk: arc first, then alternate chaining/arc until a port appears.
        x = p2[port]
        seen[port] = 1
        while x >= 0 and x < word_nodes:
            seen[x] = 1
            y = partner1_w[x]
            seen[y] = 1
            x = p2[y]
        seen[x] = 1
        pairing[port] = x
        pairing[x] = port
    closed = 0
    for j in range(word_nodes):
        if seen[j]:
            continue
        closed += 1
        x = j
        use_arc = True
        while not seen[x]:
            seen[x] = 1
            x = p2[x] if use_arc else partner1_w[x]
            use_arc = not use_arc
    return pairing, closed


def _port_cycles(ctx, pairing, pi_tuple_edges):
    """Closed loops formed by a boundary pairing plus junction edges."""
    partner = {}
    for edges in pi_tuple_edges:
        for a, b in edges:
            partner[a] = b
            partner[b] = a
    seen = set()
    cycles = 0
    for port in ctx.ports:
        if port in seen:
            continue
        cycles += 1
        x = port
        use_pi = True
        while x not in seen:
            seen.add(x)
            x = partner[x] if use_pi else pairing[x]
            use_pi = not use_pi
    return cycles


class _JAccumulator:
    """Shared exact accumulation for one (w, k, l, star) enumeration.

    Terms are grouped by (junction multiset, Weingarten key, loop count) so
    that all rational-function arithmetic happens once per distinct key;
    merging buckets is exact integer addition, hence order independent.
    """

    def __init__(self, ctx: MatchContext, star: bool):
        self.ctx = ctx
        self.star = star
        self.buckets = Counter()
        self.match_count = 0
        self.max_chi = None

        pis = ctx.block_pis() if star else ctx.all_pis()
        self.pi_perms = pis
        self.pi_edge_table = [
            [ctx.pi_edges(t, pi) for pi in pis] for t in range(4 * ctx.g)
        ]
        size = ctx.size
        self.partner1_w = [-1] * size
        for a, b in ctx.intermediate_edges():
            self.partner1_w[a] = b
            self.partner1_w[b] = a

        self.per_gen = [ctx.allowed_sigma(f) for f in range(ctx.n_gens)]
        self._beta_cache = {}

    def run(self):
        ctx = self.ctx
        n_junc = 4 * ctx.g
        n_pis = len(self.pi_perms)
        pi_indices = list(itertools.product(range(n_pis), repeat=n_junc))
        per_gen = self.per_gen
        for sigmas in itertools.product(*per_gen):
            tau_space = [(s,) for s in sigmas] if self.star else per_gen
            for taus in itertools.product(*tau_space):
                wg_key = tuple(
                    sorted(
                        (
                            ctx.m[f],
                            (Permutation(sigmas[f]) * Permutation(taus[f]).inverse()).cycle_type(),
                        )
                        for f in range(ctx.n_gens)
                    )
                )
                pairing, closed = _boundary_pairing(ctx, sigmas, taus, self.partner1_w)
                beta_key = tuple(sorted((a, b) for a, b in pairing.items() if a < b))
                cached = self._beta_cache.get(beta_key)
                if cached is None:
                    cached = Counter()
                    for idx_tuple in pi_indices:
                        edges = [
                            self.pi_edge_table[t][i] for t, i in enumerate(idx_tuple)
                        ]
                        extra = _port_cycles(ctx, pairing, edges)
                        cached[(tuple(sorted(idx_tuple)), extra)] += 1
                    self._beta_cache[beta_key] = cached
                self.match_count += n_pis**n_junc
                n_cycles_wg = sum(len(ct) for _, ct in wg_key)
                base = -(ctx.L + 4 * ctx.g * ctx.kl)
                for (pi_ms, extra), cnt in cached.items():
                    loops = closed + extra
                    self.buckets[(pi_ms, wg_key, loops)] += cnt
                    chi = base + loops + n_cycles_wg
                    if self.max_chi is None or chi > self.max_chi:
                        self.max_chi = chi

    def merge(self, other: "_JAccumulator"):
        self.buckets.update(other.buckets)
        self.match_count += other.match_count
        if other.max_chi is not None and (
            self.max_chi is None or other.max_chi > self.max_chi
        ):
            self.max_chi = other.max_chi

    def assemble(self, label: MixedLabel) -> RatFuncN:
        ctx = self.ctx
        z = z_theta(label)
        z_by_perm = [z.coeff(Permutation(p)) for p in self.pi_perms]
        wg_cache = {}
        prod_cache = {}
        total = RatFuncN.const(0)
        for (pi_ms, wg_key, loops), count in sorted(self.buckets.items()):
            zprod = prod_cache.get(pi_ms)
            if zprod is None:
                zprod = RatFuncN.const(1)
                for i in pi_ms:
                    zprod = zprod * z_by_perm[i]
                prod_cache[pi_ms] = zprod
            if zprod.is_zero():
                continue
            wgprod = wg_cache.get(wg_key)
            if wgprod is None:
                wgprod = RatFuncN.const(1)
                for m, ctype in wg_key:
                    wgprod = wgprod * _wg_coeff_by_type(m, ctype)
                wg_cache[wg_key] = wgprod
            total = total + RatFuncN.const(count) * zprod * wgprod * rf_npow(loops)
        return total


def j_n(
    w: Word,
    label: MixedLabel,
    star_only: bool = False,
    allow_general_genus: bool = False,
    threads: int = 1,
) -> JResult:
    """Exact mixed-character word integral for (w, label) as a RatFuncN.

    With ``star_only`` the sum runs over the restricted matching family
    only; that value is an upper-bound surrogate for degree bookkeeping and
    is never the full integral unless k + l = 0.
    """
    k, l = label.k, label.l
    if k + l < 1:
        raise ValueError("j_n requires k + l >= 1; use haar_word_integral instead")
    acc = _accumulate(w, k, l, star_only, allow_general_genus, threads)
    # Each of the 4g junction couplings carries one factor of the label
    # dimension: the projection onto the orbit span is D(n) times the
    # group-algebra kernel z (the normalization that makes it idempotent
    # and of trace D).
    dim_poly = dim_mixed_poly(label)
    dim_rf = RatFuncN(dim_poly)
    dpow = RatFuncN.const(1)
    for _ in range(4 * w.genus):
        dpow = dpow * dim_rf
    j = dpow * acc.assemble(label)
    dj = dim_rf * j
    return JResult(j=j, dj=dj, match_count=acc.match_count, max_chi=acc.max_chi)


_ACCUM_CACHE = {}


def _accumulate(w, k, l, star, allow_general_genus, threads=1) -> _JAccumulator:
    """Run (or reuse) the enumeration for (w, k, l, star).

    The accumulator is label independent; j_n for several labels with the
    same box counts reuses one enumeration.
    """
    key = (w.letters, w.genus, k, l, bool(star))
    cached = _ACCUM_CACHE.get(key)
    if cached is not None:
        return cached
    ctx = MatchContext(w, k, l, allow_general_genus)
    if ctx.cost > COST_GUARD:
        raise CostGuardError(
            f"enumeration cost {ctx.cost:.3e} exceeds guard {COST_GUARD:.1e}"
        )
    acc = _JAccumulator(ctx, star)
    if threads > 1:
        _run_sharded(acc, threads)
    else:
        acc.run()
    _ACCUM_CACHE[key] = acc
    return acc


def _run_sharded(acc: _JAccumulator, threads: int):
    """Deterministic parallel run: shard the leading sigma choice."""
    import concurrent.futures as cf

    ctx = acc.ctx
    first = acc.per_gen[0]
    shards = [first[i::threads] for i in range(threads)]
    shards = [s for s in shards if s]
    with cf.ProcessPoolExecutor(max_workers=len(shards)) as pool:
        futures = [
            pool.submit(_run_shard, ctx.w, ctx.k, ctx.l, acc.star, shard)
            for shard in shards
        ]
        for fut in futures:
            buckets, match_count, max_chi = fut.result()
            acc.buckets.update(buckets)
            acc.match_count += match_count
            if max_chi is not None and (acc.max_chi is None or max_chi > acc.max_chi):
                acc.max_chi = max_chi


def _run_shard(w, k, l, star, first_shard):
    ctx = MatchContext(w, k, l, allow_general_genus=(w.genus != 2))
    acc = _JAccumulator(ctx, star)
    acc.per_gen = [list(first_shard)] + acc.per_gen[1:]
    acc.run()
    return acc.buckets, acc.match_count, acc.max_chi


def match_star_chis(w: Word, k: int, l: int, allow_general_genus: bool = False):
    """Euler characteristics over the restricted family, one per datum.

    Cheap closed form: chi equals the loop count plus the per-generator
    cycle count minus word length minus 4g(k+l); with tau = sigma the
    per-generator permutation is the identity so its cycle count is the
    slot count.  Validated structurally in the surface module.
    """
    ctx = MatchContext(w, k, l, allow_general_genus)
    partner1_w = [-1] * ctx.size
    for a, b in ctx.intermediate_edges():
        partner1_w[a] = b
        partner1_w[b] = a
    pis = ctx.block_pis()
    pi_edge_table = [[ctx.pi_edges(t, pi) for pi in pis] for t in range(4 * ctx.g)]
    per_gen = [ctx.allowed_sigma(f) for f in range(ctx.n_gens)]
    base = -(ctx.L + 4 * ctx.g * ctx.kl) + sum(ctx.m)
    out = []
    for sigmas in itertools.product(*per_gen):
        pairing, closed = _boundary_pairing(ctx, sigmas, sigmas, partner1_w)
        for idx_tuple in itertools.product(range(len(pis)), repeat=4 * ctx.g):
            edges = [pi_edge_table[t][i] for t, i in enumerate(idx_tuple)]
            loops = closed + _port_cycles(ctx, pairing, edges)
            out.append(base + loops)
    return out


def assemble_expected_trace(
    w: Word, max_boxes: int, n0: int, zeta_boxes: int | None = None
) -> Fraction:
    """Heuristic finite-label approximation of the surface-group expected
    trace at integer dimension n0.

    Sums dimension times integral over all labels with at most max_boxes
    total boxes (the empty label contributing the plain word integral),
    normalized by the truncated zeta value.  The label cutoff and the
    truncation error are approximations; callers must treat the output as
    a heuristic, not an exact expectation.
    """
    from .repdata import witten_zeta_truncated
    from .symgroup import partitions
    from .wordintegral import haar_word_integral

    if n0 < 2 * max_boxes or n0 < 2:
        raise ValueError("need n0 >= max(2, 2 * max_boxes)")
    g = w.genus
    balanced = in_commutator_subgroup(w)
    # Empty-label term: the plain word integral (1-dimensional trivial label).
    if balanced:
        total = haar_word_integral(2 * g, w).value.eval(n0)
    else:
        total = Fraction(0)
    if balanced:
        w = _cyc_reduce(w)
        for boxes in range(1, max_boxes + 1):
            for k in range(boxes + 1):
                l = boxes - k
                for mu in partitions(k):
                    for nu in partitions(l):
                        label = MixedLabel(mu, nu)
                        res = j_n(w, label, allow_general_genus=(g != 2))
                        total += dim_mixed_poly(label).eval(n0) * res.j.eval(n0)
    zb = zeta_boxes if zeta_boxes is not None else max(4, max_boxes)
    zeta = witten_zeta_truncated(2 * g - 2, n0, zb)
    return total / zeta


def _cyc_reduce(w: Word) -> Word:
    from .words import cyclic_reduce

    return cyclic_reduce(w)
