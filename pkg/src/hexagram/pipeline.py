"""The enumerative engine: from three (pascal label, line) constraints
over F_p to the intersection number IN_T and explicit solutions.

One trial, for fixed lines:

1. build the 9-generator ideal (three 2x2-minor triples),
2. a degrevlex Groebner basis,
3. saturate away the big diagonal by the 15 coordinate differences --
   by auxiliary-variable elimination while the ideal is positive
   dimensional (spurious diagonal components), then cheaply inside the
   finite quotient once it is zero-dimensional,
4. take the zero-dimensional radical,
5. the count is the quotient dimension, cross-checked through minimal
   polynomials of two random separating forms.

Positive-dimensional junk lives on polydiagonals (coordinate collapses
on which every generator vanishes identically); the engine detects the
maximal such loci by substitution over all set partitions of the six
letters and skips eliminations that cannot cut anything, so only a few
eliminations per trial are expensive.

Consensus across trials at distinct primes (the finite-field
methodology) produces IN_T; disagreement is reported, never resolved
silently.
"""

from __future__ import annotations

import hashlib
import itertools
import logging
import random
import time
from dataclasses import dataclass, field

import numpy as np

from . import upoly
from .conic import VARS, hexad_ring, pascal_coords
from .errors import ConsistencyError, NonGenericLinesError, UsageError
from .fields import ext_field
from .groebner import (ExtensionFamily, GroebnerBasis, Ideal, buchberger,
                       radical_gb, rational_points, saturate_gb)
from .labels import (PascalLabel, Triple, pointwise_stabilizer, sort_triple,
                     triple_str, zeta_inv)
from .polynomials import Polynomial, PolyRing, ring_cache

log = logging.getLogger(__name__)

DEFAULT_PRIMES = (32003, 43051, 48619)
K123 = PascalLabel.of(1, 2, 3)


def derive_seed(*parts) -> int:
    """Deterministic 63-bit seed from arbitrary labelled parts."""
    text = "|".join(str(p) for p in parts)
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big") >> 1


@dataclass(frozen=True)
class TripleInstance:
    """Three (label, line) constraints over one prime; the unit of work."""

    labels: Triple
    lines: tuple[tuple[int, int, int], ...]
    prime: int
    seed: int | None = None   # None: user-supplied lines

    def __post_init__(self):
        if len(self.lines) != 3:
            raise UsageError("need exactly three lines")
        if len(set(self.labels)) != 3:
            raise UsageError("labels must be three distinct pascals")
        # sort the labels, carrying each line with its label
        order = sorted(range(3), key=lambda i: self.labels[i])
        object.__setattr__(self, "labels", tuple(self.labels[i] for i in order))
        lines = tuple(tuple(int(c) % self.prime for c in self.lines[i])
                      for i in order)
        object.__setattr__(self, "lines", lines)
        p = self.prime
        for ln in lines:
            if ln == (0, 0, 0):
                raise UsageError("a line must have a nonzero coordinate vector")
        for l1, l2 in itertools.combinations(lines, 2):
            if _proportional3(l1, l2, p):
                raise UsageError(f"proportional lines {l1} and {l2}")

    @property
    def pairs(self):
        return tuple(zip(self.labels, self.lines))


def _proportional3(u, v, p):
    return ((u[1] * v[2] - u[2] * v[1]) % p == 0
            and (u[2] * v[0] - u[0] * v[2]) % p == 0
            and (u[0] * v[1] - u[1] * v[0]) % p == 0)


def draw_lines(p: int, seed: int) -> tuple[tuple[int, int, int], ...]:
    """Three random pairwise non-proportional lines avoiding [0,0,1]
    (l2 = 0 would park a construction point at infinity)."""
    rng = random.Random(seed)
    lines: list[tuple[int, int, int]] = []
    while len(lines) < 3:
        ln = (rng.randrange(p), rng.randrange(p), rng.randrange(p))
        if ln == (0, 0, 0) or ln[2] == 0:
            continue
        if any(_proportional3(ln, other, p) for other in lines):
            continue
        lines.append(ln)
    return tuple(lines)


def random_instance(labels, p: int, seed: int) -> TripleInstance:
    return TripleInstance(sort_triple(labels), draw_lines(p, seed), p, seed)


# ---------------------------------------------------------------------------
# Ideal construction
# ---------------------------------------------------------------------------

def constraint_minors(p: int, label: PascalLabel, line) -> list[Polynomial]:
    """The three 2x2 minors of the (pascal coordinates / line) matrix."""
    u = pascal_coords(p, label)
    a0, a1, a2 = (int(c) % p for c in line)
    return [u[0] * a1 - u[1] * a0,
            u[0] * a2 - u[2] * a0,
            u[1] * a2 - u[2] * a1]


def build_ideal(instance: TripleInstance) -> Ideal:
    """I_T: the sum of the three constraint ideals (9 generators)."""
    ring = hexad_ring(instance.prime)
    gens: list[Polynomial] = []
    for label, line in instance.pairs:
        gens.extend(constraint_minors(instance.prime, label, line))
    return Ideal(ring, tuple(gens))


def diagonal_differences(ring: PolyRing) -> list[Polynomial]:
    """The 15 differences u - v cutting out the big diagonal."""
    names = [n for n in VARS if n in ring.index]
    return [ring.var(u) - ring.var(v)
            for u, v in itertools.combinations(names, 2)]


# ---------------------------------------------------------------------------
# Saturation planning: find the polydiagonal components actually present
# ---------------------------------------------------------------------------

def _locus_vanishes(gens, partition, pinned=None) -> bool:
    """Do all generators vanish identically on the polydiagonal where
    each group collapses (optionally with one variable pinned to a
    constant)?"""
    if not gens:
        return True
    ring = gens[0].ring
    images: dict[str, Polynomial | int] = {nm: ring.var(nm) for nm in ring.names}
    for grp in partition:
        rep = min(grp)
        for i in grp:
            images[VARS[i]] = ring.var(VARS[rep])
    if pinned is not None:
        # pin every variable collapsed with the fixed letter to its value
        name, value = pinned
        pinned_group = next((grp for grp in partition if VARS.index(name) in grp),
                            frozenset({VARS.index(name)}))
        for i in pinned_group:
            images[VARS[i]] = int(value)
    return all(g.substitute(images).is_zero() for g in gens)


def _set_partitions_with_collision():
    """All set partitions of {0..5} owning a group of size >= 2 (their
    loci are the polydiagonals), finest first."""
    def rec(items):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for sub in rec(rest):
            yield [[first]] + sub
            for i in range(len(sub)):
                yield sub[:i] + [[first] + sub[i]] + sub[i + 1:]
    out = []
    for part in rec(list(range(6))):
        groups = tuple(sorted((frozenset(g) for g in part if len(g) > 1),
                              key=sorted))
        if groups:
            out.append(groups)
    out = sorted(set(out), key=lambda gs: sum(len(g) - 1 for g in gs))
    return out


def junk_partitions(gens, pinned=None):
    """The polydiagonal loci on which every generator vanishes
    identically (the positive-dimensional junk components), reported as
    the finest such partitions: coarser collapses lie inside them."""
    verified: list[tuple[frozenset[int], ...]] = []

    def refines(fine, coarse):
        return all(any(g <= big for big in coarse) for g in fine)

    for part in _set_partitions_with_collision():
        if any(refines(keep, part) for keep in verified):
            continue   # contained in an already-verified locus
        if _locus_vanishes(gens, part, pinned=pinned):
            verified.append(part)
    return verified


def saturation_plan(gens, ring: PolyRing, pinned=None) -> list[Polynomial]:
    """Polynomials to eliminate with (in order) while the ideal stays
    positive dimensional.

    Saturation stays one linear difference at a time (a product would
    inflate the elimination degrees).  Differences are taken in the
    natural pair order but only when they still hit a remaining junk
    component -- small consecutive cuts keep each elimination cheap,
    and useless eliminations are skipped outright.  Unused differences
    trail as a fallback for anything the detection missed.
    """
    partitions = junk_partitions(gens, pinned=pinned)
    pairs = list(itertools.combinations(range(6), 2))

    def hits(pair, part):
        return any(pair[0] in grp and pair[1] in grp for grp in part)

    chosen: list[tuple[int, int]] = []
    remaining = list(partitions)
    for pair in pairs:
        struck = [pt for pt in remaining if hits(pair, pt)]
        if struck:
            chosen.append(pair)
            remaining = [pt for pt in remaining if pt not in struck]
        if not remaining:
            break
    rest = [pr for pr in pairs if pr not in chosen]
    return [ring.var(VARS[i]) - ring.var(VARS[j]) for i, j in chosen + rest]


# ---------------------------------------------------------------------------
# The core reduction: saturate, radical, count
# ---------------------------------------------------------------------------

def saturate_and_count(gb: GroebnerBasis, planned, everything, rng,
                       trace=None) -> tuple[int, GroebnerBasis]:
    """Saturate (eliminations while positive-dimensional, quotient
    linear algebra afterwards), take the radical, count, cross-check."""
    for g in planned:
        if gb.is_zero_dimensional():
            break
        gb = saturate_gb(gb, g, trace=trace)
    if not gb.is_zero_dimensional():
        raise NonGenericLinesError(
            "ideal still positive-dimensional after saturating all differences")
    for g in everything:
        gb = saturate_gb(gb, g)
    gb = radical_gb(gb)
    count = gb.quotient_dimension()
    _crosscheck_count(gb, count, rng)
    return count, gb


def _crosscheck_count(gb: GroebnerBasis, count: int, rng) -> None:
    """Two random linear forms must have squarefree minimal polynomials
    of degree = count (guards shape-position accidents)."""
    if count == 0:
        return
    quot = gb.quotient()
    ring = gb.ring
    agree = 0
    for _ in range(12):
        terms = {}
        for j in range(ring.n):
            c = rng.randrange(ring.p)
            if c:
                terms[ring.var_key(j)] = c
        if not terms:
            continue
        mu = quot.minimal_polynomial(terms)
        if upoly.degree(upoly.squarefree_part(mu, ring.p)) == count:
            agree += 1
            if agree == 2:
                return
    raise ConsistencyError(
        f"no two random forms confirmed the degree {count}")


def reduce_instance(instance: TripleInstance, trace=None) -> tuple[int, GroebnerBasis]:
    """Full pipeline for fixed lines; returns (count, final radical GB)."""
    p = instance.prime
    ring = hexad_ring(p)
    gens = build_ideal(instance).generators
    gb = buchberger(Ideal(ring, gens), trace=trace)
    planned = saturation_plan(gens, ring)
    everything = diagonal_differences(ring)
    rng = random.Random(derive_seed("crosscheck", triple_str(instance.labels),
                                    p, instance.seed))
    return saturate_and_count(gb, planned, everything, rng, trace=trace)


# ---------------------------------------------------------------------------
# Trials, consensus, run configuration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TrialRecord:
    """One replayable (triple, prime, seed) computation."""

    triple: str
    prime: int
    seed: int | None
    lines: tuple[tuple[int, int, int], ...]
    count: int
    zero_dim: bool
    retries: int
    millis: int

    def key(self):
        return (self.triple, self.prime, self.seed)


@dataclass(frozen=True)
class RunConfig:
    primes: tuple[int, ...] = DEFAULT_PRIMES
    trials: int = 3
    retry_limit: int = 5
    seed: int = 1
    path: str = "six"            # six | four | both
    workers: int = 1

    def __post_init__(self):
        from .fields import Prime
        for p in self.primes:
            Prime(p)
        if self.trials < 1:
            raise UsageError("trials must be >= 1")
        if self.path not in ("six", "four", "both"):
            raise UsageError(f"unknown compute path {self.path!r}")


@dataclass
class IntersectionResult:
    labels: Triple
    trials: list[TrialRecord]
    consensus: int | None
    disagreement: bool

    def report(self) -> str:
        head = triple_str(self.labels)
        if self.disagreement:
            lines = [f"DISAGREEMENT on {{{head}}}:"]
            for t in self.trials:
                lines.append(f"  p={t.prime} seed={t.seed} count={t.count} "
                             f"retries={t.retries} ({t.millis} ms)")
            return "\n".join(lines)
        if self.consensus is None:
            return (f"IN {{{head}}} = {self.trials[0].count} (tentative: "
                    f"single-prime evidence, no consensus)")
        return f"IN {{{head}}} = {self.consensus}  ({len(self.trials)} trials)"


def _debug_trace(event: dict) -> None:
    log.debug("groebner %s", event)


def run_trial(labels, prime: int, seed: int, retry_limit: int = 5,
              path: str = "six", trace=None) -> TrialRecord:
    """One seeded trial; non-generic line draws are retried with
    deterministically derived fresh seeds."""
    labels = sort_triple(labels)
    if trace is None and log.isEnabledFor(logging.DEBUG):
        trace = _debug_trace
    t0 = time.perf_counter()
    last_exc: Exception | None = None
    for attempt in range(retry_limit + 1):
        attempt_seed = seed if attempt == 0 else derive_seed(seed, "retry", attempt)
        lines = draw_lines(prime, attempt_seed)
        instance = TripleInstance(labels, lines, prime, seed)
        try:
            if path == "four":
                count = parametrized_count(instance, trace=trace)
            else:
                count, _ = reduce_instance(instance, trace=trace)
                if path == "both":
                    also = parametrized_count(instance, trace=trace)
                    if also != count:
                        raise ConsistencyError(
                            f"six/four path disagreement: {count} vs {also}")
            millis = int((time.perf_counter() - t0) * 1000)
            return TrialRecord(triple_str(labels), prime, seed, lines,
                               count, True, attempt, millis)
        except NonGenericLinesError as exc:
            last_exc = exc
            log.info("retrying %s at p=%d (attempt %d): %s",
                     triple_str(labels), prime, attempt + 1, exc)
    raise NonGenericLinesError(
        f"{triple_str(labels)} at p={prime}: retry limit exhausted ({last_exc})")


def trial_seed(config: RunConfig, labels, prime: int, index: int) -> int:
    return derive_seed(config.seed, triple_str(labels), prime, index)


def intersection_number(labels, config: RunConfig = RunConfig(),
                        cached: dict | None = None,
                        sink=None, trace=None) -> IntersectionResult:
    """IN_T by consensus: `config.trials` seeded trials cycling through
    `config.primes`.  Consensus needs every trial to agree with at
    least two distinct primes involved; anything else is reported as a
    disagreement, never resolved by majority."""
    labels = sort_triple(labels)
    trials: list[TrialRecord] = []
    for i in range(config.trials):
        prime = config.primes[i % len(config.primes)]
        seed = trial_seed(config, labels, prime, i)
        key = (triple_str(labels), prime, seed)
        rec = cached.get(key) if cached else None
        if rec is None:
            rec = run_trial(labels, prime, seed, config.retry_limit,
                            path=config.path, trace=trace)
            if sink is not None:
                sink(rec)
            if cached is not None:
                cached[key] = rec
        trials.append(rec)
    counts = {t.count for t in trials}
    primes_used = {t.prime for t in trials}
    # consensus needs at least two agreeing trials at distinct primes;
    # a lone trial is reported as tentative, never as consensus
    ok = len(counts) == 1 and len(primes_used) >= 2
    return IntersectionResult(labels, trials,
                              consensus=trials[0].count if ok else None,
                              disagreement=len(counts) > 1)


# ---------------------------------------------------------------------------
# Explicit solutions
# ---------------------------------------------------------------------------

@dataclass
class SolutionSet:
    instance: TripleInstance
    count: int
    rational: list[tuple[int, ...]]          # hexads (a..f)
    families: list[ExtensionFamily]
    orbits: list[list[int]] = field(default_factory=list)  # geometric-point orbits

    def describe(self) -> str:
        out = [f"IN = {self.count} over F_{self.instance.prime} "
               f"for {{{triple_str(self.instance.labels)}}}"]
        for pt in self.rational:
            out.append("  rational: (" + ", ".join(
                f"{v}={x}" for v, x in zip(VARS, pt)) + ")")
        for fam in self.families:
            prim = fam.primitive
            rows = []
            for nm in VARS:
                if nm == prim:
                    continue
                if nm in fam.exprs:
                    rows.append(f"{nm} = {_render_linear(fam.exprs[nm], prim)}")
            out.append(f"  family of degree {fam.degree}: {prim} a root of "
                       f"{_render_minpoly(fam.min_poly, prim)}; " + ", ".join(rows))
        if self.orbits:
            sizes = sorted(len(o) for o in self.orbits)
            out.append(f"  stabiliser orbits: {len(self.orbits)} of sizes {sizes}")
        return "\n".join(out)


def _render_minpoly(coeffs, var: str) -> str:
    deg = len(coeffs) - 1
    parts = [f"{var}^{deg}" if deg > 1 else var]
    for i in range(deg - 1, -1, -1):
        c = coeffs[i]
        if c:
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            parts.append(f"{c}{'' if not mono else '*' + mono}")
    return " + ".join(parts)


def _render_linear(coeffs, var: str) -> str:
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append(f"{c}*{var}" if c != 1 else var)
        else:
            parts.append(f"{c}*{var}^{i}" if c != 1 else f"{var}^{i}")
    return " + ".join(parts) if parts else "0"


def _evaluate_ext(poly: Polynomial, values: dict[str, "object"], ext) -> "object":
    """Evaluate a polynomial at extension-field values (exact)."""
    acc = ext.zero()
    ring = poly.ring
    for k, c in poly.terms.items():
        t = ext(c)
        for j, e in enumerate(ring.exps(k)):
            if e:
                t = t * values[ring.names[j]] ** e
        acc = acc + t
    return acc


def solve_points(instance: TripleInstance, trace=None) -> SolutionSet:
    """Count plus explicit solutions, each re-verified against all nine
    generators by exact arithmetic (rational points over F_p, families
    inside F_p[x]/(min poly)); then the stabiliser-orbit structure."""
    count, gb = reduce_instance(instance, trace=trace)
    pts = rational_points(gb, rng=random.Random(derive_seed(
        "points", triple_str(instance.labels), instance.prime)))
    if pts.total_degree() != count:
        raise ConsistencyError(
            f"point extraction found degree {pts.total_degree()}, expected {count}")
    gens = build_ideal(instance).generators
    rational = []
    for pt in pts.rational:
        tup = tuple(pt[nm] for nm in VARS)
        for g in gens:
            if int(g.evaluate(pt)) != 0:
                raise ConsistencyError(f"reported point {tup} does not vanish")
        rational.append(tup)
    rational.sort()
    for fam in pts.families:
        if fam.primitive not in VARS:
            raise ConsistencyError(
                f"family primitive {fam.primitive!r} is not a coordinate")
        ext = ext_field(instance.prime, fam.min_poly)
        theta = ext.gen()
        values = {nm: sum((ext(c) * theta ** i for i, c in enumerate(fam.exprs[nm])),
                          ext.zero())
                  for nm in VARS}
        for g in gens:
            if _evaluate_ext(g, values, ext):
                raise ConsistencyError(
                    f"family {fam!r} does not satisfy the generators")
    sol = SolutionSet(instance, count, rational, list(pts.families))
    sol.orbits = stabilizer_orbits(sol)
    return sol


def geometric_points(sol: SolutionSet):
    """All IN_T geometric points embedded in one splitting field
    F_p[x]/(irreducible of degree lcm of the family degrees); rational
    points are embedded as constants.  Returns (points, ext)."""
    p = sol.instance.prime
    degs = [f.degree for f in sol.families]
    if not degs:
        return [tuple(v for v in pt) for pt in sol.rational], None
    lcm = 1
    for d in degs:
        lcm = lcm * d // _gcd(lcm, d)
    rng = random.Random(derive_seed("splitting", p, lcm))
    ext = ext_field(p, tuple(upoly.random_irreducible(lcm, p, rng)))
    points = [tuple(ext(v) for v in pt) for pt in sol.rational]
    for fam in sol.families:
        roots = upoly.roots_in_field(list(fam.min_poly), ext, rng)
        if len(roots) != fam.degree:
            raise ConsistencyError("minimal polynomial did not split as expected")
        for theta in roots:
            coords = []
            for nm in VARS:
                cs = fam.exprs[nm]
                acc = ext.zero()
                power = ext.one()
                for c in cs:
                    acc = acc + power * int(c)
                    power = power * theta
                coords.append(acc)
            points.append(tuple(coords))
    if len(set(points)) != sol.count:
        raise ConsistencyError("geometric points are not distinct")
    return points, ext


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def stabilizer_orbits(sol: SolutionSet) -> list[list[int]]:
    """Orbits of the solution set under the pointwise stabiliser of the
    triple acting through zeta^{-1} as coordinate interchanges."""
    stab = [s for s in pointwise_stabilizer(sol.instance.labels)
            if not s.is_identity()]
    points, _ = geometric_points(sol)
    if not stab or not points:
        return [[i] for i in range(len(points))]
    index = {pt: i for i, pt in enumerate(points)}
    moves = []
    for sigma in stab:
        letter_perm = zeta_inv(sigma)
        moves.append(tuple(letter_perm(i) for i in range(6)))
    orbits = []
    seen = set()
    for i, pt in enumerate(points):
        if i in seen:
            continue
        orbit = {i}
        frontier = [pt]
        while frontier:
            cur = frontier.pop()
            for mv in moves:
                nxt = tuple(cur[mv[j]] for j in range(6))
                k = index.get(nxt)
                if k is None:
                    raise ConsistencyError(
                        "solution set is not closed under the stabiliser")
                if k not in orbit:
                    orbit.add(k)
                    frontier.append(nxt)
        seen |= orbit
        orbits.append(sorted(orbit))
    return orbits


# ---------------------------------------------------------------------------
# Brute-force oracle: exact p^4 scan over the 4-parameter chart
# ---------------------------------------------------------------------------

def brute_force_count(instance: TripleInstance,
                      chunk_elements: int = 1_000_000) -> list[tuple[int, ...]]:
    """All F_p-rational hexads satisfying the three constraints, found
    by enumerating the (a, b, c, f) chart of the k(1,23) constraint and
    checking the other two exactly.  Independent of the Groebner path.
    """
    p = instance.prime
    if p > 257:
        raise UsageError(f"p = {p} is too large for the p^4 scan")
    try:
        i123 = instance.labels.index(K123)
    except ValueError:
        raise UsageError("the scan needs k(1,23) among the labels") from None
    l1 = instance.lines[i123]
    others = [(lab, ln) for j, (lab, ln) in enumerate(instance.pairs) if j != i123]

    inv = np.zeros(p, dtype=np.int64)
    for v in range(1, p):
        inv[v] = pow(v, p - 2, p)

    coords_polys = [pascal_coords(p, lab) for lab, _ in others]
    # the sparsest minor of the first extra constraint prunes the full
    # grid; everything else runs on the few survivors
    first_minors = sorted(constraint_minors(p, *others[0]),
                          key=lambda q: len(q.terms))
    sieve = first_minors[0]
    survivors: list[tuple[int, ...]] = []
    grid = np.arange(p, dtype=np.int64)
    bs = max(1, min(p, chunk_elements // (p * p)))

    for a in range(p):
        a2 = a * a % p
        for b0 in range(0, p, bs):
            bb, cc, ff = np.meshgrid(grid[b0:b0 + bs], grid, grid, indexing="ij")
            ok = (bb != cc) & (bb != ff) & (cc != ff) \
                & (bb != a) & (cc != a) & (ff != a)
            ee, ok = _second_point(a, a2, bb, ff, l1, p, inv, ok)
            dd, ok = _second_point(a, a2, cc, ff, l1, p, inv, ok)
            ok &= (ee != dd) & (dd != a) & (ee != a) & (dd != bb) & (dd != cc) \
                & (dd != ff) & (ee != bb) & (ee != cc) & (ee != ff)
            if not ok.any():
                continue
            arrays = {"a": np.broadcast_to(np.int64(a), bb.shape), "b": bb,
                      "c": cc, "d": dd, "e": ee, "f": ff}
            ok &= sieve.evaluate_batch(arrays) == 0
            idx = np.nonzero(ok)
            if idx[0].size == 0:
                continue
            few = {"a": np.full(idx[0].size, a, dtype=np.int64),
                   "b": bb[idx], "c": cc[idx], "d": dd[idx], "e": ee[idx],
                   "f": ff[idx]}
            keep = np.ones(idx[0].size, dtype=bool)
            for (lab, ln), polys in zip(others, coords_polys):
                u = [q.evaluate_batch(few) for q in polys]
                keep &= (u[0] | u[1] | u[2]) != 0
                keep &= (u[0] * ln[1] - u[1] * ln[0]) % p == 0
                keep &= (u[0] * ln[2] - u[2] * ln[0]) % p == 0
                keep &= (u[1] * ln[2] - u[2] * ln[1]) % p == 0
            for t in range(idx[0].size):
                if keep[t]:
                    survivors.append((a, int(few["b"][t]), int(few["c"][t]),
                                      int(few["d"][t]), int(few["e"][t]),
                                      int(few["f"][t])))
    return sorted(_verify_hexads(instance, survivors))


def _second_point(a, a2, xx, ff, l1, p, inv, ok):
    """Vectorised: the second conic parameter of the line joining tau(a)
    to (chord(x,f) meet l1); invalid positions are masked out."""
    ch0 = xx * ff % p
    ch1 = (-(xx + ff)) % p
    q0 = (ch1 * l1[2] - 1 * l1[1]) % p
    q1 = (1 * l1[0] - ch0 * l1[2]) % p
    q2 = (ch0 * l1[1] - ch1 * l1[0]) % p
    ok = ok & ((q0 | q1 | q2) != 0)
    # join tau(a) = (1, a, a^2) with q; e = -L1/L2 - a (Vieta)
    L1 = (a2 * q0 - q2) % p
    L2 = (q1 - a * q0) % p
    ok = ok & (L2 != 0)
    e = (-(L1 + a * L2) % p) * inv[L2] % p
    return e, ok


def _verify_hexads(instance: TripleInstance, candidates) -> list[tuple[int, ...]]:
    """Exact scalar re-verification of every scan survivor."""
    p = instance.prime
    out = []
    for tup in candidates:
        if len(set(tup)) != 6:
            raise ConsistencyError(f"scan produced a degenerate tuple {tup}")
        asg = dict(zip(VARS, tup))
        for lab, ln in instance.pairs:
            u = [int(q.evaluate(asg)) for q in pascal_coords(p, lab)]
            if u == [0, 0, 0]:
                raise ConsistencyError(f"undefined pascal at {tup}")
            if ((u[0] * ln[1] - u[1] * ln[0]) % p
                    or (u[0] * ln[2] - u[2] * ln[0]) % p
                    or (u[1] * ln[2] - u[2] * ln[1]) % p):
                raise ConsistencyError(f"scan survivor {tup} fails {lab!r}")
        out.append(tup)
    return out


# ---------------------------------------------------------------------------
# Optional 4-parameter compute path
# ---------------------------------------------------------------------------

RING4_VARS = ("a", "b", "c", "f")


def _ring4(p: int) -> PolyRing:
    return ring_cache(p, RING4_VARS, "degrevlex")


def _cross_polys(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def parametrized_data(instance: TripleInstance):
    """Symbolic d, e as fractions of (a,b,c,f) along the k(1,23)
    construction, the cleared 6 minors of the other two constraints,
    and the denominators; everything in the 4-variable ring."""
    p = instance.prime
    try:
        i123 = instance.labels.index(K123)
    except ValueError:
        raise UsageError("the 4-variable path needs k(1,23) among the labels") from None
    r4 = _ring4(p)
    a, b, c, f = (r4.var(n) for n in RING4_VARS)
    one = r4.one()
    l1 = tuple(r4.const(x) for x in instance.lines[i123])
    q1 = _cross_polys((b * f, -(b + f), one), l1)
    q2 = _cross_polys((c * f, -(c + f), one), l1)
    tau_a = (one, a, a * a)
    le = _cross_polys(tau_a, q1)
    ld = _cross_polys(tau_a, q2)
    e_num, e_den = -(le[1] + a * le[2]), le[2]
    d_num, d_den = -(ld[1] + a * ld[2]), ld[2]

    def cleared(label, line):
        """Minors of the label's coordinates with d, e replaced by their
        fractions and the common denominator d_den*e_den cleared (the
        coordinates are multilinear in every letter)."""
        ring6 = hexad_ring(p)
        base = {"a": a, "b": b, "c": c, "f": f}
        u_cleared = []
        for u in pascal_coords(p, label):
            acc = r4.zero()
            for k, coeff in u.terms.items():
                exps = ring6.exps(k)
                t = r4.const(coeff)
                for j, e in enumerate(exps):
                    if not e:
                        continue
                    nm = ring6.names[j]
                    if nm == "d":
                        t = t * d_num ** e
                    elif nm == "e":
                        t = t * e_num ** e
                    else:
                        t = t * base[nm] ** e
                de, ee = exps[3], exps[4]
                t = t * d_den ** (1 - de) * e_den ** (1 - ee)
                acc = acc + t
            u_cleared.append(acc)
        a0, a1, a2 = (int(x) % p for x in line)
        return [u_cleared[0] * a1 - u_cleared[1] * a0,
                u_cleared[0] * a2 - u_cleared[2] * a0,
                u_cleared[1] * a2 - u_cleared[2] * a1]

    gens = []
    for j, (lab, ln) in enumerate(instance.pairs):
        if j != i123:
            gens.extend(cleared(lab, ln))
    exprs = {"d": (d_num, d_den), "e": (e_num, e_den)}
    saturators = [d_den, e_den]
    for x, y in itertools.combinations(RING4_VARS, 2):
        saturators.append(r4.var(x) - r4.var(y))
    for x in RING4_VARS:
        saturators.append(r4.var(x) * d_den - d_num)
        saturators.append(r4.var(x) * e_den - e_num)
    saturators.append(d_num * e_den - e_num * d_den)
    return Ideal(r4, tuple(gens)), saturators, exprs


def parametrized_count(instance: TripleInstance, trace=None) -> int:
    """IN_T through the 4-parameter chart (must agree with the default
    6-variable pipeline)."""
    ideal4, saturators, _ = parametrized_data(instance)
    gb = buchberger(ideal4, trace=trace)
    rng = random.Random(derive_seed("crosscheck4", triple_str(instance.labels),
                                    instance.prime, instance.seed))
    count, _ = saturate_and_count(gb, saturators, saturators, rng, trace=trace)
    return count
