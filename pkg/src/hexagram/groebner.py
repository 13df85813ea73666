"""Buchberger-based Groebner engine over prime fields.

Provides ideal construction, normal forms, reduced Groebner bases
(Gebauer-Moller pair elimination, sugar selection), elimination,
saturation, zero-dimensionality tests, quotient-ring linear algebra
(standard monomials, multiplication matrices, minimal polynomials),
zero-dimensional radicals and point extraction.

Saturation I : g^oo is computed by the auxiliary-variable elimination
``eliminate(I + <t*g - 1>, {t})`` in general; once an ideal is already
zero-dimensional the same ideal is obtained much faster as
``I + lift(ker M_g^D)`` inside the finite-dimensional quotient, and the
engine switches to that route automatically.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field

import numpy as np

from . import upoly
from .errors import ConsistencyError, NotZeroDimensionalError, UsageError
from .modmat import mat_pow_mod, matmul_mod, nullspace_mod, solve_mod
from .polynomials import Polynomial, PolyRing, map_to_ring, ring_cache


@dataclass(frozen=True)
class Ideal:
    """An ideal given by generators in a common ring.

    The zero ideal is represented by an empty generator tuple (the one
    case where emptiness is meaningful: elimination can produce it).
    """

    ring: PolyRing
    generators: tuple[Polynomial, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.ring != self.ring:
                raise UsageError("generator from a different ring")
        object.__setattr__(
            self, "generators", tuple(g for g in self.generators if not g.is_zero()))

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise UsageError("ideal sum across different rings")
        return Ideal(self.ring, self.generators + other.generators)


def ideal(ring: PolyRing, *gens: Polynomial) -> Ideal:
    return Ideal(ring, tuple(gens))


# ---------------------------------------------------------------------------
# Core reduction / Buchberger machinery (dict representation)
# ---------------------------------------------------------------------------

def _monic_dict(ring: PolyRing, d: dict[int, int]) -> dict[int, int]:
    lm = max(d)
    c = d[lm]
    if c == 1:
        return dict(d)
    p = ring.p
    inv = pow(c, p - 2, p)
    return {k: v * inv % p for k, v in d.items()}


def _reduce_dict(ring: PolyRing, fdict, lms, tails, sugars=None, sugar0=0):
    """Full normal form of fdict against the monic divisors (lms, tails).

    tails[i] lists the non-leading terms of divisor i.  Returns a new
    dict; no term of the result is divisible by any element of lms.
    When `sugars` is given, the (phantom homogenisation) sugar degree of
    the result is tracked from sugar0 and returned alongside it.
    """
    p = ring.p
    off = ring.one_key
    guard = ring.guard
    out: dict[int, int] = {}
    work = dict(fdict)
    heap = [-k for k in work]
    heapq.heapify(heap)
    heappush, heappop = heapq.heappush, heapq.heappop
    nred = len(lms)
    work_get = work.get
    work_pop = work.pop
    sugar = sugar0
    while heap:
        k = -heappop(heap)
        c = work_pop(k, 0)
        if not c:
            continue
        red = -1
        for i in range(nred):
            q = k - lms[i] + off
            if q >= 0 and not (q & guard):
                red = i
                break
        if red < 0:
            out[k] = c
            continue
        shift = k - lms[red]
        if sugars is not None:
            s = sugars[red] + ring.key_degree(k - lms[red] + off)
            if s > sugar:
                sugar = s
        for mk, mc in tails[red]:
            nk = mk + shift
            v = work_get(nk)
            if v is None:
                nv = -c * mc % p
                if nv:
                    work[nk] = nv
                    heappush(heap, -nk)
            else:
                nv = (v - c * mc) % p
                if nv:
                    work[nk] = nv
                else:
                    del work[nk]
    if sugars is not None:
        return out, sugar
    return out


def _spoly_dict(ring, lm_i, tail_i, lm_j, tail_j) -> dict[int, int]:
    """S-polynomial of two monic divisors; leading terms cancel."""
    p = ring.p
    lcm = ring.lcm_key(lm_i, lm_j)
    si = lcm - lm_i
    sj = lcm - lm_j
    d: dict[int, int] = {}
    for mk, mc in tail_i:
        d[mk + si] = mc
    for mk, mc in tail_j:
        k = mk + sj
        v = (d.get(k, 0) - mc) % p
        if v:
            d[k] = v
        else:
            d.pop(k, None)
    return d


class _Engine:
    """One Buchberger run; holds the growing basis and the pair queue.

    Pair selection follows the sugar strategy (phantom-homogenisation
    degree first, ties by lcm), which measures several times faster than
    plain lcm-order selection on these inhomogeneous minor ideals.  All
    basis elements stay available as reducers: redundant ones carry
    already-performed reduction chains and retiring them measurably
    lengthens reductions.
    """

    def __init__(self, ring: PolyRing, trace=None, strategy: str = "sugar",
                 gb_prefix: int = 0):
        self.ring = ring
        self.strategy = strategy
        self.gb_prefix = gb_prefix   # the first elements form a known basis
        self.lms: list[int] = []
        self.tails: list[list[tuple[int, int]]] = []
        self.sugars: list[int] = []
        self.pairs: dict[tuple[int, int], int] = {}   # (i, j) -> lcm key
        self.heap: list[tuple[int, int, int, int, int]] = []
        self.trace = trace
        self.reductions = 0
        self.zero_reductions = 0

    def add(self, hdict: dict[int, int], sugar: int):
        """Gebauer-Moller update with the (monic, reduced) new element."""
        ring = self.ring
        t = len(self.lms)
        lt = max(hdict)
        # pairs inside the known-basis prefix reduce to zero by assumption
        lo = self.gb_prefix if t < self.gb_prefix else 0
        # candidate new pairs, sorted by lcm so proper divisors come first
        cands = sorted((ring.lcm_key(self.lms[i], lt), i) for i in range(lo, t))
        kept: list[tuple[int, int]] = []
        for lc, i in cands:
            if any(klc != lc and ring.divides(klc, lc) for klc, _ in kept):
                continue
            kept.append((lc, i))
        # one representative per lcm value; drop classes containing a
        # coprime pair (its S-polynomial reduces to zero)
        by_lcm: dict[int, list[int]] = {}
        for lc, i in kept:
            by_lcm.setdefault(lc, []).append(i)
        prod_off = ring.one_key
        for lc, members in by_lcm.items():
            if any(lc == self.lms[i] + lt - prod_off for i in members):
                continue
            i = members[0]
            self.pairs[(i, t)] = lc
            d = ring.key_degree(lc)
            pair_sugar = max(self.sugars[i] + d - ring.key_degree(self.lms[i]),
                             sugar + d - ring.key_degree(lt))
            rank = pair_sugar if self.strategy == "sugar" else 0
            heapq.heappush(self.heap, (rank, lc, i, t, pair_sugar))
        # Buchberger's chain criterion on the old pairs
        for (i, j), lc in list(self.pairs.items()):
            if j == t:
                continue
            if ring.divides(lt, lc):
                if (ring.lcm_key(self.lms[i], lt) != lc
                        and ring.lcm_key(self.lms[j], lt) != lc):
                    del self.pairs[(i, j)]
        items = sorted(hdict.items(), reverse=True)
        self.lms.append(lt)
        self.tails.append(items[1:])
        self.sugars.append(sugar)

    def run(self):
        ring = self.ring
        processed = 0
        while self.heap:
            _, lc, i, j, pair_sugar = heapq.heappop(self.heap)
            if self.pairs.get((i, j)) != lc:
                continue
            del self.pairs[(i, j)]
            s = _spoly_dict(ring, self.lms[i], self.tails[i],
                            self.lms[j], self.tails[j])
            if self.strategy == "sugar":
                r, sugar = _reduce_dict(ring, s, self.lms, self.tails,
                                        sugars=self.sugars, sugar0=pair_sugar)
            else:
                r = _reduce_dict(ring, s, self.lms, self.tails)
                sugar = 0
            self.reductions += 1
            processed += 1
            if r:
                self.add(_monic_dict(ring, r), sugar)
            else:
                self.zero_reductions += 1
            if self.trace and processed % 50 == 0:
                self.trace({
                    "pairs_left": len(self.pairs),
                    "pairs_done": processed,
                    "basis": len(self.lms),
                    "max_degree": max(ring.key_degree(k) for k in self.lms),
                })

    def full_polys(self) -> list[dict[int, int]]:
        out = []
        for lm, tail in zip(self.lms, self.tails):
            d = dict(tail)
            d[lm] = 1
            out.append(d)
        return out


def _interreduce(ring: PolyRing, dicts: list[dict[int, int]]) -> list[dict[int, int]]:
    """Prune to the lm-minimal subset, then tail-reduce to the unique
    reduced basis (leading coefficients 1, sorted by leading monomial)."""
    dicts = [d for d in dicts if d]
    order = sorted(range(len(dicts)), key=lambda i: max(dicts[i]))
    kept: list[int] = []
    for i in order:
        lm = max(dicts[i])
        if not any(ring.divides(max(dicts[j]), lm) for j in kept):
            kept.append(i)
    polys = [_monic_dict(ring, dicts[i]) for i in kept]
    changed = True
    while changed:
        changed = False
        for i in range(len(polys)):
            lms = [max(polys[j]) for j in range(len(polys)) if j != i]
            tails = [sorted(polys[j].items(), reverse=True)[1:]
                     for j in range(len(polys)) if j != i]
            r = _reduce_dict(ring, polys[i], lms, tails)
            r = _monic_dict(ring, r) if r else r
            if r != polys[i]:
                polys[i] = r
                changed = True
        polys = [d for d in polys if d]
    polys.sort(key=max)
    return polys


def _buchberger_core(ring: PolyRing, gen_dicts, trace=None,
                     strategy: str = "sugar",
                     gb_prefix: int = 0) -> list[dict[int, int]]:
    """Reduced basis of the ideal the generators span.

    When gb_prefix > 0 the first gb_prefix generators are promised to be
    a reduced Groebner basis already (same ring and order); pairs inside
    that block are skipped -- their S-polynomials reduce to zero.
    """
    eng = _Engine(ring, trace=trace, strategy=strategy, gb_prefix=gb_prefix)
    prefix = [d for d in gen_dicts[:gb_prefix]]
    rest = [d for d in gen_dicts[gb_prefix:] if d]
    rest.sort(key=max)
    for d in prefix:
        eng.add(dict(d), max(ring.key_degree(k) for k in d))
    for d in rest:
        if strategy == "sugar":
            sugar0 = max(ring.key_degree(k) for k in d)
            r, sugar = _reduce_dict(ring, d, eng.lms, eng.tails,
                                    sugars=eng.sugars, sugar0=sugar0)
        else:
            r = _reduce_dict(ring, d, eng.lms, eng.tails)
            sugar = 0
        if r:
            eng.add(_monic_dict(ring, r), sugar)
    eng.run()
    if trace:
        trace({"done": True, "basis": len(eng.lms),
               "reductions": eng.reductions,
               "zero_reductions": eng.zero_reductions})
    return _interreduce(ring, eng.full_polys())


# ---------------------------------------------------------------------------
# Public Groebner objects
# ---------------------------------------------------------------------------

class GroebnerBasis:
    """A reduced Groebner basis: monic, interreduced, sorted by leading
    monomial.  Unique for (ideal, order)."""

    def __init__(self, ring: PolyRing, polys: tuple[Polynomial, ...]):
        self.ring = ring
        self.polys = polys
        self._lms = [f.lead_key() for f in polys]
        self._tails = [sorted(f.terms.items(), reverse=True)[1:] for f in polys]
        self._quotient: QuotientAlgebra | None = None

    @classmethod
    def _from_core(cls, ring: PolyRing, dicts) -> "GroebnerBasis":
        return cls(ring, tuple(Polynomial(ring, d) for d in dicts))

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and self.ring == other.ring
                and self.polys == other.polys)

    def __hash__(self):
        return hash((self.ring, self.polys))

    def __repr__(self):
        return f"GroebnerBasis({len(self.polys)} elements, {self.ring!r})"

    def reduce(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise UsageError("polynomial from a different ring/order")
        return Polynomial(self.ring,
                          _reduce_dict(self.ring, f.terms, self._lms, self._tails))

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def is_unit(self) -> bool:
        return len(self.polys) == 1 and self._lms[0] == self.ring.one_key

    def lead_exponents(self) -> list[tuple[int, ...]]:
        return [self.ring.exps(k) for k in self._lms]

    def is_zero_dimensional(self) -> bool:
        if not self.polys:
            return self.ring.n == 0
        if self.is_unit():
            return True
        covered = [False] * self.ring.n
        for exps in self.lead_exponents():
            nz = [j for j, e in enumerate(exps) if e]
            if len(nz) == 1:
                covered[nz[0]] = True
        return all(covered)

    def standard_monomials(self, cap: int = 1 << 20) -> list[int]:
        """Monomial keys under the leading-term staircase, sorted."""
        if not self.is_zero_dimensional():
            raise NotZeroDimensionalError(
                "standard monomials requested for a non-zero-dimensional ideal")
        ring = self.ring
        one = ring.one_key
        lms = self._lms
        if self.is_unit():
            return []
        std = {one}
        frontier = [one]
        while frontier:
            nxt = []
            for m in frontier:
                for j in range(ring.n):
                    m2 = m + ring.mult[j]
                    if m2 in std:
                        continue
                    if any(ring.divides(lk, m2) for lk in lms):
                        continue
                    std.add(m2)
                    if len(std) > cap:
                        raise NotZeroDimensionalError(
                            "standard monomial count exceeded the cap")
                    nxt.append(m2)
            frontier = nxt
        return sorted(std)

    def quotient_dimension(self) -> int:
        """dim_Fp R/I = number of standard monomials (the ideal's degree
        when zero-dimensional)."""
        return len(self.standard_monomials())

    def quotient(self) -> "QuotientAlgebra":
        if self._quotient is None:
            self._quotient = QuotientAlgebra(self)
        return self._quotient


def buchberger(src: Ideal | GroebnerBasis, order=None, trace=None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal w.r.t. its ring order, or a
    different order when requested."""
    ring = src.ring
    gens = src.generators if isinstance(src, Ideal) else src.polys
    if order is not None and order != ring.order:
        dst = ring.twin(order)
        gens = tuple(map_to_ring(g, dst) for g in gens)
        ring = dst
    core = _buchberger_core(ring, [g.terms for g in gens], trace=trace)
    return GroebnerBasis._from_core(ring, core)


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """The unique remainder of f modulo gb (no term divisible by any
    leading term; f - result lies in the ideal)."""
    return gb.reduce(f)


# ---------------------------------------------------------------------------
# Elimination and saturation
# ---------------------------------------------------------------------------

def _fresh_name(ring: PolyRing, stem: str = "t") -> str:
    i = 0
    while f"{stem}{i}" in ring.index:
        i += 1
    return f"{stem}{i}"


def eliminate(src: Ideal | GroebnerBasis, vars_out, trace=None) -> Ideal:
    """Generators of I intersected with the subring omitting vars_out."""
    ring = src.ring
    out = tuple(v for v in ring.names if v in set(vars_out))
    keep = tuple(v for v in ring.names if v not in set(vars_out))
    if not out:
        gens = src.generators if isinstance(src, Ideal) else src.polys
        return Ideal(ring, gens)
    if not keep:
        raise UsageError("cannot eliminate every variable")
    block = ring_cache(ring.p, out + keep, ("block", len(out)))
    gens = src.generators if isinstance(src, Ideal) else src.polys
    up = [map_to_ring(g, block) for g in gens]
    core = _buchberger_core(block, [g.terms for g in up], trace=trace)
    sub = ring_cache(ring.p, keep, "degrevlex")
    kept = []
    for d in core:
        lm_exps = block.exps(max(d))
        if all(lm_exps[j] == 0 for j in range(len(out))):
            kept.append(map_to_ring(Polynomial(block, d), sub))
    return Ideal(sub, tuple(kept))


def _saturate_by_elimination(gb: GroebnerBasis, g: Polynomial,
                             trace=None) -> GroebnerBasis:
    ring = gb.ring
    t = _fresh_name(ring)
    block = ring.extend_front((t,))
    up = [map_to_ring(f, block).terms for f in gb.polys]
    up.append((map_to_ring(g, block) * block.var(t) - 1).terms)
    # the mapped polynomials are still a reduced basis: on t-free
    # monomials the block order restricts to the original degrevlex
    core = _buchberger_core(block, up, trace=trace, gb_prefix=len(gb.polys))
    kept = []
    for d in core:
        if block.exps(max(d))[0] == 0:
            kept.append(map_to_ring(Polynomial(block, d), ring).terms)
    # the t-free part of a block-order basis is already a reduced basis
    # for the restricted (degrevlex) order
    return GroebnerBasis._from_core(ring, sorted(kept, key=max))


def _saturate_zero_dim(gb: GroebnerBasis, g: Polynomial) -> GroebnerBasis:
    quot = gb.quotient()
    D = quot.dim
    if D == 0:
        return gb
    p = gb.ring.p
    M = quot.matrix_of(g.terms)
    B = mat_pow_mod(M, D, p)
    kernel = nullspace_mod(B, p)
    if kernel.shape[0] == 0:
        return gb
    extra = [quot.vector_to_dict(row) for row in kernel]
    core = _buchberger_core(gb.ring, [f.terms for f in gb.polys] + extra,
                            gb_prefix=len(gb.polys))
    return GroebnerBasis._from_core(gb.ring, core)


def saturate_gb(gb: GroebnerBasis, g: Polynomial, trace=None) -> GroebnerBasis:
    """Reduced basis of I : g^oo."""
    if g.ring != gb.ring:
        raise UsageError("saturating polynomial from a different ring")
    if g.is_zero():
        raise UsageError("saturation by zero")
    if g.lead_key() == gb.ring.one_key:   # unit: I : u^oo = I
        return gb
    if gb.is_unit():
        return gb
    if gb.is_zero_dimensional():
        return _saturate_zero_dim(gb, g)
    return _saturate_by_elimination(gb, g, trace=trace)


def saturate(src: Ideal | GroebnerBasis, g: Polynomial, trace=None) -> Ideal:
    gb = src if isinstance(src, GroebnerBasis) else buchberger(src, trace=trace)
    out = saturate_gb(gb, g, trace=trace)
    return Ideal(out.ring, out.polys)


# ---------------------------------------------------------------------------
# Zero-dimensional quotient algebra
# ---------------------------------------------------------------------------

class QuotientAlgebra:
    """Linear algebra in A = R/I for a zero-dimensional ideal: standard
    monomial basis, multiplication matrices, minimal polynomials."""

    def __init__(self, gb: GroebnerBasis):
        self.gb = gb
        self.ring = gb.ring
        self.p = gb.ring.p
        self.std = gb.standard_monomials()
        self.dim = len(self.std)
        self.index = {m: i for i, m in enumerate(self.std)}
        self._var_mats: dict[int, np.ndarray] = {}

    def nf_vector(self, fdict: dict[int, int]) -> np.ndarray:
        r = _reduce_dict(self.ring, fdict, self.gb._lms, self.gb._tails)
        v = np.zeros(self.dim, dtype=np.int64)
        for k, c in r.items():
            v[self.index[k]] = c
        return v

    def vector_to_dict(self, vec) -> dict[int, int]:
        return {self.std[i]: int(c) % self.p
                for i, c in enumerate(vec) if int(c) % self.p}

    def var_matrix(self, j: int) -> np.ndarray:
        m = self._var_mats.get(j)
        if m is None:
            m = np.zeros((self.dim, self.dim), dtype=np.int64)
            mult = self.ring.mult[j]
            for i, s in enumerate(self.std):
                k = s + mult
                if k in self.index:
                    m[self.index[k], i] = 1
                else:
                    m[:, i] = self.nf_vector({k: 1})
            self._var_mats[j] = m
        return m

    def matrix_of(self, fdict: dict[int, int]) -> np.ndarray:
        """Multiplication-by-f matrix on the standard basis."""
        one = self.ring.one_key
        m = np.zeros((self.dim, self.dim), dtype=np.int64)
        const = fdict.get(one, 0)
        if const:
            np.fill_diagonal(m, const)
        rest = {k: c for k, c in fdict.items() if k != one}
        if not rest:
            return m
        # linear parts combine cached variable matrices; anything else
        # multiplies through the basis directly
        linear = all(self.ring.key_degree(k) == 1 for k in rest)
        if linear:
            for k, c in rest.items():
                exps = self.ring.exps(k)
                j = next(i for i, e in enumerate(exps) if e)
                m = (m + c * self.var_matrix(j)) % self.p
            return m
        for i, s in enumerate(self.std):
            shifted = {k + s - self.ring.one_key: c for k, c in fdict.items()}
            m[:, i] = self.nf_vector(shifted)
        return m

    def minimal_polynomial(self, fdict: dict[int, int]) -> list[int]:
        """Monic minimal polynomial of the residue class of f, via the
        Krylov sequence of 1 (correct in a commutative quotient)."""
        p = self.p
        if self.dim == 0:
            return [1]
        M = self.matrix_of(fdict)
        one_idx = self.index[self.ring.one_key]
        w = np.zeros(self.dim, dtype=np.int64)
        w[one_idx] = 1
        rows: list[tuple[int, np.ndarray, list[int]]] = []
        k = 0
        while True:
            r = w.copy()
            comb = [0] * k + [1]
            for piv, row, rc in rows:
                c = int(r[piv])
                if c:
                    r = (r - c * row) % p
                    for i, x in enumerate(rc):
                        comb[i] = (comb[i] - c * x) % p
            nz = np.nonzero(r)[0]
            if nz.size == 0:
                return upoly.trim(comb)
            piv = int(nz[0])
            inv = pow(int(r[piv]), p - 2, p)
            r = r * inv % p
            rows.append((piv, r, [c * inv % p for c in comb]))
            w = matmul_mod(M, w.reshape(-1, 1), p).ravel()
            k += 1
            if k > self.dim + 1:
                raise ConsistencyError("minimal polynomial iteration overran")

    def power_basis(self, fdict: dict[int, int]) -> np.ndarray:
        """Columns = coordinates of 1, f, f^2, ..., f^(D-1)."""
        p = self.p
        M = self.matrix_of(fdict)
        cols = np.zeros((self.dim, self.dim), dtype=np.int64)
        w = np.zeros(self.dim, dtype=np.int64)
        w[self.index[self.ring.one_key]] = 1
        for i in range(self.dim):
            cols[:, i] = w
            if i + 1 < self.dim:
                w = matmul_mod(M, w.reshape(-1, 1), p).ravel()
        return cols


def is_zero_dimensional(gb: GroebnerBasis) -> bool:
    return gb.is_zero_dimensional()


def quotient_dimension(gb: GroebnerBasis) -> int:
    return gb.quotient_dimension()


def minimal_polynomial(gb: GroebnerBasis, linform: Polynomial,
                       var_name: str = "x") -> Polynomial:
    """Least-degree monic univariate m with m(linform) in the ideal,
    returned in a fresh univariate ring on `var_name`."""
    if linform.ring != gb.ring:
        raise UsageError("linear form from a different ring")
    coeffs = gb.quotient().minimal_polynomial(linform.terms)
    out_ring = ring_cache(gb.ring.p, (var_name,), "lex")
    return out_ring.univariate(coeffs, var_name)


# ---------------------------------------------------------------------------
# Zero-dimensional radical (Seidenberg: squarefree minimal polynomials)
# ---------------------------------------------------------------------------

def radical_gb(gb: GroebnerBasis, trace=None) -> GroebnerBasis:
    """Radical of a zero-dimensional ideal.

    Adds the squarefree part of the minimal polynomial of every
    variable; over a perfect base field (F_p, degrees < p) the result
    is the radical.
    """
    if not gb.is_zero_dimensional():
        raise NotZeroDimensionalError("radical_zero_dim needs a zero-dimensional ideal")
    if gb.is_unit() or gb.quotient_dimension() == 0:
        return gb
    quot = gb.quotient()
    extra = []
    for j, name in enumerate(gb.ring.names):
        m = quot.minimal_polynomial({gb.ring.var_key(j): 1})
        s = upoly.squarefree_part(m, gb.ring.p)
        if s != m:
            extra.append(gb.ring.univariate(s, name).terms)
    if not extra:
        return gb
    core = _buchberger_core(gb.ring, [f.terms for f in gb.polys] + extra,
                            trace=trace, gb_prefix=len(gb.polys))
    return GroebnerBasis._from_core(gb.ring, core)


def radical_zero_dim(src: Ideal | GroebnerBasis) -> Ideal:
    gb = src if isinstance(src, GroebnerBasis) else buchberger(src)
    out = radical_gb(gb)
    return Ideal(out.ring, out.polys)


# ---------------------------------------------------------------------------
# Point extraction for zero-dimensional radical ideals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtensionFamily:
    """A Galois orbit of solutions of degree >= 2, written as polynomial
    expressions in a primitive element.

    min_poly is the monic minimal polynomial (ascending coefficients) of
    the primitive element; exprs give every coordinate as a polynomial
    of degree < deg(min_poly) in it (coefficient tuples, ascending).
    """

    primitive: str
    min_poly: tuple[int, ...]
    exprs: dict[str, tuple[int, ...]] = field(compare=False)

    @property
    def degree(self) -> int:
        return len(self.min_poly) - 1

    def key(self):
        return (self.min_poly, tuple(sorted(self.exprs.items())))

    def __repr__(self):
        return (f"ExtensionFamily({self.primitive} root of "
                f"{list(self.min_poly)}, degree {self.degree})")


@dataclass
class PointSolutions:
    """Output of point extraction: F_p-rational points plus extension
    families.  Rational points are name -> value dicts."""

    rational: list[dict[str, int]]
    families: list[ExtensionFamily]

    def total_degree(self) -> int:
        return len(self.rational) + sum(f.degree for f in self.families)


def _candidate_forms(ring: PolyRing, rng: random.Random):
    for name in ring.names:
        yield ring.var(name), name
    for _ in range(8):
        coeffs = [rng.randrange(ring.p) for _ in range(ring.n)]
        if not any(coeffs):
            continue
        f = ring.zero()
        for c, name in zip(coeffs, ring.names):
            f = f + ring.var(name) * c
        yield f, f.render()


def rational_points(gb: GroebnerBasis, rng: random.Random | None = None,
                    _depth: int = 0) -> PointSolutions:
    """All points of V(I) for a zero-dimensional *radical* ideal:
    F_p-rational ones explicitly, conjugate orbits as extension families
    in a primitive element (shape position), splitting the ideal along
    factors of the best minimal polynomial when no primitive form exists.
    """
    rng = rng or random.Random(0x0ddba11)
    if not gb.is_zero_dimensional():
        raise NotZeroDimensionalError("point extraction needs a zero-dimensional ideal")
    quot = gb.quotient()
    D = quot.dim
    p = gb.ring.p
    if D == 0:
        return PointSolutions([], [])
    best: tuple[int, Polynomial, str, list[int]] | None = None
    for lam, label in _candidate_forms(gb.ring, rng):
        mu = quot.minimal_polynomial(lam.terms)
        if upoly.degree(mu) == D:
            return _extract_shape_position(gb, quot, lam, label, mu)
        if best is None or upoly.degree(mu) > best[0]:
            best = (upoly.degree(mu), lam, label, mu)
    # no primitive form: split along the factors of the best eliminant
    if _depth > 6:
        raise ConsistencyError("point extraction: splitting recursion overran")
    deg, lam, label, mu = best
    factors = upoly.factor_squarefree(mu, p)
    if len(factors) <= 1:
        raise ConsistencyError(
            f"point extraction failed: eliminant of degree {deg} < {D} is irreducible")
    out = PointSolutions([], [])
    for m in factors:
        piece = _buchberger_core(
            gb.ring,
            [f.terms for f in gb.polys] + [_poly_in_form(gb.ring, m, lam).terms],
            gb_prefix=len(gb.polys))
        sub = rational_points(GroebnerBasis._from_core(gb.ring, piece),
                              rng=rng, _depth=_depth + 1)
        out.rational.extend(sub.rational)
        out.families.extend(sub.families)
    return out


def _poly_in_form(ring: PolyRing, dense: list[int], lam: Polynomial) -> Polynomial:
    acc = ring.zero()
    power = ring.one()
    for c in dense:
        acc = acc + power * int(c)
        power = power * lam
    return acc


def _extract_shape_position(gb, quot, lam, label, mu) -> PointSolutions:
    p = gb.ring.p
    D = quot.dim
    P = quot.power_basis(lam.terms)
    coords = np.zeros((D, gb.ring.n), dtype=np.int64)
    for j in range(gb.ring.n):
        coords[:, j] = quot.nf_vector({gb.ring.var_key(j): 1})
    Q = solve_mod(P, coords, p)          # column j: var_j as a poly in lam
    exprs_dense = [upoly.trim([int(Q[i, j]) for i in range(D)])
                   for j in range(gb.ring.n)]
    rational: list[dict[str, int]] = []
    families: list[ExtensionFamily] = []
    for m in upoly.factor_squarefree(mu, p):
        if upoly.degree(m) == 1:
            root = (-m[0]) % p
            pt = {name: upoly.evaluate(exprs_dense[j], root, p)
                  for j, name in enumerate(gb.ring.names)}
            rational.append(pt)
        else:
            exprs = {}
            for j, name in enumerate(gb.ring.names):
                r = upoly.rem(exprs_dense[j], m, p)
                r = r + [0] * (upoly.degree(m) - len(r))
                exprs[name] = tuple(r)
            families.append(ExtensionFamily(
                primitive=label, min_poly=tuple(m), exprs=exprs))
    rational.sort(key=lambda d: tuple(d[nm] for nm in gb.ring.names))
    families.sort(key=lambda f: f.key())
    return PointSolutions(rational, families)
