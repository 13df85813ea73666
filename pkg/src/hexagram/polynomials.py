"""Sparse multivariate polynomials over a prime field, with fast packed
monomials and the monomial orders the Groebner engine needs.

Monomial encoding
-----------------
A monomial is stored as a single Python int ("key") composed of 16-bit
slots, laid out so that

* comparing two keys as integers realises the ring's monomial order,
* multiplying monomials is ``k1 + k2 - ring.one_key``,
* ``m1 | m2`` is ``q = k2 - k1 + ring.one_key; q >= 0 and not q & guard``
  (and ``q`` is then the key of the quotient monomial).

For degrevlex the slots hold the *complements* CAP - e_j (least variable
in the most significant slot) underneath a total-degree slot; for lex the
raw exponents sit with the greatest variable in the most significant
slot.  A block order stacks two degrevlex sections (elimination block on
top).  Exponents must stay below CAP = 2^15 - 1; the high bit of every
slot is a guard bit used by the divisibility test.

Polynomials are immutable dicts {key: coeff} with coefficients reduced
into [1, p).  A zero coefficient is never stored.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import upoly
from .errors import UsageError
from .fields import GF, FieldElement

W = 16
CAP = (1 << 15) - 1
_MASK = (1 << W) - 1


class PolyRing:
    """F_p[names] with a fixed monomial order.

    order is 'degrevlex', 'lex', or ('block', k): the first k variables
    form an elimination block (degrevlex inside each block).
    """

    def __init__(self, p: int, names, order="degrevlex"):
        self.p = p
        self.names = tuple(names)
        self.n = len(self.names)
        if len(set(self.names)) != self.n or self.n == 0:
            raise UsageError(f"bad variable names {self.names}")
        self.order = order
        self.index = {nm: j for j, nm in enumerate(self.names)}

        mult = [0] * self.n          # key contribution per unit exponent
        slots = []                   # (shift, complemented) per variable
        deg_shifts = []              # shifts of total-degree slots
        if order == "degrevlex":
            for j in range(self.n):
                mult[j] = (1 << (self.n * W)) - (1 << (j * W))
                slots.append((j * W, True))
            deg_shifts.append(self.n * W)
        elif order == "lex":
            for j in range(self.n):
                mult[j] = 1 << ((self.n - 1 - j) * W)
                slots.append(((self.n - 1 - j) * W, False))
        elif isinstance(order, tuple) and order[0] == "block":
            k = order[1]
            if not 0 < k < self.n:
                raise UsageError(f"block size {k} out of range")
            m = self.n - k
            base = (m + 1) * W
            for j in range(k):            # elimination block (on top)
                mult[j] = (1 << (base + k * W)) - (1 << (base + j * W))
                slots.append((base + j * W, True))
            for j in range(k, self.n):    # remaining block
                mult[j] = (1 << (m * W)) - (1 << ((j - k) * W))
                slots.append(((j - k) * W, True))
            deg_shifts.extend([base + k * W, m * W])
        else:
            raise UsageError(f"unknown monomial order {order!r}")

        self.mult = tuple(mult)
        self.slots = tuple(slots)
        self.deg_shifts = tuple(deg_shifts)
        self.one_key = sum(CAP << s for s, comp in slots if comp)
        guard = 0
        for s, _ in slots:
            guard |= 1 << (s + W - 1)
        for s in deg_shifts:
            guard |= 1 << (s + W - 1)
        self.guard = guard

    # -- monomial keys ----------------------------------------------------

    def key(self, exps) -> int:
        k = self.one_key
        for j, e in enumerate(exps):
            if e:
                if e > CAP:
                    raise UsageError(f"exponent {e} exceeds the packing bound")
                k += e * self.mult[j]
        return k

    def exps(self, key: int) -> tuple[int, ...]:
        out = []
        for s, comp in self.slots:
            v = (key >> s) & _MASK
            out.append(CAP - v if comp else v)
        return tuple(out)

    def key_degree(self, key: int) -> int:
        if self.deg_shifts:
            return sum((key >> s) & _MASK for s in self.deg_shifts)
        return sum(self.exps(key))

    def var_key(self, j: int) -> int:
        return self.one_key + self.mult[j]

    def divides(self, k1: int, k2: int) -> bool:
        q = k2 - k1 + self.one_key
        return q >= 0 and not (q & self.guard)

    def lcm_key(self, k1: int, k2: int) -> int:
        e1, e2 = self.exps(k1), self.exps(k2)
        return self.key(tuple(max(a, b) for a, b in zip(e1, e2)))

    # -- polynomial constructors ------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def const(self, c: int) -> "Polynomial":
        c = int(c) % self.p
        return Polynomial(self, {self.one_key: c} if c else {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def var(self, name: str) -> "Polynomial":
        if name not in self.index:
            raise UsageError(f"{name!r} is not a variable of {self!r}")
        return Polynomial(self, {self.var_key(self.index[name]): 1})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(nm) for nm in self.names)

    def from_terms(self, terms) -> "Polynomial":
        """terms: iterable of (coeff, exps) with exps a tuple per variable."""
        d: dict[int, int] = {}
        for c, exps in terms:
            c = int(c) % self.p
            if not c:
                continue
            k = self.key(exps)
            v = (d.get(k, 0) + c) % self.p
            if v:
                d[k] = v
            else:
                d.pop(k, None)
        return Polynomial(self, d)

    def univariate(self, coeffs, name: str) -> "Polynomial":
        """Build sum coeffs[i] * name^i."""
        j = self.index[name]
        d: dict[int, int] = {}
        for i, c in enumerate(coeffs):
            c = int(c) % self.p
            if c:
                d[self.one_key + i * self.mult[j]] = c
        return Polynomial(self, d)

    def random(self, rng, max_degree=3, terms=4) -> "Polynomial":
        out: dict[int, int] = {}
        for _ in range(terms):
            exps = [0] * self.n
            for _ in range(rng.randrange(max_degree + 1)):
                exps[rng.randrange(self.n)] += 1
            c = rng.randrange(self.p)
            if c:
                k = self.key(exps)
                v = (out.get(k, 0) + c) % self.p
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return Polynomial(self, out)

    # -- ring plumbing ------------------------------------------------------

    def twin(self, order) -> "PolyRing":
        return ring_cache(self.p, self.names, _hashable_order(order))

    def extend_front(self, new_names) -> "PolyRing":
        """Block ring with new_names as an elimination block in front."""
        k = len(tuple(new_names))
        return ring_cache(self.p, tuple(new_names) + self.names, ("block", k))

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and other.p == self.p
                and other.names == self.names and other.order == self.order)

    def __hash__(self):
        return hash((self.p, self.names, _hashable_order(self.order)))

    def __repr__(self):
        return f"GF({self.p})[{','.join(self.names)}; {self.order}]"


def _hashable_order(order):
    return tuple(order) if isinstance(order, (tuple, list)) else order


@lru_cache(maxsize=None)
def ring_cache(p: int, names: tuple[str, ...], order) -> PolyRing:
    return PolyRing(p, names, order if isinstance(order, str) else tuple(order))


def map_to_ring(f: "Polynomial", dst: PolyRing) -> "Polynomial":
    """Transport f into dst (matching variables by name).

    Variables absent from dst must not occur in f.
    """
    src = f.ring
    if src.p != dst.p:
        raise UsageError("cannot map between different characteristics")
    where = []
    for j, nm in enumerate(src.names):
        where.append(dst.index.get(nm, -1))
    d: dict[int, int] = {}
    for k, c in f.terms.items():
        exps = src.exps(k)
        out = [0] * dst.n
        for j, e in enumerate(exps):
            if e:
                if where[j] < 0:
                    raise UsageError(
                        f"variable {src.names[j]!r} does not exist in {dst!r}")
                out[where[j]] = e
        d[dst.key(out)] = c
    return Polynomial(dst, d)


class Polynomial:
    """Immutable sparse polynomial; do not mutate .terms."""

    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring: PolyRing, terms: dict[int, int]):
        self.ring = ring
        self.terms = terms
        self._lm = None

    # -- basic structure ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def lead_key(self) -> int:
        if not self.terms:
            raise UsageError("the zero polynomial has no leading term")
        if self._lm is None:
            self._lm = max(self.terms)
        return self._lm

    def lead_coeff(self) -> int:
        return self.terms[self.lead_key()]

    def lead_exps(self) -> tuple[int, ...]:
        return self.ring.exps(self.lead_key())

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        if self.ring.order == "degrevlex":
            return self.ring.key_degree(self.lead_key())
        return max(self.ring.key_degree(k) for k in self.terms)

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        c = self.lead_coeff()
        if c == 1:
            return self
        inv = pow(c, self.ring.p - 2, self.ring.p)
        p = self.ring.p
        return Polynomial(self.ring, {k: v * inv % p for k, v in self.terms.items()})

    def variables(self) -> tuple[str, ...]:
        seen = [False] * self.ring.n
        for k in self.terms:
            for j, e in enumerate(self.ring.exps(k)):
                if e:
                    seen[j] = True
        return tuple(nm for j, nm in enumerate(self.ring.names) if seen[j])

    def is_univariate_in(self, name: str) -> bool:
        vs = self.variables()
        return vs == () or vs == (name,)

    def to_dense(self, name: str) -> list[int]:
        """Coefficient list (ascending) of a univariate polynomial."""
        if not self.is_univariate_in(name):
            raise UsageError(f"not univariate in {name!r}: {self}")
        j = self.ring.index[name]
        out = [0] * (self.total_degree() + 1 if self.terms else 0)
        for k, c in self.terms.items():
            out[self.ring.exps(k)[j]] = c
        return upoly.trim(out)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise UsageError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        if isinstance(other, FieldElement):
            if other.field.p != self.ring.p:
                raise UsageError("field/ring characteristic mismatch")
            return self.ring.const(other.value)
        return NotImplemented

    def __add__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.ring.p
        d = dict(self.terms)
        for k, c in o.terms.items():
            v = (d.get(k, 0) + c) % p
            if v:
                d[k] = v
            else:
                d.pop(k, None)
        return Polynomial(self.ring, d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.ring.p
        d = dict(self.terms)
        for k, c in o.terms.items():
            v = (d.get(k, 0) - c) % p
            if v:
                d[k] = v
            else:
                d.pop(k, None)
        return Polynomial(self.ring, d)

    def __rsub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {k: p - c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int) or isinstance(other, FieldElement):
            c = int(other) % self.ring.p
            if c == 0:
                return self.ring.zero()
            if c == 1:
                return self
            p = self.ring.p
            return Polynomial(self.ring, {k: v * c % p for k, v in self.terms.items()})
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.ring.p
        off = self.ring.one_key
        d: dict[int, int] = {}
        a, b = self.terms, o.terms
        if len(a) > len(b):
            a, b = b, a
        for k1, c1 in a.items():
            k1o = k1 - off
            for k2, c2 in b.items():
                k = k1o + k2
                v = (d.get(k, 0) + c1 * c2) % p
                if v:
                    d[k] = v
                else:
                    del d[k]
        return Polynomial(self.ring, d)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise UsageError("negative polynomial power")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- evaluation and substitution ------------------------------------------

    def evaluate(self, assignment) -> FieldElement:
        """Evaluate at a point; assignment maps every occurring variable
        name to an int or FieldElement."""
        p = self.ring.p
        vals = self._assignment_vector(assignment)
        acc = 0
        for k, c in self.terms.items():
            t = c
            for j, e in enumerate(self.ring.exps(k)):
                if e:
                    if vals[j] is None:
                        raise UsageError(
                            f"no value for variable {self.ring.names[j]!r}")
                    t = t * pow(vals[j], e, p) % p
            acc = (acc + t) % p
        return FieldElement(acc, GF(p))

    def _assignment_vector(self, assignment):
        vals: list[int | None] = [None] * self.ring.n
        for nm, v in assignment.items():
            if nm in self.ring.index:
                vals[self.ring.index[nm]] = int(v) % self.ring.p
        return vals

    def evaluate_batch(self, arrays: dict[str, np.ndarray]) -> np.ndarray:
        """Vectorised evaluation at many points simultaneously.

        arrays maps variable names to int64 numpy arrays of a common
        shape, entries already reduced mod p.  Exact: every product is
        reduced before the next (p < 2^31 keeps products inside int64).
        """
        p = self.ring.p
        arrs: list[np.ndarray | None] = [None] * self.ring.n
        shape = None
        for nm, a in arrays.items():
            if nm in self.ring.index:
                arrs[self.ring.index[nm]] = a
                shape = a.shape
        if shape is None:
            raise UsageError("no variables supplied")
        acc = np.zeros(shape, dtype=np.int64)
        for k, c in self.terms.items():
            t = np.full(shape, c, dtype=np.int64)
            for j, e in enumerate(self.ring.exps(k)):
                if e:
                    a = arrs[j]
                    if a is None:
                        raise UsageError(
                            f"no value for variable {self.ring.names[j]!r}")
                    for _ in range(e):
                        t = t * a % p
            acc = (acc + t) % p
        return acc

    def substitute(self, images: dict[str, "Polynomial | int"]) -> "Polynomial":
        """Ring-homomorphic substitution; every variable occurring in
        self must have an image (a polynomial of the same ring or a
        constant)."""
        ring = self.ring
        imgs: list[Polynomial | None] = [None] * ring.n
        for nm, g in images.items():
            if nm not in ring.index:
                continue
            if isinstance(g, int):
                g = ring.const(g)
            elif isinstance(g, Polynomial):
                if g.ring != ring:
                    raise UsageError("substitution image from a different ring")
            else:
                raise UsageError(f"bad substitution image {g!r}")
            imgs[ring.index[nm]] = g
        powers: dict[tuple[int, int], Polynomial] = {}

        def img_pow(j, e):
            got = powers.get((j, e))
            if got is None:
                if imgs[j] is None:
                    raise UsageError(
                        f"no image for variable {ring.names[j]!r}")
                got = imgs[j] ** e
                powers[(j, e)] = got
            return got

        acc = ring.zero()
        for k, c in self.terms.items():
            t = ring.const(c)
            for j, e in enumerate(ring.exps(k)):
                if e:
                    t = t * img_pow(j, e)
            acc = acc + t
        return acc

    # -- rendering --------------------------------------------------------------

    def sorted_terms(self):
        """(exps, coeff) pairs in descending lex order of the exponent
        tuples; this is the canonical display order."""
        items = [(self.ring.exps(k), c) for k, c in self.terms.items()]
        items.sort(key=lambda t: t[0], reverse=True)
        return items

    def render(self) -> str:
        """Compact text form: single-letter variables juxtaposed, balanced
        signs (coefficients above p/2 print as negatives), lex term order.
        """
        if not self.terms:
            return "0"
        p = self.ring.p
        compact = all(len(nm) == 1 for nm in self.ring.names)
        parts = []
        for exps, c in self.sorted_terms():
            neg = c > p // 2
            mag = p - c if neg else c
            body = ""
            for j, e in enumerate(exps):
                if not e:
                    continue
                nm = self.ring.names[j]
                if compact:
                    body += nm if e == 1 else f"{nm}^{e}"
                else:
                    body += ("*" if body else "") + (nm if e == 1 else f"{nm}^{e}")
            if not body:
                coeff = str(mag)
            elif mag == 1:
                coeff = ""
            else:
                coeff = str(mag) + ("" if compact else "*")
            sign = "-" if neg else ("+" if parts else "")
            parts.append(f"{sign}{coeff}{body}")
        return "".join(parts)

    def __repr__(self):
        return self.render()


# ---------------------------------------------------------------------------
# Univariate operations at the Polynomial level
# ---------------------------------------------------------------------------

def _common_variable(f: Polynomial, g: Polynomial | None = None) -> str:
    vs = set(f.variables())
    if g is not None:
        if g.ring != f.ring:
            raise UsageError("ring mismatch")
        vs |= set(g.variables())
    if len(vs) > 1:
        raise UsageError(f"not univariate: variables {sorted(vs)}")
    return vs.pop() if vs else f.ring.names[0]


def univ_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd of two univariate polynomials in the same variable."""
    name = _common_variable(f, g)
    d = upoly.gcd(f.to_dense(name), g.to_dense(name), f.ring.p)
    return f.ring.univariate(d, name)


def squarefree_part(f: Polynomial) -> Polynomial:
    """f / gcd(f, f'), monic.  Requires deg f < p."""
    name = _common_variable(f)
    d = upoly.squarefree_part(f.to_dense(name), f.ring.p)
    return f.ring.univariate(d, name)


def root_scan(f: Polynomial) -> set[FieldElement]:
    """All roots of a univariate polynomial in F_p, by exhaustive scan."""
    name = _common_variable(f)
    field = GF(f.ring.p)
    return {FieldElement(r, field) for r in upoly.roots(f.to_dense(name), f.ring.p)}
