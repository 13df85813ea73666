"""Exact projective geometry on the fixed conic z0*z2 = z1^2.

Points on the conic are parametrised by tau(r) = [1, r, r^2]; points at
infinity ([0,0,1]) are excluded by design, so a hexad is six pairwise
distinct parameter values.  The symbolic coordinates of the pascal of
the standard symbol [ABC/FED] are hard-coded below; every other
symbol's coordinates are obtained by the variable substitution of a
letter permutation carrying the standard array onto it, and all sixty
triples are cached per prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DegenerateGeometryError, TheoremViolationError, UsageError
from .fields import FieldElement, PrimeField
from .labels import (PascalLabel, PascalSymbol, STANDARD_SYMBOL,
                     all_permutations, label_to_symbol, symbol_to_label)
from .polynomials import Polynomial, PolyRing, ring_cache

VARS = tuple("abcdef")

# Coordinates <u0, u1, u2> of the pascal of the standard symbol [ABC/FED],
# as integer term templates (sign, variable letters).  Single source of
# truth for the mod-p polynomials and the exact rational evaluations.
U_TEMPLATES = (
    ((1, "abde"), (-1, "abdf"), (-1, "acde"), (1, "acef"), (1, "bcdf"), (-1, "bcef")),
    ((-1, "abe"), (1, "abf"), (1, "acd"), (-1, "acf"), (1, "adf"), (-1, "aef"),
     (-1, "bcd"), (1, "bce"), (-1, "bde"), (1, "bef"), (1, "cde"), (-1, "cdf")),
    ((-1, "ad"), (1, "ae"), (1, "bd"), (-1, "bf"), (-1, "ce"), (1, "cf")),
)


@lru_cache(maxsize=None)
def hexad_ring(p: int) -> PolyRing:
    """F_p[a..f] with degrevlex, the ambient ring of the whole pipeline."""
    return ring_cache(p, VARS, "degrevlex")


def _template_poly(ring: PolyRing, template) -> Polynomial:
    terms = []
    for sign, letters in template:
        exps = [0] * 6
        for ch in letters:
            exps[VARS.index(ch)] += 1
        terms.append((sign, tuple(exps)))
    return ring.from_terms(terms)


@lru_cache(maxsize=None)
def standard_coords(p: int) -> tuple[Polynomial, Polynomial, Polynomial]:
    ring = hexad_ring(p)
    return tuple(_template_poly(ring, t) for t in U_TEMPLATES)


@lru_cache(maxsize=None)
def _symbol_permutation(symbol: PascalSymbol):
    """A letter permutation carrying the standard array onto the symbol
    (deterministic: the first in iteration order; any choice agrees up
    to scale)."""
    for sigma in all_permutations():
        if STANDARD_SYMBOL.permuted(sigma) == symbol:
            return sigma
    raise UsageError(f"unreachable: no permutation onto {symbol!r}")


@lru_cache(maxsize=None)
def pascal_coords(p: int, label: PascalLabel) -> tuple[Polynomial, ...]:
    """Symbolic coordinates <u0,u1,u2> of the pascal named by the label,
    as polynomials in F_p[a..f].  Cached for all sixty labels."""
    sigma = _symbol_permutation(label_to_symbol(label))
    ring = hexad_ring(p)
    images = {VARS[i]: ring.var(VARS[sigma(i)]) for i in range(6)}
    return tuple(u.substitute(images) for u in standard_coords(p))


def pascal_coords_for_symbol(p: int, symbol: PascalSymbol) -> tuple[Polynomial, ...]:
    return pascal_coords(p, symbol_to_label(symbol))


# ---------------------------------------------------------------------------
# Projective points and lines (scale classes of F_p^3)
# ---------------------------------------------------------------------------

def _cross(u, v, p):
    return ((u[1] * v[2] - u[2] * v[1]) % p,
            (u[2] * v[0] - u[0] * v[2]) % p,
            (u[0] * v[1] - u[1] * v[0]) % p)


def _dot(u, v, p):
    return (u[0] * v[0] + u[1] * v[1] + u[2] * v[2]) % p


def _proportional(u, v, p):
    return all(c == 0 for c in _cross(u, v, p))


class _ProjectiveTriple:
    """Common behaviour of points and lines: a nonzero coordinate triple
    up to scale, compared via vanishing 2x2 minors."""

    __slots__ = ("coords", "field")

    def __init__(self, coords, field: PrimeField):
        c = tuple(int(x) % field.p for x in coords)
        if c == (0, 0, 0):
            raise UsageError("projective coordinates must not all vanish")
        self.coords = c
        self.field = field

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        if self.field.p != other.field.p:
            return False
        return _proportional(self.coords, other.coords, self.field.p)

    def __hash__(self):
        # normalise: scale so the first nonzero coordinate is 1
        p = self.field.p
        c = self.coords
        for x in c:
            if x:
                inv = pow(x, p - 2, p)
                return hash((p, tuple(v * inv % p for v in c)))
        raise AssertionError

    def elements(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(v, self.field) for v in self.coords)


class ProjectivePoint(_ProjectiveTriple):
    def __repr__(self):
        return "[" + ", ".join(str(c) for c in self.coords) + "]"


class ProjectiveLine(_ProjectiveTriple):
    def __repr__(self):
        return "<" + ", ".join(str(c) for c in self.coords) + ">"


class Conic:
    """The fixed conic z0*z2 = z1^2."""

    @staticmethod
    def contains(pt: ProjectivePoint) -> bool:
        z0, z1, z2 = pt.coords
        return (z0 * z2 - z1 * z1) % pt.field.p == 0

    def __repr__(self):
        return "Conic(z0*z2 = z1^2)"


def incident(pt: ProjectivePoint, line: ProjectiveLine) -> bool:
    if pt.field.p != line.field.p:
        raise UsageError("point and line over different primes")
    return _dot(pt.coords, line.coords, pt.field.p) == 0


def tau(r, field: PrimeField | None = None) -> ProjectivePoint:
    """The conic parametrisation r -> [1, r, r^2]."""
    if isinstance(r, FieldElement):
        field = r.field
        r = r.value
    if field is None:
        raise UsageError("tau needs a field when given a plain int")
    return ProjectivePoint((1, r, r * r % field.p), field)


def chord(r, s, field: PrimeField | None = None) -> ProjectiveLine:
    """The line through tau(r) and tau(s): <r*s, -(r+s), 1>."""
    if isinstance(r, FieldElement):
        field = r.field
        r = r.value
    if isinstance(s, FieldElement):
        s = s.value
    if field is None:
        raise UsageError("chord needs a field when given plain ints")
    p = field.p
    if r % p == s % p:
        raise DegenerateGeometryError(
            f"chord({r},{s}): coincident parameters have no chord "
            "(the tangent there is <r^2, -2r, 1>)")
    return ProjectiveLine((r * s % p, -(r + s) % p, 1), field)


def tangent(r, field: PrimeField) -> ProjectiveLine:
    if isinstance(r, FieldElement):
        field, r = r.field, r.value
    p = field.p
    return ProjectiveLine((r * r % p, -2 * r % p, 1), field)


def meet(l1: ProjectiveLine, l2: ProjectiveLine) -> ProjectivePoint:
    c = _cross(l1.coords, l2.coords, l1.field.p)
    if c == (0, 0, 0):
        raise DegenerateGeometryError("meet of proportional lines")
    return ProjectivePoint(c, l1.field)


def join(p1: ProjectivePoint, p2: ProjectivePoint) -> ProjectiveLine:
    c = _cross(p1.coords, p2.coords, p1.field.p)
    if c == (0, 0, 0):
        raise DegenerateGeometryError("join of coincident points")
    return ProjectiveLine(c, p1.field)


def second_intersection(line: ProjectiveLine, r) -> FieldElement:
    """The parameter r' of the second point where the line meets the
    conic, given that tau(r) lies on it.

    The conic restricted to the line is l0 + l1*x + l2*x^2; with the
    known root r, Vieta gives r' = -l1/l2 - r (equivalently l0/(l2*r)
    when r is nonzero).
    """
    field = line.field
    if isinstance(r, FieldElement):
        r = r.value
    p = field.p
    l0, l1, l2 = line.coords
    if (l0 + l1 * r + l2 * r * r) % p != 0:
        raise UsageError(f"tau({r}) does not lie on {line!r}")
    if l2 == 0:
        raise DegenerateGeometryError(
            "second intersection lies at infinity (l2 = 0)")
    rp = (-l1 * pow(l2, p - 2, p) - r) % p
    if rp == r:
        raise DegenerateGeometryError(f"line is tangent to the conic at tau({r})")
    return FieldElement(rp, field)


# ---------------------------------------------------------------------------
# Hexads and pascals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Hexad:
    """Six pairwise distinct conic parameters (a, b, c, d, e, f)."""

    params: tuple[int, int, int, int, int, int]
    field: PrimeField

    def __post_init__(self):
        vals = tuple(int(v) % self.field.p for v in self.params)
        if len(set(vals)) != 6:
            raise DegenerateGeometryError(f"hexad parameters must be distinct: {vals}")
        object.__setattr__(self, "params", vals)

    @classmethod
    def of(cls, field: PrimeField, *params) -> "Hexad":
        return cls(tuple(params), field)

    def point(self, letter_index: int) -> ProjectivePoint:
        return tau(self.params[letter_index], self.field)

    def assignment(self) -> dict[str, int]:
        return dict(zip(VARS, self.params))

    def __repr__(self):
        return "Hexad(" + ", ".join(
            f"{v}={x}" for v, x in zip(VARS, self.params)) + ")"


def random_hexad(field: PrimeField, rng) -> Hexad:
    if field.p < 7:
        raise UsageError("need p >= 7 for six distinct parameters")
    vals = rng.sample(range(field.p), 6)
    return Hexad(tuple(vals), field)


def pascal_line(h: Hexad, symbol: PascalSymbol | PascalLabel) -> ProjectiveLine:
    """The pascal of the hexad for the given symbol, built geometrically
    from the three minor intersections (their collinearity, Pascal's
    theorem, is re-checked exactly)."""
    if isinstance(symbol, PascalLabel):
        symbol = label_to_symbol(symbol)
    p = h.field.p
    top, bot = symbol.rows
    pts = [(1, v, v * v % p) for v in h.params]
    minors = []
    for i, j in ((0, 1), (1, 2), (0, 2)):
        li = _cross(pts[top[i]], pts[bot[j]], p)
        lj = _cross(pts[top[j]], pts[bot[i]], p)
        if li == (0, 0, 0) or lj == (0, 0, 0):
            raise DegenerateGeometryError("hexad has coincident points")
        x = _cross(li, lj, p)
        if x == (0, 0, 0):
            raise DegenerateGeometryError(
                f"minor chords coincide for symbol {symbol!r}")
        minors.append(x)
    for a in range(3):
        for b in range(a + 1, 3):
            if not _proportional(minors[a], minors[b], p):
                line = _cross(minors[a], minors[b], p)
                third = minors[3 - a - b]
                if _dot(line, third, p) != 0:
                    raise TheoremViolationError(
                        f"Pascal collinearity failed for {symbol!r} on {h!r}")
                return ProjectiveLine(line, h.field)
    raise DegenerateGeometryError(
        f"the three minor intersections coincide for {symbol!r}")


def pascal_line_symbolic(h: Hexad, label: PascalLabel) -> ProjectiveLine:
    """The same line evaluated from the cached symbolic coordinates."""
    u0, u1, u2 = pascal_coords(h.field.p, label)
    asg = h.assignment()
    c = tuple(int(u.evaluate(asg)) for u in (u0, u1, u2))
    if c == (0, 0, 0):
        raise DegenerateGeometryError(f"pascal of {label!r} undefined on {h!r}")
    return ProjectiveLine(c, h.field)


def proposition_hexad(field: PrimeField, line: ProjectiveLine,
                      a: int, b: int, c: int, f: int) -> Hexad:
    """Forward construction behind the 4-parameter chart of a Pascal
    variety: choose A, B, C, F on the conic, push the line through the
    B F and C F chords, and recover D, E as second intersections.  The
    result satisfies pascal_line(h, standard symbol) = line."""
    q1 = meet(chord(b, f, field), line)
    q2 = meet(chord(c, f, field), line)
    e = second_intersection(join(tau(a, field), q1), a)
    d = second_intersection(join(tau(a, field), q2), a)
    return Hexad((a, b, c, d.value, e.value, f), field)


# ---------------------------------------------------------------------------
# Exact rational evaluation (display chart for figures, Q sanity checks)
# ---------------------------------------------------------------------------

def pascal_coords_rational(symbol: PascalSymbol | PascalLabel, params):
    """Evaluate the symbolic coordinates over Q (params: Fractions or
    ints for the six letters in order a..f)."""
    if isinstance(symbol, PascalLabel):
        symbol = label_to_symbol(symbol)
    sigma = _symbol_permutation(symbol)
    out = []
    for template in U_TEMPLATES:
        acc = 0
        for sign, letters in template:
            t = sign
            for ch in letters:
                t = t * params[sigma(VARS.index(ch))]
            acc = acc + t
        out.append(acc)
    if all(v == 0 for v in out):
        raise DegenerateGeometryError("pascal undefined at this rational hexad")
    return tuple(out)
