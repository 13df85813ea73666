"""Exact arithmetic: prime fields F_p, small extensions F_p[x]/(m), rationals.

Everything downstream (geometry, polynomial kernels, the Groebner engine)
is exact; no floating point is used anywhere in this package outside of
figure rendering.  The polynomial kernels work on raw reduced ints for
speed; the classes here are the friendly value layer used by the geometry
modules and by user-facing code.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import FieldMismatchError, ReducibleModulusError, UsageError

# Characteristic-0 rationals for sanity checks and figure rendering.
# fractions.Fraction already maintains the canonical reduced form
# (gcd(num, den) = 1, den > 0) that we need.
Rational = Fraction

# Deterministic Miller-Rabin witnesses, valid for all n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

MAX_PRIME = 2**31  # keeps single products inside int64 for the numpy kernels


def is_prime(n: int) -> bool:
    """Deterministic primality test for machine-word sized n."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Prime:
    """A verified odd prime, small enough for word arithmetic."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int):
            raise UsageError(f"prime must be an int, got {type(self.p).__name__}")
        if self.p <= 2:
            raise UsageError(f"p = {self.p}: need an odd prime > 2")
        if self.p >= MAX_PRIME:
            raise UsageError(f"p = {self.p} exceeds the 2^31 word-size bound")
        if not is_prime(self.p):
            raise UsageError(f"p = {self.p} is not prime")

    def __int__(self) -> int:
        return self.p

    def __repr__(self):
        return f"Prime({self.p})"


@lru_cache(maxsize=None)
def GF(p: int) -> "PrimeField":
    """The prime field with p elements (cached per prime)."""
    return PrimeField(Prime(p))


class PrimeField:
    """Context object for F_p; produces and validates `FieldElement`s."""

    __slots__ = ("prime", "p")

    def __init__(self, prime: Prime):
        self.prime = prime
        self.p = prime.p

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(value % self.p, self)

    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def elements(self):
        for v in range(self.p):
            yield FieldElement(v, self)

    def random(self, rng) -> "FieldElement":
        return FieldElement(rng.randrange(self.p), self)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class FieldElement:
    """An element of F_p, always stored reduced to [0, p)."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField):
        self.value = value % field.p
        self.field = field

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field.p != self.field.p:
                raise FieldMismatchError(
                    f"mixed fields F_{self.field.p} and F_{other.field.p}"
                )
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement((self.value + v) % self.field.p, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement((self.value - v) % self.field.p, self.field)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement((v - self.value) % self.field.p, self.field)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.value * v % self.field.p, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value % self.field.p, self.field)

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        return FieldElement(pow(self.value, e, self.field.p), self.field)

    def inv(self) -> "FieldElement":
        if self.value == 0:
            raise ZeroDivisionError(f"inversion of zero in F_{self.field.p}")
        return FieldElement(pow(self.value, self.field.p - 2, self.field.p), self.field)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        if v == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.field.p}")
        return FieldElement(self.value * pow(v, self.field.p - 2, self.field.p)
                            % self.field.p, self.field)

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(v, self.field) / self

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field.p == other.field.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self):
        return f"{self.value}"


# ---------------------------------------------------------------------------
# Extension fields F_p[x]/(m)
# ---------------------------------------------------------------------------

def _dense_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _dense_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _dense_trim(out)


def _dense_rem(a, m, p):
    # m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1]
        if c:
            shift = len(a) - 1 - dm
            for j in range(dm + 1):
                a[shift + j] = (a[shift + j] - c * m[j]) % p
        a.pop()
    return _dense_trim(a)


def _dense_xgcd(a, b, p):
    """Extended gcd of dense coefficient lists; returns (g, s, t) with
    s*a + t*b = g, g monic (or the empty list for gcd of zeros)."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        # divide r0 by r1
        q = [0] * max(len(r0) - len(r1) + 1, 0)
        r = list(r0)
        inv_lead = pow(r1[-1], p - 2, p)
        while len(r) >= len(r1) and r:
            c = r[-1] * inv_lead % p
            d = len(r) - len(r1)
            q[d] = c
            for j in range(len(r1)):
                r[d + j] = (r[d + j] - c * r1[j]) % p
            _dense_trim(r)
        r0, r1 = r1, r
        s0, s1 = s1, _dense_trim([(x - y) % p for x, y in
                                  _zip_sub(s0, _dense_mul(q, s1, p))])
        t0, t1 = t1, _dense_trim([(x - y) % p for x, y in
                                  _zip_sub(t0, _dense_mul(q, t1, p))])
    if r0:
        c = pow(r0[-1], p - 2, p)
        r0 = [x * c % p for x in r0]
        s0 = [x * c % p for x in s0]
        t0 = [x * c % p for x in t0]
    return r0, s0, t0


def _zip_sub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]


@lru_cache(maxsize=None)
def ext_field(p: int, modulus: tuple[int, ...]) -> "ExtField":
    return ExtField(GF(p), modulus)


class ExtField:
    """F_p[x]/(m) for a monic modulus m of degree >= 1.

    The modulus is not required to be irreducible up front; inversion
    detects reducibility (via a nontrivial gcd) and reports it.
    """

    __slots__ = ("base", "p", "modulus", "degree")

    def __init__(self, base: PrimeField, modulus: tuple[int, ...]):
        p = base.p
        mod = tuple(c % p for c in modulus)
        if len(mod) < 2:
            raise UsageError("extension modulus must have degree >= 1")
        if mod[-1] != 1:
            raise UsageError("extension modulus must be monic")
        self.base = base
        self.p = p
        self.modulus = mod
        self.degree = len(mod) - 1

    def __call__(self, coeffs) -> "ExtElement":
        if isinstance(coeffs, ExtElement):
            if coeffs.ext is not self and coeffs.ext != self:
                raise FieldMismatchError("element from a different extension")
            return coeffs
        if isinstance(coeffs, FieldElement):
            coeffs = [coeffs.value]
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        c = [int(x) % self.p for x in coeffs]
        c = _dense_rem(c, list(self.modulus), self.p)
        c += [0] * (self.degree - len(c))
        return ExtElement(tuple(c), self)

    def gen(self) -> "ExtElement":
        """The class of x (a root of the modulus)."""
        return self([0, 1])

    def zero(self) -> "ExtElement":
        return self(0)

    def one(self) -> "ExtElement":
        return self(1)

    def elements(self):
        """All p^degree elements (small fields only; used in tests)."""
        from itertools import product
        for tup in product(range(self.p), repeat=self.degree):
            yield ExtElement(tup, self)

    def __eq__(self, other):
        return (isinstance(other, ExtField) and other.p == self.p
                and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("ExtField", self.p, self.modulus))

    def __repr__(self):
        return f"GF({self.p})[x]/({_render_dense(self.modulus, 'x')})"


class ExtElement:
    """An element of F_p[x]/(m), stored as a reduced coefficient tuple."""

    __slots__ = ("coeffs", "ext")

    def __init__(self, coeffs: tuple[int, ...], ext: ExtField):
        self.coeffs = coeffs
        self.ext = ext

    def _coerce(self, other):
        if isinstance(other, ExtElement):
            if other.ext != self.ext:
                raise FieldMismatchError("mixed extension fields")
            return other
        if isinstance(other, (int, FieldElement)):
            return self.ext(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.ext.p
        return ExtElement(tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs)),
                          self.ext)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.ext.p
        return ExtElement(tuple((a - b) % p for a, b in zip(self.coeffs, o.coeffs)),
                          self.ext)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self):
        p = self.ext.p
        return ExtElement(tuple(-a % p for a in self.coeffs), self.ext)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.ext.p
        prod = _dense_mul(list(self.coeffs), list(o.coeffs), p)
        red = _dense_rem(prod, list(self.ext.modulus), p)
        red += [0] * (self.ext.degree - len(red))
        return ExtElement(tuple(red), self.ext)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = self.ext.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inv(self) -> "ExtElement":
        if not any(self.coeffs):
            raise ZeroDivisionError(f"inversion of zero in {self.ext!r}")
        p = self.ext.p
        g, s, _ = _dense_xgcd(_dense_trim(list(self.coeffs)),
                              list(self.ext.modulus), p)
        if len(g) != 1:
            raise ReducibleModulusError(
                f"modulus {_render_dense(self.ext.modulus, 'x')} is reducible: "
                f"gcd with the element is {_render_dense(tuple(g), 'x')}",
                factor=tuple(g))
        red = _dense_rem(s, list(self.ext.modulus), p)
        red += [0] * (self.ext.degree - len(red))
        return ExtElement(tuple(red), self.ext)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inv()

    def __eq__(self, other):
        if isinstance(other, ExtElement):
            return self.ext == other.ext and self.coeffs == other.coeffs
        if isinstance(other, (int, FieldElement)):
            return self == self.ext(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ext.p, self.ext.modulus, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def is_constant(self) -> bool:
        return not any(self.coeffs[1:])

    def constant_value(self) -> FieldElement:
        if not self.is_constant():
            raise UsageError("not a constant element")
        return FieldElement(self.coeffs[0], self.ext.base)

    def __repr__(self):
        return _render_dense(self.coeffs, "x") or "0"


def _render_dense(coeffs, name: str) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append(f"{name}" if c == 1 else f"{c}*{name}")
        else:
            parts.append(f"{name}^{i}" if c == 1 else f"{c}*{name}^{i}")
    return " + ".join(parts) if parts else "0"
