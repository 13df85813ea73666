"""Dense univariate polynomial arithmetic over F_p (coefficient lists).

Coefficients are plain ints reduced mod p, lists are in ascending degree
with no trailing zeros (the zero polynomial is the empty list).  This is
the workhorse behind squarefree parts, minimal polynomials, root scans
and the irreducible factorisation used for extension-root families.

A small generic-field section at the bottom repeats gcd/powmod for
coefficients living in an arbitrary field object (used to find roots of
an F_p-polynomial inside an extension field).
"""

from __future__ import annotations

import numpy as np

from .errors import UnsupportedDegreeError


def trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def degree(f) -> int:
    """deg f, with deg 0 = -1."""
    return len(f) - 1


def add(f, g, p):
    n = max(len(f), len(g))
    out = [((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p
           for i in range(n)]
    return trim(out)


def sub(f, g, p):
    n = max(len(f), len(g))
    out = [((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p
           for i in range(n)]
    return trim(out)


def mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return trim(out)


def scale(f, c, p):
    c %= p
    if c == 0:
        return []
    return trim([a * c % p for a in f])


def monic(f, p):
    if not f:
        return []
    return scale(f, pow(f[-1], p - 2, p), p)


def divmod_(f, g, p):
    """Quotient and remainder; g nonzero."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return [], trim(r)
    q = [0] * (len(r) - dg)
    inv_lead = pow(g[-1], p - 2, p)
    while len(r) - 1 >= dg and r:
        c = r[-1] * inv_lead % p
        d = len(r) - 1 - dg
        if c:
            q[d] = c
            for j in range(dg + 1):
                r[d + j] = (r[d + j] - c * g[j]) % p
        trim_last(r)
    return trim(q), trim(r)


def trim_last(r):
    # drop exactly the (now zero) leading slot plus any new trailing zeros
    while r and r[-1] == 0:
        r.pop()


def rem(f, g, p):
    return divmod_(f, g, p)[1]


def gcd(f, g, p):
    """Monic gcd."""
    a, b = trim(list(f)), trim(list(g))
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def derivative(f, p):
    return trim([i * f[i] % p for i in range(1, len(f))])


def squarefree_part(f, p):
    """f / gcd(f, f'), made monic.  Valid for deg f < p."""
    f = trim(list(f))
    if degree(f) >= p:
        raise UnsupportedDegreeError(
            f"squarefree part needs deg f < p (deg {degree(f)}, p = {p})")
    if degree(f) <= 0:
        return monic(f, p)
    g = gcd(f, derivative(f, p), p)
    q, r = divmod_(f, g, p)
    assert not r
    return monic(q, p)


def evaluate(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def roots(f, p) -> list[int]:
    """All roots of f in F_p by exhaustive (vectorized) scan."""
    f = trim(list(f))
    if not f:
        raise ZeroDivisionError("root scan of the zero polynomial")
    if degree(f) == 0:
        return []
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(f):
        acc = (acc * xs + c) % p  # acc*x < p^2 < 2^62: exact in int64
    return [int(r) for r in np.nonzero(acc == 0)[0]]


def pow_mod(f, e, m, p):
    """f^e mod m."""
    result = [1]
    base = rem(f, m, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), m, p)
        base = rem(mul(base, base, p), m, p)
        e >>= 1
    return result


# ---------------------------------------------------------------------------
# Irreducible factorisation over F_p
# (squarefree input; distinct-degree then Cantor-Zassenhaus splitting)
# ---------------------------------------------------------------------------

def factor_squarefree(f, p, rng=None) -> list[list[int]]:
    """Irreducible monic factors of a squarefree monic f, sorted by
    (degree, coefficient tuple) for determinism."""
    import random
    rng = rng or random.Random(0x5eed)
    f = monic(trim(list(f)), p)
    factors: list[list[int]] = []
    # distinct-degree decomposition
    h = [0, 1]  # x
    d = 0
    rest = list(f)
    while degree(rest) > 0:
        d += 1
        if 2 * d > degree(rest):
            factors.append(rest)
            break
        h = pow_mod(h, p, rest, p)
        g = gcd(sub(h, [0, 1], p), rest, p)
        if degree(g) > 0:
            factors.extend(_equal_degree_split(g, d, p, rng))
            rest, r = divmod_(rest, g, p)
            assert not r
            h = rem(h, rest, p)
    return sorted(factors, key=lambda q: (len(q), tuple(q)))


def _equal_degree_split(g, d, p, rng) -> list[list[int]]:
    """Cantor-Zassenhaus on a product g of irreducibles of equal degree d."""
    if degree(g) == d:
        return [g]
    e = (pow(p, d) - 1) // 2
    while True:
        probe = [rng.randrange(p) for _ in range(degree(g))] + [1]
        h = pow_mod(probe, e, g, p)
        w = gcd(sub(h, [1], p), g, p)
        if 0 < degree(w) < degree(g):
            q, r = divmod_(g, w, p)
            assert not r
            return _equal_degree_split(w, d, p, rng) + _equal_degree_split(q, d, p, rng)


def is_irreducible(f, p) -> bool:
    f = monic(trim(list(f)), p)
    n = degree(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    h = pow_mod([0, 1], pow(p, n), f, p)
    if trim(sub(h, [0, 1], p)):
        return False
    for q in _prime_divisors(n):
        h = pow_mod([0, 1], pow(p, n // q), f, p)
        if degree(gcd(sub(h, [0, 1], p), f, p)) > 0:
            return False
    return True


def _prime_divisors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def random_irreducible(deg, p, rng) -> list[int]:
    """A random monic irreducible of the given degree."""
    while True:
        f = [rng.randrange(p) for _ in range(deg)] + [1]
        if is_irreducible(f, p):
            return f


# ---------------------------------------------------------------------------
# Generic-field variants (coefficients in any field with +,-,*,inv)
# ---------------------------------------------------------------------------

def g_trim(f, zero):
    while f and f[-1] == zero:
        f.pop()
    return f


def g_mul(f, g, zero):
    if not f or not g:
        return []
    out = [zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a != zero:
            for j, b in enumerate(g):
                out[i + j] = out[i + j] + a * b
    return g_trim(out, zero)


def g_rem(f, g, zero):
    r = list(f)
    dg = len(g) - 1
    inv_lead = g[-1].inv()
    while len(r) - 1 >= dg and r:
        c = r[-1] * inv_lead
        d = len(r) - 1 - dg
        for j in range(dg + 1):
            r[d + j] = r[d + j] - c * g[j]
        g_trim(r, zero)
    return r


def g_gcd(f, g, zero):
    a, b = g_trim(list(f), zero), g_trim(list(g), zero)
    while b:
        a, b = b, g_trim(g_rem(a, b, zero), zero)
    if a:
        c = a[-1].inv()
        a = [x * c for x in a]
    return a


def g_pow_mod(f, e, m, one, zero):
    result = [one]
    base = g_rem(list(f), m, zero)
    while e:
        if e & 1:
            result = g_rem(g_mul(result, base, zero), m, zero)
        base = g_rem(g_mul(base, base, zero), m, zero)
        e >>= 1
    return result


def roots_in_field(f_int, ext, rng) -> list:
    """Roots of an F_p-coefficient polynomial inside an extension field.

    The polynomial is assumed squarefree and to split completely in the
    extension (our use: a factor of degree d inside F_{p^L} with d | L).
    Returns the d roots as ExtElement values via Cantor-Zassenhaus.
    """
    zero, one = ext.zero(), ext.one()
    f = [ext(int(c)) for c in f_int]
    f = g_trim(f, zero)
    c = f[-1].inv()
    f = [x * c for x in f]
    q = pow(ext.p, ext.degree)

    def split(g):
        if len(g) - 1 == 0:
            return []
        if len(g) - 1 == 1:
            return [-(g[0] * g[1].inv())]
        while True:
            probe = [ext([rng.randrange(ext.p) for _ in range(ext.degree)])
                     for _ in range(len(g) - 1)] + [one]
            h = g_pow_mod(probe, (q - 1) // 2, g, one, zero)
            w = g_gcd([h[0] - one] + h[1:] if h else [-(one)], g, zero)
            if 0 < len(w) - 1 < len(g) - 1:
                # divide g by w
                r, qt = list(g), []
                qt = _g_div(g, w, zero)
                return split(w) + split(qt)

    return split(f)


def _g_div(f, g, zero):
    r = list(f)
    dg = len(g) - 1
    q = [zero] * (len(r) - dg)
    inv_lead = g[-1].inv()
    while len(r) - 1 >= dg and r:
        c = r[-1] * inv_lead
        d = len(r) - 1 - dg
        q[d] = c
        for j in range(dg + 1):
            r[d + j] = r[d + j] - c * g[j]
        g_trim(r, zero)
    assert not g_trim(r, zero)
    return q
