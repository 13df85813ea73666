"""Executable checks of the classical concurrency theorems (Steiner,
Kirkman, and the common-point triple), plus the fiber-degree
computations for the two incidence curves.

Each verifier recomputes the relevant pascals exactly, demands that the
3x3 determinant of their coefficient vectors vanish, extracts the
common point as a meet of two of them, and re-checks incidence with the
third; a failure raises TheoremViolationError (and indicates a bug, not
bad input).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .conic import (VARS, Hexad, ProjectivePoint, chord, hexad_ring,
                    incident, meet, pascal_line_symbolic)
from .errors import DegenerateGeometryError, TheoremViolationError, UsageError
from .groebner import Ideal, buchberger
from .labels import PascalLabel, Triple, sort_triple
from .pipeline import (constraint_minors, derive_seed, diagonal_differences,
                       saturate_and_count, saturation_plan, triple_str)


def _det3(u, v, w, p):
    return (u[0] * (v[1] * w[2] - v[2] * w[1])
            - u[1] * (v[0] * w[2] - v[2] * w[0])
            + u[2] * (v[0] * w[1] - v[1] * w[0])) % p


def steiner_triple(x: int, y: int, z: int) -> Triple:
    """k(x,yz), k(y,xz), k(z,xy)."""
    return sort_triple((PascalLabel.of(x, y, z), PascalLabel.of(y, x, z),
                        PascalLabel.of(z, x, y)))


def kirkman_triple(x: int, y: int, z: int, w: int) -> Triple:
    """k(x,yz), k(x,yw), k(x,zw)."""
    return sort_triple((PascalLabel.of(x, y, z), PascalLabel.of(x, y, w),
                        PascalLabel.of(x, z, w)))


TRIVIAL_TRIPLE = sort_triple((PascalLabel.of(1, 2, 3), PascalLabel.of(2, 1, 4),
                              PascalLabel.of(3, 1, 4)))


def _common_point(h: Hexad, labels) -> ProjectivePoint:
    lines = [pascal_line_symbolic(h, lab) for lab in labels]
    p = h.field.p
    if _det3(lines[0].coords, lines[1].coords, lines[2].coords, p) != 0:
        raise TheoremViolationError(
            f"pascals {list(labels)} are not concurrent on {h!r}")
    pt = meet(lines[0], lines[1])
    if not incident(pt, lines[2]):
        raise TheoremViolationError(
            f"no single common point for {list(labels)} on {h!r}")
    return pt


def verify_steiner(h: Hexad, xyz) -> ProjectivePoint:
    """The Steiner point G[xyz]: common point of k(x,yz), k(y,xz), k(z,xy)."""
    x, y, z = sorted(xyz)
    return _common_point(h, steiner_triple(x, y, z))


def verify_kirkman(h: Hexad, x: int, yzw) -> ProjectivePoint:
    """The Kirkman point K[x,yzw]: common point of k(x,yz), k(x,yw), k(x,zw)."""
    y, z, w = sorted(yzw)
    return _common_point(h, kirkman_triple(x, y, z, w))


def all_steiner_points(h: Hexad) -> dict[frozenset[int], ProjectivePoint]:
    return {frozenset(xyz): verify_steiner(h, xyz)
            for xyz in itertools.combinations(range(1, 7), 3)}


def all_kirkman_points(h: Hexad) -> dict[tuple, ProjectivePoint]:
    out = {}
    for x in range(1, 7):
        rest = [d for d in range(1, 7) if d != x]
        for yzw in itertools.combinations(rest, 3):
            out[(x, frozenset(yzw))] = verify_kirkman(h, x, yzw)
    return out


def verify_trivial_concurrency(h: Hexad) -> ProjectivePoint:
    """The triple {k(1,23), k(2,14), k(3,14)} is concurrent at AE meet BF;
    the returned point is checked against that chord intersection."""
    pt = _common_point(h, TRIVIAL_TRIPLE)
    a, b, _, _, e, f = h.params
    expected = meet(chord(a, e, h.field), chord(b, f, h.field))
    if pt != expected:
        raise TheoremViolationError(
            f"common point {pt!r} differs from AE meet BF {expected!r}")
    return pt


# ---------------------------------------------------------------------------
# Fiber degrees of the concurrency curves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CurveSpec:
    """Three concurrent lines matched to a concurrency pattern, one
    coordinate frozen: the data cutting a fiber out of the curve."""

    labels: Triple
    point: tuple[int, int, int]
    lines: tuple[tuple[int, int, int], ...]
    fixed_letter: str
    fixed_value: int
    prime: int

    def __post_init__(self):
        p = self.prime
        if self.fixed_letter not in VARS:
            raise UsageError(f"unknown letter {self.fixed_letter!r}")
        for ln in self.lines:
            if (ln[0] * self.point[0] + ln[1] * self.point[1]
                    + ln[2] * self.point[2]) % p:
                raise UsageError("curve lines must pass through the base point")


def random_curve_spec(labels, p: int, seed: int, fixed_letter: str = "a",
                      fixed_value: int | None = None) -> CurveSpec:
    """A random base point (off the conic and the coordinate triangle),
    three random lines through it, and a random fixed value."""
    rng = random.Random(seed)
    labels = sort_triple(labels)
    while True:
        pt = (rng.randrange(p), rng.randrange(p), rng.randrange(p))
        if 0 in pt:
            continue
        if (pt[0] * pt[2] - pt[1] * pt[1]) % p == 0:
            continue
        break
    lines: list[tuple[int, int, int]] = []
    while len(lines) < 3:
        q = (rng.randrange(p), rng.randrange(p), rng.randrange(p))
        try:
            ln = _line_through(pt, q, p)
        except DegenerateGeometryError:
            continue
        if ln[2] == 0 or any(_prop(ln, other, p) for other in lines):
            continue
        lines.append(ln)
    value = fixed_value if fixed_value is not None else rng.randrange(p)
    return CurveSpec(labels, pt, tuple(lines), fixed_letter, value, p)


def _line_through(pt, q, p):
    c = ((pt[1] * q[2] - pt[2] * q[1]) % p,
         (pt[2] * q[0] - pt[0] * q[2]) % p,
         (pt[0] * q[1] - pt[1] * q[0]) % p)
    if c == (0, 0, 0):
        raise DegenerateGeometryError("coincident points")
    return c


def _prop(u, v, p):
    return ((u[1] * v[2] - u[2] * v[1]) % p == 0
            and (u[2] * v[0] - u[0] * v[2]) % p == 0
            and (u[0] * v[1] - u[1] * v[0]) % p == 0)


def fiber_degree(spec: CurveSpec, trace=None) -> int:
    """The number of curve points over a fixed value of one coordinate:
    the 9 constraint minors plus the linear slice, diagonal saturated
    away, radical degree counted."""
    p = spec.prime
    ring = hexad_ring(p)
    gens: list = []
    for label, line in zip(spec.labels, spec.lines):
        gens.extend(constraint_minors(p, label, line))
    gens.append(ring.var(spec.fixed_letter) - spec.fixed_value)
    gb = buchberger(Ideal(ring, tuple(gens)), trace=trace)
    planned = saturation_plan(gens, ring,
                              pinned=(spec.fixed_letter, spec.fixed_value))
    everything = diagonal_differences(ring)
    rng = random.Random(derive_seed("fiber", triple_str(spec.labels), p,
                                    spec.point, spec.fixed_letter))
    count, _ = saturate_and_count(gb, planned, everything, rng, trace=trace)
    return count
