import random

import pytest

from hexagram.conic import random_hexad
from hexagram.errors import DegenerateGeometryError
from hexagram.fields import GF
from hexagram.pipeline import random_instance, reduce_instance
from hexagram.theorems import (CurveSpec, TRIVIAL_TRIPLE, all_kirkman_points,
                               all_steiner_points, fiber_degree,
                               kirkman_triple, random_curve_spec,
                               steiner_triple, verify_steiner,
                               verify_trivial_concurrency)


def fresh_hexad(p, rng):
    field = GF(p)
    while True:
        try:
            h = random_hexad(field, rng)
            all_steiner_points(h)
            return h
        except DegenerateGeometryError:
            continue


class TestConcurrency:
    def test_steiner_and_kirkman_counts(self, rng):
        h = fresh_hexad(32003, rng)
        assert len(all_steiner_points(h)) == 20
        assert len(all_kirkman_points(h)) == 60

    def test_steiner_point_on_all_three(self, rng):
        from hexagram.conic import incident, pascal_line_symbolic
        h = fresh_hexad(32003, rng)
        pt = verify_steiner(h, (1, 2, 3))
        for lab in steiner_triple(1, 2, 3):
            assert incident(pt, pascal_line_symbolic(h, lab))

    def test_kirkman_differs_from_steiner(self, rng):
        # exact inequality over a large prime
        h = fresh_hexad(32003, rng)
        steiners = set(all_steiner_points(h).values())
        for pt in all_kirkman_points(h).values():
            assert pt not in steiners

    def test_trivial_concurrency_point(self, rng):
        from hexagram.conic import chord, meet
        h = fresh_hexad(32003, rng)
        pt = verify_trivial_concurrency(h)
        a, b, _, _, e, f = h.params
        assert pt == meet(chord(a, e, h.field), chord(b, f, h.field))

    def test_row14_table_entry_is_zero(self):
        inst = random_instance(TRIVIAL_TRIPLE, 101, 3)
        count, _ = reduce_instance(inst)
        assert count == 0


class TestCurveSpecs:
    def test_lines_concurrent(self):
        spec = random_curve_spec(steiner_triple(1, 2, 3), 32003, 4)
        p = spec.prime
        x, y, z = spec.point
        for ln in spec.lines:
            assert (ln[0] * x + ln[1] * y + ln[2] * z) % p == 0

    def test_validation(self):
        with pytest.raises(Exception):
            CurveSpec(steiner_triple(1, 2, 3), (1, 0, 0),
                      ((0, 1, 0), (0, 0, 1), (1, 1, 1)), "a", 5, 101)


class TestFiberDegrees:
    """Regression pins for the computed fiber degrees.

    Two independent formulations (the 6-variable ideal with a linear
    slice, and the 3-variable parametrized chart) agree on these values
    across primes, seeds and fixed letters, and the rational points of a
    kirkman-pattern fiber match an exhaustive enumeration; the
    acceptance module carries the verbatim documented assertion.  The
    published prose assigns 7/4 the other way round.
    """

    def test_steiner_pattern_fiber(self):
        vals = set()
        for p, letter, seed in [(32003, "a", 11), (43051, "b", 5)]:
            spec = random_curve_spec(steiner_triple(1, 2, 3), p, seed,
                                     fixed_letter=letter)
            vals.add(fiber_degree(spec))
        assert vals == {4}

    def test_kirkman_pattern_fiber(self):
        vals = set()
        for p, letter, seed in [(32003, "a", 11), (43051, "b", 5)]:
            spec = random_curve_spec(kirkman_triple(1, 2, 3, 4), p, seed,
                                     fixed_letter=letter)
            vals.add(fiber_degree(spec))
        assert vals == {7}

    def test_row14_curve_fiber(self):
        # the paper leaves this one to the reader; it computes to 4,
        # stably across two draws
        vals = {fiber_degree(random_curve_spec(TRIVIAL_TRIPLE, 32003, s))
                for s in (3, 8)}
        assert len(vals) == 1
        assert vals == {4}

    def test_generic_lines_give_empty_fiber(self):
        # non-concurrent lines plus one frozen letter: a codimension-6
        # variety generically misses the codimension-5 slice (sanity
        # expectation; the seed is frozen to a verified generic draw)
        from hexagram.conic import hexad_ring
        from hexagram.groebner import Ideal, buchberger
        from hexagram.pipeline import (constraint_minors,
                                       diagonal_differences, draw_lines,
                                       saturate_and_count, saturation_plan)
        p = 32003
        triple = steiner_triple(1, 2, 3)
        lines = draw_lines(p, 12345)       # independent, hence not concurrent
        ring = hexad_ring(p)
        gens = []
        for lab, ln in zip(triple, lines):
            gens.extend(constraint_minors(p, lab, ln))
        gens.append(ring.var("a") - 7)
        gb = buchberger(Ideal(ring, tuple(gens)))
        plan = saturation_plan(gens, ring, pinned=("a", 7))
        count, _ = saturate_and_count(gb, plan, diagonal_differences(ring),
                                      random.Random(0))
        assert count == 0
