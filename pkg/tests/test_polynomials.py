import pytest
from hypothesis import given
from hypothesis import strategies as st

from hexagram.conic import hexad_ring, standard_coords, pascal_coords
from hexagram.errors import UnsupportedDegreeError, UsageError
from hexagram.labels import PascalLabel
from hexagram.polynomials import (PolyRing, map_to_ring, ring_cache, root_scan,
                                  squarefree_part, univ_gcd)

R3 = PolyRing(101, ("x", "y", "z"), "degrevlex")
X, Y, Z = R3.gens()


class TestMonomialOrders:
    def test_degrevlex_classics(self):
        # graded first, then reverse-lexicographic tie break:
        # x^2 > xy > y^2 > xz > yz > z^2
        assert R3.key((0, 3, 0)) > R3.key((2, 0, 0))
        assert R3.key((2, 0, 0)) > R3.key((1, 1, 0))
        assert R3.key((1, 1, 0)) > R3.key((0, 2, 0))
        assert R3.key((0, 2, 0)) > R3.key((1, 0, 1))
        assert R3.key((1, 0, 1)) > R3.key((0, 1, 1))
        assert R3.key((0, 1, 1)) > R3.key((0, 0, 2))

    def test_lex_classics(self):
        L = PolyRing(101, ("x", "y"), "lex")
        assert L.key((1, 0)) > L.key((0, 9))
        assert L.key((2, 0)) > L.key((1, 5))

    def test_block_order_eliminates(self):
        B = PolyRing(101, ("t", "x", "y"), ("block", 1))
        assert B.key((1, 0, 0)) > B.key((0, 9, 9))

    @given(st.lists(st.tuples(st.integers(0, 8), st.integers(0, 8),
                              st.integers(0, 8)), min_size=2, max_size=2))
    def test_divisibility_matches_exponents(self, exps):
        e1, e2 = exps
        expected = all(a <= b for a, b in zip(e1, e2))
        assert R3.divides(R3.key(e1), R3.key(e2)) == expected
        if expected:
            q = R3.key(e2) - R3.key(e1) + R3.one_key
            assert R3.exps(q) == tuple(b - a for a, b in zip(e1, e2))

    @given(st.tuples(st.integers(0, 9), st.integers(0, 9), st.integers(0, 9)),
           st.tuples(st.integers(0, 9), st.integers(0, 9), st.integers(0, 9)))
    def test_multiplication_is_key_addition(self, e1, e2):
        k = R3.key(e1) + R3.key(e2) - R3.one_key
        assert R3.exps(k) == tuple(a + b for a, b in zip(e1, e2))

    def test_lcm(self):
        k = R3.lcm_key(R3.key((2, 0, 1)), R3.key((1, 3, 0)))
        assert R3.exps(k) == (2, 3, 1)


class TestArithmetic:
    def test_difference_of_squares(self):
        assert (X + Y) * (X - Y) == X * X - Y * Y

    def test_additive_inverse_empty_terms(self):
        f = X * Y + 3 * Z
        assert (f + (-f)).terms == {}
        assert f - f == 0

    def test_scalar_identity_on_pascal_coordinate(self):
        u2 = standard_coords(101)[2]
        assert u2 * 1 == u2
        assert str(u2) == "-ad+ae+bd-bf-ce+cf"

    def test_ring_mismatch(self):
        other = PolyRing(103, ("x", "y", "z"), "degrevlex")
        with pytest.raises(UsageError):
            X + other.var("x")

    def test_no_zero_coefficients_stored(self, rng):
        for _ in range(60):
            f = R3.random(rng)
            g = R3.random(rng)
            for h in (f + g, f - g, f * g, -f, f * 17):
                assert all(c % 101 for c in h.terms.values())

    def test_power(self):
        assert (X + 1) ** 2 == X * X + 2 * X + 1


class TestEvaluate:
    def test_constant(self):
        assert R3.const(42).evaluate({}) == 42

    def test_cancellation(self):
        assert (X - Y).evaluate({"x": 5, "y": 5}) == 0

    def test_missing_variable(self):
        with pytest.raises(UsageError):
            (X * Y).evaluate({"x": 1})

    def test_worked_hexad_line(self):
        # evaluating the coordinate polynomials at the worked solution
        # must give a vector proportional to <1, 35, 48>
        u = standard_coords(101)
        asg = dict(zip("abcdef", (48, 49, 14, 92, 9, 57)))
        vals = [int(q.evaluate(asg)) for q in u]
        assert vals[1] == 35 * vals[0] % 101
        assert vals[2] == 48 * vals[0] % 101
        assert vals[0] != 0

    def test_evaluate_homomorphic(self, rng):
        for _ in range(30):
            f, g = R3.random(rng), R3.random(rng)
            pt = {v: rng.randrange(101) for v in ("x", "y", "z")}
            assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)

    def test_evaluate_batch_matches_scalar(self, rng):
        import numpy as np
        f = R3.random(rng, max_degree=4, terms=6)
        xs = np.array([rng.randrange(101) for _ in range(40)], dtype=np.int64)
        ys = np.array([rng.randrange(101) for _ in range(40)], dtype=np.int64)
        zs = np.array([rng.randrange(101) for _ in range(40)], dtype=np.int64)
        batch = f.evaluate_batch({"x": xs, "y": ys, "z": zs})
        for i in range(40):
            pt = {"x": int(xs[i]), "y": int(ys[i]), "z": int(zs[i])}
            assert int(batch[i]) == int(f.evaluate(pt))


class TestSubstitute:
    def test_identity(self):
        assert X.substitute({"x": X}) == X

    def test_collapse(self):
        assert (X * Y).substitute({"x": Z, "y": Z}) == Z * Z

    def test_interchange_matches_permuted_symbol(self):
        # a<->d, b<->e, c<->f carries the coordinates of k(1,23) onto
        # those of the permuted symbol, up to scale
        ring = hexad_ring(101)
        u = pascal_coords(101, PascalLabel.of(1, 2, 3))
        images = {"a": ring.var("d"), "d": ring.var("a"),
                  "b": ring.var("e"), "e": ring.var("b"),
                  "c": ring.var("f"), "f": ring.var("c")}
        swapped = [q.substitute(images) for q in u]
        # proportionality via cross-minors of the coefficient vectors:
        # the swap (AD)(BE)(CF) = zeta^{-1}((4 5)) fixes the label k(1,23)
        for i in range(3):
            for j in range(i + 1, 3):
                assert swapped[i] * u[j] == swapped[j] * u[i]

    def test_compose_with_evaluation(self, rng):
        for _ in range(20):
            f = R3.random(rng)
            img = {v: R3.random(rng, max_degree=2, terms=2) for v in ("x", "y", "z")}
            pt = {v: rng.randrange(101) for v in ("x", "y", "z")}
            via_sub = f.substitute(img).evaluate(pt)
            composed = {v: int(img[v].evaluate(pt)) for v in ("x", "y", "z")}
            assert via_sub == f.evaluate(composed)

    def test_missing_image(self):
        with pytest.raises(UsageError):
            (X * Y).substitute({"x": X})


class TestUnivariate:
    def test_squarefree_part(self):
        x = PolyRing(101, ("x",), "degrevlex").var("x")
        f = (x - 1) ** 2 * (x - 2)
        assert squarefree_part(f) == (x - 1) * (x - 2)
        # idempotent
        assert squarefree_part(squarefree_part(f)) == squarefree_part(f)

    def test_gcd(self):
        x = PolyRing(101, ("x",), "degrevlex").var("x")
        assert univ_gcd(x * x - 1, x - 1) == x - 1

    def test_gcd_divides_and_cofactors_coprime(self, rng):
        from hexagram import upoly
        ring = PolyRing(101, ("x",), "degrevlex")
        for _ in range(25):
            f = ring.univariate([rng.randrange(101) for _ in range(5)] + [1], "x")
            g = ring.univariate([rng.randrange(101) for _ in range(4)] + [1], "x")
            fd, gd = f.to_dense("x"), g.to_dense("x")
            dd = univ_gcd(f, g).to_dense("x")
            qf, rf = upoly.divmod_(fd, dd, 101)
            qg, rg = upoly.divmod_(gd, dd, 101)
            assert not rf and not rg                       # divides both
            assert upoly.degree(upoly.gcd(qf, qg, 101)) == 0   # coprime cofactors

    def test_root_scan_nonresidue_quadratic(self):
        # x^2 - 4x + 63 has no roots mod 101 (discriminant -236 is a
        # non-residue), which is why the worked example's second orbit
        # does not split
        ring = PolyRing(101, ("x",), "degrevlex")
        f = ring.univariate([63, -4, 1], "x")
        assert root_scan(f) == set()

    def test_root_scan_finds_all(self, rng):
        ring = PolyRing(101, ("x",), "degrevlex")
        x = ring.var("x")
        f = (x - 3) * (x - 7) * (x - 7) * (x - 90)
        assert {int(r) for r in root_scan(f)} == {3, 7, 90}

    def test_degree_bound(self):
        ring = PolyRing(5, ("x",), "degrevlex")
        f = ring.univariate([1] + [0] * 5 + [1], "x")   # degree 6 >= p
        with pytest.raises(UnsupportedDegreeError):
            squarefree_part(f)


class TestRingPlumbing:
    def test_map_to_ring_roundtrip(self, rng):
        lexring = R3.twin("lex")
        for _ in range(20):
            f = R3.random(rng)
            assert map_to_ring(map_to_ring(f, lexring), R3) == f

    def test_map_to_missing_variable(self):
        sub = ring_cache(101, ("x", "y"), "degrevlex")
        with pytest.raises(UsageError):
            map_to_ring(Z, sub)

    def test_render_exponents(self):
        f = X * X * Y - 2
        assert str(f) == "x^2y-2"
