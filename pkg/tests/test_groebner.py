import itertools
import random

import pytest

from hexagram.errors import NotZeroDimensionalError
from hexagram.groebner import (GroebnerBasis, Ideal, buchberger, eliminate,
                               is_zero_dimensional, minimal_polynomial,
                               normal_form, quotient_dimension,
                               radical_zero_dim, rational_points, saturate)
from hexagram.polynomials import PolyRing

P = 101


def ring2(order="degrevlex"):
    return PolyRing(P, ("x", "y"), order)


def spair_oracle(gb: GroebnerBasis) -> bool:
    """Independent Groebner-basis certificate: every S-polynomial of
    basis pairs reduces to zero (Buchberger's criterion)."""
    ring = gb.ring
    polys = list(gb.polys)
    for f, g in itertools.combinations(polys, 2):
        lf, lg = f.lead_key(), g.lead_key()
        lcm = ring.lcm_key(lf, lg)
        sf = f * ring.from_terms([(pow(int(f.lead_coeff()), P - 2, P),
                                   ring.exps(lcm - lf + ring.one_key))])
        sg = g * ring.from_terms([(pow(int(g.lead_coeff()), P - 2, P),
                                   ring.exps(lcm - lg + ring.one_key))])
        if not gb.reduce(sf - sg).is_zero():
            return False
    return True


class TestBuchberger:
    def test_known_lex_basis(self):
        # <x^2-1, xy-1> under lex x>y has reduced basis {x-y, y^2-1}
        r = ring2("lex")
        x, y = r.gens()
        gb = buchberger(Ideal(r, (x * x - 1, x * y - 1)))
        assert {str(g) for g in gb.polys} == {"x-y", "y^2-1"}
        assert spair_oracle(gb)
        for gen in (x * x - 1, x * y - 1):
            assert gb.contains(gen)

    def test_principal(self):
        r = ring2()
        x, _ = r.gens()
        gb = buchberger(Ideal(r, (x,)))
        assert [str(g) for g in gb.polys] == ["x"]

    def test_linear_system_matches_gaussian_elimination(self, rng):
        # oracle: row-echelon form of the coefficient matrix
        import numpy as np
        from hexagram.modmat import rref_mod
        r = PolyRing(P, ("x", "y", "z"), "lex")
        gens, rows = [], []
        for _ in range(3):
            coeffs = [rng.randrange(P) for _ in range(4)]
            rows.append(coeffs)
            f = r.const(coeffs[3])
            for c, v in zip(coeffs, r.gens()):
                f = f + v * c
            gens.append(f)
        gb = buchberger(Ideal(r, tuple(gens)))
        ech, pivots = rref_mod(np.array(rows, dtype=np.int64), P)
        expect = []
        for row in ech:
            if not row.any():
                continue
            f = r.const(int(row[3]))
            for c, v in zip(row[:3], r.gens()):
                f = f + v * int(c)
            expect.append(f)
        assert sorted(map(str, gb.polys)) == sorted(map(str, expect))

    def test_unique_under_generator_shuffles(self, rng):
        r = PolyRing(P, ("x", "y", "z"), "degrevlex")
        gens = [r.random(rng, max_degree=3, terms=4) for _ in range(4)]
        gens = [g for g in gens if not g.is_zero()]
        base = buchberger(Ideal(r, tuple(gens)))
        for _ in range(4):
            shuffled = gens[:]
            rng.shuffle(shuffled)
            assert buchberger(Ideal(r, tuple(shuffled))) == base

    def test_random_bases_pass_spair_oracle(self, rng):
        r = PolyRing(P, ("x", "y", "z"), "degrevlex")
        for _ in range(8):
            gens = tuple(r.random(rng, max_degree=3, terms=3) for _ in range(3))
            gb = buchberger(Ideal(r, gens))
            assert spair_oracle(gb)
            for g in gens:
                assert gb.contains(g)


class TestNormalForm:
    def test_basis_elements_reduce_to_zero(self):
        r = ring2("lex")
        x, y = r.gens()
        gb = buchberger(Ideal(r, (x * x - 1, x * y - 1)))
        for g in gb.polys:
            assert normal_form(g, gb).is_zero()

    def test_classic_example(self):
        r = ring2("lex")
        x, y = r.gens()
        gb = buchberger(Ideal(r, (x - y,)))
        assert str(normal_form(x * x, gb)) == "y^2"

    def test_result_is_reduced(self, rng):
        r = PolyRing(P, ("x", "y", "z"), "degrevlex")
        gens = tuple(r.random(rng, max_degree=2, terms=3) for _ in range(2))
        gb = buchberger(Ideal(r, gens))
        f = r.random(rng, max_degree=4, terms=6)
        nf = normal_form(f, gb)
        for k in nf.terms:
            assert not any(r.divides(g.lead_key(), k) for g in gb.polys)
        assert gb.contains(f - nf)


class TestEliminate:
    def test_rabinowitsch_gives_zero_ideal(self):
        r = PolyRing(P, ("t", "x"), "degrevlex")
        t, x = r.gens()
        out = eliminate(Ideal(r, (t * x - 1,)), {"t"})
        assert out.generators == ()

    def test_chain(self):
        r = PolyRing(P, ("x", "y", "z"), "degrevlex")
        x, y, z = r.gens()
        out = eliminate(Ideal(r, (x - y, y - z)), {"x"})
        gb = buchberger(out)
        assert gb.contains(out.ring.var("y") - out.ring.var("z"))

    def test_matches_saturation(self, rng):
        # eliminating the Rabinowitsch variable is exactly saturation
        r = PolyRing(P, ("x", "y"), "degrevlex")
        x, y = r.gens()
        ideal = Ideal(r, (x * y * y,))
        direct = saturate(ideal, y)
        rt = PolyRing(P, ("t", "x", "y"), "degrevlex")
        t = rt.var("t")
        from hexagram.polynomials import map_to_ring
        lifted = Ideal(rt, (map_to_ring(x * y * y, rt), t * rt.var("y") - 1))
        manual = eliminate(lifted, {"t"})
        left = buchberger(Ideal(r, tuple(map_to_ring(g, r) for g in manual.generators)))
        assert left == buchberger(direct)


class TestSaturate:
    def test_monomial(self):
        r = ring2()
        x, y = r.gens()
        out = buchberger(saturate(Ideal(r, (x * y,)), x))
        assert [str(g) for g in out.polys] == ["y"]

    def test_by_unit(self):
        r = ring2()
        x, y = r.gens()
        ideal = Ideal(r, (x * x - y,))
        assert buchberger(saturate(ideal, r.one())) == buchberger(ideal)

    def test_idempotent(self, rng):
        r = PolyRing(P, ("x", "y", "z"), "degrevlex")
        x, y, z = r.gens()
        ideal = Ideal(r, (x * y * z, (x - y) * z * z, y * y - z))
        g = x - y
        once = buchberger(saturate(ideal, g))
        twice = buchberger(saturate(Ideal(r, once.polys), g))
        assert once == twice

    def test_kills_diagonal_points_exactly(self):
        # small fixture with a point-enumeration oracle: V(I) over F_11
        # contains points on and off the diagonal x = y; saturation by
        # (x - y) must keep exactly the off-diagonal ones
        p = 11
        r = PolyRing(p, ("x", "y"), "degrevlex")
        x, y = r.gens()
        # (x - y) * (x - 2) and (x - y) * (y - 3) vanish on the whole
        # diagonal plus the point (2, 3)
        ideal = Ideal(r, ((x - y) * (x - 2), (x - y) * (y - 3)))
        sat = buchberger(saturate(ideal, x - y))

        def variety(gb):
            pts = set()
            for a in range(p):
                for b in range(p):
                    if all(int(g.evaluate({"x": a, "y": b})) == 0 for g in gb.polys):
                        pts.add((a, b))
            return pts

        before = variety(buchberger(ideal))
        after = variety(sat)
        assert after == {(2, 3)}
        assert before == after | {(a, a) for a in range(p)}


class TestZeroDimensional:
    def test_product_of_univariates(self):
        r = ring2()
        x, y = r.gens()
        gb = buchberger(Ideal(r, (x * x - 1, y ** 3 - y)))
        assert is_zero_dimensional(gb)
        assert quotient_dimension(gb) == 6

    def test_positive_dimensional(self):
        r = ring2()
        x, y = r.gens()
        gb = buchberger(Ideal(r, (x - y,)))
        assert not is_zero_dimensional(gb)
        with pytest.raises(NotZeroDimensionalError):
            quotient_dimension(gb)

    def test_unit_ideal(self):
        r = ring2()
        gb = buchberger(Ideal(r, (r.one(),)))
        assert is_zero_dimensional(gb)
        assert quotient_dimension(gb) == 0


class TestMinimalPolynomial:
    def test_square(self):
        r = PolyRing(P, ("x",), "degrevlex")
        x = r.var("x")
        gb = buchberger(Ideal(r, (x * x - 1,)))
        m = minimal_polynomial(gb, x)
        assert m.to_dense("x") == [P - 1, 0, 1]

    def test_point(self):
        r = PolyRing(P, ("x",), "degrevlex")
        x = r.var("x")
        gb = buchberger(Ideal(r, (x - 3,)))
        assert minimal_polynomial(gb, x).to_dense("x") == [P - 3, 1]

    def test_vanishes_in_quotient(self, rng):
        r = ring2()
        x, y = r.gens()
        gb = buchberger(Ideal(r, (x * x - 2, y * y - x)))
        lam = x + 5 * y
        m = minimal_polynomial(gb, lam)
        dense = m.to_dense("x")
        # m(lam) must lie in the ideal
        acc = r.zero()
        power = r.one()
        for c in dense:
            acc = acc + power * int(c)
            power = power * lam
        assert gb.contains(acc)


class TestRadical:
    def test_fat_point(self):
        r = PolyRing(P, ("x",), "degrevlex")
        x = r.var("x")
        out = buchberger(radical_zero_dim(Ideal(r, (x * x,))))
        assert [str(g) for g in out.polys] == ["x"]

    def test_multiple_roots(self):
        r = PolyRing(P, ("x",), "degrevlex")
        x = r.var("x")
        f = (x - 1) ** 2 * (x - 2)
        out = buchberger(radical_zero_dim(Ideal(r, (f,))))
        assert out == buchberger(Ideal(r, ((x - 1) * (x - 2),)))

    def test_dimension_never_grows(self, rng):
        r = ring2()
        x, y = r.gens()
        ideal = Ideal(r, ((x - 1) ** 2 * (x + 1), (y - x) ** 2))
        gb = buchberger(ideal)
        rad = buchberger(radical_zero_dim(ideal))
        assert quotient_dimension(rad) <= quotient_dimension(gb)
        assert quotient_dimension(rad) == 2   # points (1,1), (-1,-1)


class TestRationalPoints:
    def test_single_point(self):
        r = ring2()
        x, y = r.gens()
        gb = buchberger(Ideal(r, (x - 3, y - x)))
        sols = rational_points(gb)
        assert sols.rational == [{"x": 3, "y": 3}]
        assert not sols.families

    def test_split_and_family(self):
        r = ring2()
        x, y = r.gens()
        # x^2 = 2 has no root mod 101 (2 is a non-residue mod 101)
        gb = buchberger(radical_zero_dim(Ideal(r, (x * x - 2, y - x))))
        sols = rational_points(gb)
        assert not sols.rational
        assert len(sols.families) == 1
        fam = sols.families[0]
        assert fam.degree == 2
        assert fam.min_poly == (P - 2, 0, 1)
        assert sols.total_degree() == 2

    def test_degree_accounting(self, rng):
        r = ring2()
        x, y = r.gens()
        f = (x - 1) * (x - 2) * (x * x - 2)
        gb = buchberger(radical_zero_dim(Ideal(r, (f, y - x * x))))
        sols = rational_points(gb)
        assert quotient_dimension(gb) == sols.total_degree() == 4
        assert len(sols.rational) == 2
