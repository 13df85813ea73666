import pytest

from hexagram.errors import UsageError
from hexagram.labels import (DIGITS, LETTERS, PascalLabel, PascalSymbol,
                             Permutation, act_label, act_triple, all_labels,
                             all_permutations, enumerate_orbits, label_to_symbol,
                             orbit_of, parse_triple, pointwise_stabilizer,
                             sort_triple, symbol_to_label, transposition,
                             triple_str, zeta, zeta_inv, STANDARD_SYMBOL)
from hexagram.table_data import blue_triples, brown_triple, red_triples


def cyc(perm, alphabet=DIGITS):
    return perm.to_cycle_string(alphabet)


class TestZeta:
    def test_table_corner(self):
        assert cyc(zeta(transposition(0, 1))) == "(1 4)(2 5)(3 6)"

    def test_inverse_table_corner(self):
        assert cyc(zeta_inv(transposition(0, 1)), LETTERS) == "(A E)(B D)(C F)"

    def test_identity(self):
        e = Permutation((0, 1, 2, 3, 4, 5))
        assert zeta(e) == e

    def test_isomorphism_on_generator_products(self):
        import itertools
        for (i, j), (k, l) in itertools.product(
                itertools.combinations(range(6), 2), repeat=2):
            s, t = transposition(i, j), transposition(k, l)
            assert zeta(s * t) == zeta(s) * zeta(t)

    def test_inverse_roundtrip_everywhere(self):
        for sigma in all_permutations():
            assert zeta_inv(zeta(sigma)) == sigma

    def test_triple_transpositions_map_to_transpositions(self):
        swaps = [s for s in all_permutations() if s.cycle_type() == (2, 2, 2)]
        assert len(swaps) == 15
        images = {zeta(s) for s in swaps}
        assert all(im.cycle_type() == (2,) for im in images)
        assert len(images) == 15

    def test_outer_not_inner(self):
        # no conjugation realises zeta under the A<->1 identification
        perms = all_permutations()
        for g in perms:
            ginv = g.inverse()
            if all(zeta(s) == ginv * s * g for s in perms):
                pytest.fail(f"zeta acts as conjugation by {g!r}")


class TestSymbolsAndLabels:
    def test_worked_conversion(self):
        s = PascalSymbol.from_letters("ADE", "CBF")
        assert symbol_to_label(s) == PascalLabel.of(2, 3, 5)

    def test_standard_symbol_is_k123(self):
        assert symbol_to_label(STANDARD_SYMBOL) == PascalLabel.of(1, 2, 3)
        assert label_to_symbol(PascalLabel.of(1, 2, 3)) == STANDARD_SYMBOL

    def test_reconstruction_example(self):
        assert label_to_symbol(PascalLabel.parse("k(3,15)")) == \
            PascalSymbol.from_letters("ABE", "FCD")

    def test_bijection(self):
        symbols = {label_to_symbol(lab) for lab in all_labels()}
        assert len(symbols) == 60
        for lab in all_labels():
            assert symbol_to_label(label_to_symbol(lab)) == lab

    def test_shuffle_invariance(self):
        # row and column shuffles do not change the label
        a = PascalSymbol.from_letters("ABC", "FED")
        b = PascalSymbol.from_letters("FED", "ABC")
        c = PascalSymbol.from_letters("BCA", "EDF")
        assert a == b == c
        assert symbol_to_label(a) == symbol_to_label(c)

    def test_label_validation(self):
        with pytest.raises(UsageError):
            PascalLabel.of(1, 1, 3)
        with pytest.raises(UsageError):
            PascalLabel.parse("k(7,23)")

    def test_symbol_validation(self):
        with pytest.raises(UsageError):
            PascalSymbol.from_letters("AAB", "CDE")

    def test_label_parse_print(self):
        lab = PascalLabel.parse("(2, 53)")
        assert lab == PascalLabel.of(2, 3, 5)
        assert repr(lab) == "k(2,35)"


class TestAction:
    def test_identity_fixes(self):
        e = Permutation((0, 1, 2, 3, 4, 5))
        t = parse_triple("(1,23),(1,45),(2,45)")
        assert act_triple(e, t) == t

    def test_known_stabilising_element(self):
        t = parse_triple("(1,23),(1,45),(2,45)")
        swap45 = transposition(3, 4)
        assert act_triple(swap45, t) == t
        assert all(act_label(swap45, lab) == lab for lab in t)

    def test_intertwining_exhaustive(self):
        # relabelling a symbol by sigma matches acting on its label by
        # zeta(sigma); checked on all 60 symbols and all 15 transpositions
        import itertools
        for i, j in itertools.combinations(range(6), 2):
            sigma = transposition(i, j)
            zs = zeta(sigma)
            for lab in all_labels():
                sym = label_to_symbol(lab)
                assert symbol_to_label(sym.permuted(sigma)) == act_label(zs, lab)


class TestOrbits:
    def test_orbit_count_and_sizes(self):
        orbs = enumerate_orbits()
        assert len(orbs) == 77
        assert sum(o.size for o in orbs) == 34220
        for o in orbs:
            assert 720 % o.size == 0
            assert o.size * len(o.setwise_stab) == 720

    def test_first_representatives(self):
        orbs = enumerate_orbits()
        expected = ["(1, 23), (1, 24), (1, 25)",
                    "(1, 23), (1, 24), (1, 34)",
                    "(1, 23), (1, 24), (1, 35)"]
        assert [triple_str(o.representative) for o in orbs[:3]] == expected

    def test_brown_stabiliser(self):
        t = brown_triple()
        stab = pointwise_stabilizer(t)
        assert {cyc(s) for s in stab} == {"e", "(2 3)", "(4 5)", "(2 3)(4 5)"}

    def test_blue_set_matches_z2(self):
        orbs = enumerate_orbits()
        z2 = {o.representative for o in orbs
              if len(pointwise_stabilizer(o.representative)) == 2}
        reds = set(red_triples())
        assert z2 - reds == set(blue_triples())

    def test_orbit_of_arbitrary_triple(self):
        t = sort_triple(parse_triple("(4, 56), (2, 46), (6, 13)"))
        orb = orbit_of(t)
        assert any(act_triple(pi, orb.representative) == t
                   for pi in all_permutations())

    def test_triple_parsing_requires_distinct(self):
        with pytest.raises(UsageError):
            sort_triple(parse_triple("(1,23),(1,23),(2,45)"))
