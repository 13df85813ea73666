import pytest
from hypothesis import given
from hypothesis import strategies as st

from hexagram.errors import FieldMismatchError, ReducibleModulusError, UsageError
from hexagram.fields import (GF, ExtElement, FieldElement, Prime, Rational,
                             ext_field, is_prime)

F101 = GF(101)


class TestPrime:
    def test_valid(self):
        assert Prime(101).p == 101
        assert Prime(32003).p == 32003

    @pytest.mark.parametrize("bad", [1, 2, 4, 91, 32001, 2**31 + 11])
    def test_invalid(self, bad):
        with pytest.raises(UsageError):
            Prime(bad)

    def test_is_prime_matches_trial_division(self):
        def trial(n):
            if n < 2:
                return False
            d = 2
            while d * d <= n:
                if n % d == 0:
                    return False
                d += 1
            return True

        for n in range(2, 500):
            assert is_prime(n) == trial(n), n


class TestFieldElement:
    def test_inverse_examples(self):
        assert F101(1).inv() == 1
        assert F101(2).inv() == 51          # 2 * 51 = 102 = 1 mod 101
        assert F101(3) ** 100 == 1          # Fermat

    def test_zero_inverse(self):
        with pytest.raises(ZeroDivisionError):
            F101(0).inv()
        with pytest.raises(ZeroDivisionError):
            F101(5) / 0

    def test_mixed_primes(self):
        with pytest.raises(FieldMismatchError):
            F101(3) + GF(103)(4)

    @given(st.integers(1, 100))
    def test_inv_involution_and_fermat(self, v):
        x = F101(v)
        assert x.inv().inv() == x
        assert x.inv() * x == 1
        assert x ** 100 == 1

    @given(st.integers(-300, 300), st.integers(-300, 300))
    def test_ring_laws(self, a, b):
        x, y = F101(a), F101(b)
        assert x + y == y + x
        assert x * y == y * x
        assert (x - y) + y == x
        assert int(x * y) == (a * b) % 101

    def test_arith_with_plain_ints(self):
        assert F101(10) + 95 == 4
        assert 2 * F101(60) == 19


QUAD_63 = (63, 101 - 4, 1)   # x^2 - 4x + 63


class TestExtElement:
    def test_vieta_product_and_sum(self):
        # in F_101[x]/(x^2-4x+63): the two roots are x and 4-x
        K = ext_field(101, QUAD_63)
        x = K.gen()
        assert x * (4 - x) == 63
        assert x + (4 - x) == 4

    def test_vieta_third_orbit(self):
        K = ext_field(101, (4, 101 - 51, 1))   # x^2 - 51x + 4
        x = K.gen()
        assert x * (51 - x) == 4

    def test_constant_arithmetic_matches_base_field(self, rng):
        K = ext_field(101, QUAD_63)
        for _ in range(50):
            a, b = rng.randrange(101), rng.randrange(101)
            assert (K(a) * K(b)).constant_value() == F101(a) * F101(b)
            assert (K(a) + K(b)).constant_value() == F101(a) + F101(b)
            if a:
                assert K(a).inv().constant_value() == F101(a).inv()

    def test_field_inverse(self, rng):
        K = ext_field(101, QUAD_63)   # irreducible: -236 is a non-residue
        for _ in range(30):
            z = K([rng.randrange(101), rng.randrange(101)])
            if z:
                assert z * z.inv() == 1

    def test_reducible_modulus_reported(self):
        K = ext_field(101, (101 - 1, 0, 1))   # x^2 - 1 = (x-1)(x+1)
        bad = K.gen() - 1
        with pytest.raises(ReducibleModulusError) as err:
            bad.inv()
        assert err.value.factor is not None

    def test_pow(self):
        K = ext_field(101, QUAD_63)
        x = K.gen()
        assert x ** (101 ** 2 - 1) == 1      # multiplicative group order

    def test_small_field_exhaustive(self):
        # x^2 + x + 1 has no root mod 5, so this is the 25-element field:
        # every nonzero element is invertible
        K = ext_field(5, (1, 1, 1))
        elements = list(K.elements())
        assert len(set(elements)) == 25
        for z in elements:
            if z:
                assert z * z.inv() == 1


class TestRational:
    def test_reduced_form(self):
        q = Rational(6, -4)
        assert q.numerator == -3 and q.denominator == 2

    @given(st.integers(-50, 50).filter(bool), st.integers(-50, 50).filter(bool))
    def test_roundtrip(self, a, b):
        assert Rational(a, b) * Rational(b, a) == 1
