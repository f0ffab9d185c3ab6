import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from unknot_lmov.arith import (
    INFINITE,
    PrimePower,
    as_rational,
    binom_z,
    common_divisors,
    divisors,
    factorize,
    fp,
    is_prime,
    mobius,
    primes_upto,
    vp,
)


@pytest.mark.parametrize("n, expected", [(1, (1,)), (12, (1, 2, 3, 4, 6, 12)), (7, (1, 7)), (36, (1, 2, 3, 4, 6, 9, 12, 18, 36))])
def test_divisors(n, expected):
    assert divisors(n) == expected


def test_divisors_rejects_zero():
    with pytest.raises(ValueError):
        divisors(0)


def test_common_divisors_with_zero_is_every_divisor():
    assert list(common_divisors(6, 0)) == [1, 2, 3, 6]
    assert list(common_divisors(12, 18)) == [1, 2, 3, 6]
    with pytest.raises(ValueError):
        common_divisors(0, 0)


@pytest.mark.parametrize("n, expected", [(1, 1), (4, 0), (6, 1), (2, -1), (30, -1), (12, 0)])
def test_mobius(n, expected):
    assert mobius(n) == expected


def test_mobius_sum_vanishes():
    for n in range(1, 10_001):
        assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)


@pytest.mark.parametrize("n, p, expected", [(24, 2, 3), (24, 5, 0), (-18, 3, 2), (1, 7, 0)])
def test_vp(n, p, expected):
    assert vp(n, p) == expected


def test_vp_of_zero_is_infinite_not_a_number():
    v = vp(0, 3)
    assert v is INFINITE
    assert not isinstance(v, int)
    assert v > 10**9 and v >= 5 and not v < 0


@given(st.integers(-10**6, 10**6).filter(bool), st.integers(-10**6, 10**6).filter(bool), st.sampled_from([2, 3, 5, 7, 11]))
def test_vp_is_additive(a, b, p):
    assert vp(a * b, p) == vp(a, p) + vp(b, p)


@pytest.mark.parametrize("n, p, expected", [(7, 3, 280), (4, 2, 3), (0, 5, 1), (0, 2, 1)])
def test_fp(n, p, expected):
    assert fp(n, p) == expected


def test_fp_is_the_p_free_part_of_the_factorial():
    for p in (2, 3, 5, 7):
        for n in range(0, 501):
            assert fp(n, p) * p ** (n // p) * math.factorial(n // p) == math.factorial(n)


def test_fp_modular_matches_exact():
    for p in (2, 3, 5):
        for n in range(0, 60):
            assert fp(n, p, 125) == fp(n, p) % 125


@pytest.mark.parametrize("a, b, expected", [(5, 2, 10), (-1, 3, -1), (2, 3, 0), (-3, 0, 1), (0, 0, 1), (-2, 2, 3)])
def test_binom_z(a, b, expected):
    assert binom_z(a, b) == expected


def test_binom_z_pascal():
    for a in range(-20, 21):
        for b in range(1, 21):
            assert binom_z(a, b) == binom_z(a - 1, b - 1) + binom_z(a - 1, b)


def test_binom_z_rejects_negative_bottom():
    with pytest.raises(ValueError):
        binom_z(3, -1)


def test_primes_and_factorize():
    assert primes_upto(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1) and is_prime(2) and not is_prime(91)
    assert factorize(360) == ((2, 3), (3, 2), (5, 1))
    assert factorize(97) == ((97, 1),)


def test_prime_power():
    pp = PrimePower.exact_in(48, 2)
    assert (pp.p, pp.k, pp.value) == (2, 4, 16)
    with pytest.raises(ValueError):
        PrimePower(6, 1)
    with pytest.raises(ValueError):
        PrimePower.exact_in(0, 3)


def test_as_rational_normalizes_and_refuses_floats():
    assert type(as_rational(Fraction(4, 2))) is int
    assert as_rational(Fraction(3, 6)) == Fraction(1, 2)
    with pytest.raises(TypeError):
        as_rational(0.5)
