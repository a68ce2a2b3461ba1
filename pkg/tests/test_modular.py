"""Congruence checks modulo primes, plus the p = 2, 3 closed forms."""
import pytest

from yvlab.errors import IndexOutOfRange, NotPrime, PrimeTooSmall
from yvlab.modular import (check_mirror_congruence, check_monomial_neighbors,
                           check_prime_collapse, check_shift_congruence,
                           check_small_primes, mu_valuation_check, p_adic_valuation)
from yvlab.polycore import Poly, PrimeField
from yvlab.schur_det import mu
from yvlab.yv_engine import YvSequenceCache, triangular


def fp_poly(coeffs, p):
    return Poly(tuple(PrimeField(c, p) for c in coeffs))


def test_prime_collapse_examples(cache1):
    r = check_prime_collapse(5, cache1)
    assert r.verdict
    assert r.computed == fp_poly([0] * 15 + [1], 5)  # T_5 mod 5 = x^15
    assert check_prime_collapse(7, cache1).verdict
    assert check_prime_collapse(13, cache1).verdict


def test_prime_collapse_sweep(cache1):
    for p in (5, 7, 11, 13, 17, 19, 23):
        assert check_prime_collapse(p, cache1).verdict, p


def test_shift_congruence_examples(cache1):
    r = check_shift_congruence(5, 1, 2, cache1)
    assert r.verdict
    expected = [0] * 29
    expected[28], expected[25] = 1, -1  # x^28 - x^25 = x^25 (x^3 - 1)
    assert r.computed == fp_poly(expected, 5)
    assert check_shift_congruence(7, 0, 3, cache1).verdict  # m = 0 is an identity


def test_shift_congruence_sweep(cache1):
    for p in (5, 7, 11, 13):
        for m in range(1, 4):
            for n in range(p):
                if m * p + n <= 60:
                    assert check_shift_congruence(p, m, n, cache1).verdict, (p, m, n)


def test_degree_bookkeeping():
    for p in (5, 7, 11, 13):
        for m in range(1, 4):
            for n in range(p):
                assert (triangular(m * p + n) - triangular(n)) % p == 0


def test_monomial_neighbors(cache1):
    for p in (5, 7, 11, 13):
        hi, lo = check_monomial_neighbors(p, cache1)
        assert hi.verdict and lo.verdict, p
    hi, lo = check_monomial_neighbors(5, cache1)
    assert hi.computed == fp_poly([0] * 21 + [1], 5)  # T_6 mod 5 = x^21
    assert lo.computed == fp_poly([0] * 10 + [1], 5)  # T_4 mod 5 = x^10


def test_mirror_congruence_examples(cache1):
    # p = 5, i = 1: T_3 mod 5 = x^6 and x^(d_3-d_1) T_1 = x^5 * x
    r = check_mirror_congruence(5, 1, cache1)
    assert r.verdict and r.computed == fp_poly([0] * 6 + [1], 5)
    # p = 7, i = 2: T_4 mod 7 = x^10 - x^7 = x^7 (x^3 - 1)
    r = check_mirror_congruence(7, 2, cache1)
    assert r.verdict
    expected = [0] * 11
    expected[10], expected[7] = 1, -1
    assert r.computed == fp_poly(expected, 7)


def test_mirror_congruence_sweep(cache1):
    for p in (5, 7, 11, 13):
        for i in range(p):
            assert check_mirror_congruence(p, i, cache1).verdict, (p, i)


def test_mu_valuation():
    assert p_adic_valuation(4465125, 5) == 3 and 4465125 == 5**3 * 35721
    assert p_adic_valuation(mu(7), 7) == 4
    assert p_adic_valuation(mu(11), 11) == 6
    for p in (5, 7, 11, 13, 17, 19):
        assert mu_valuation_check(p), p
    with pytest.raises(ValueError):
        p_adic_valuation(0, 5)


def test_small_primes_examples():
    c1 = YvSequenceCache(1)
    r3, _ = check_small_primes(1, 2, c1)
    assert r3.verdict  # x^3 - 1 = (x-1)^3 mod 3
    assert r3.expected == fp_poly([-1, 0, 0, 1], 3)
    r3, _ = check_small_primes(1, 4, c1)
    assert r3.verdict  # T_4 mod 3 = x^10 - x = x (x-1)^9
    assert r3.computed == fp_poly([0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1], 3)
    c2 = YvSequenceCache(2)
    _, r2 = check_small_primes(2, 3, c2)
    assert r2.verdict and r2.computed == fp_poly([0] * 6 + [1], 2)


@pytest.mark.parametrize("a", [1, -4, 2])
def test_small_primes_mod3_sweep(a):
    cache = YvSequenceCache(a)
    for n in range(31):
        r3, _ = check_small_primes(a, n, cache)
        assert r3.verdict, (a, n)


@pytest.mark.parametrize("a", [2, -4])
def test_small_primes_mod2_even_sweep(a):
    cache = YvSequenceCache(a)
    for n in range(31):
        _, r2 = check_small_primes(a, n, cache)
        assert r2.verdict, (a, n)


def test_small_primes_odd_a_renders_no_verdict():
    cache = YvSequenceCache(3)
    _, r2 = check_small_primes(3, 5, cache)
    assert r2.verdict is None and r2.expected is None
    assert not r2.computed.is_zero()


def test_error_paths(cache1):
    with pytest.raises(NotPrime):
        check_prime_collapse(9, cache1)
    with pytest.raises(PrimeTooSmall):
        check_prime_collapse(3, cache1)
    with pytest.raises(PrimeTooSmall):
        check_shift_congruence(2, 1, 0, cache1)
    with pytest.raises(IndexOutOfRange):
        check_mirror_congruence(5, 5, cache1)
    with pytest.raises(IndexOutOfRange):
        check_shift_congruence(5, -1, 0, cache1)
    with pytest.raises(ValueError):
        check_small_primes(2, 1, cache1)  # cache built for a = 1
