"""Kernel arithmetic: spec'd examples plus randomized algebraic laws."""
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from yvlab.errors import NonExactDivision, NotPIntegral, NotPrime, ZeroDenominator
from yvlab.polycore import (NEG_INF, ONE, Poly, PrimeField, RationalFunction, X,
                            ZERO, _exact_div_int_synthetic, _mul_int_schoolbook,
                            gcd_poly, is_prime, poly_divmod)

F = Fraction

ints = st.integers(-10**6, 10**6)
int_polys = st.lists(ints, max_size=8).map(Poly)
nonzero_int_polys = int_polys.filter(lambda p: not p.is_zero())
fracs = st.fractions(min_value=-50, max_value=50, max_denominator=40)
frac_polys = st.lists(fracs, max_size=6).map(Poly)
nonzero_frac_polys = frac_polys.filter(lambda p: not p.is_zero())

many = settings(max_examples=1000, deadline=None,
                suppress_health_check=[HealthCheck.too_slow])


# -- constructors and degree ------------------------------------------------

def test_trailing_zeros_trimmed():
    assert Poly((1, 2, 0, 0)).coeffs == (1, 2)
    assert Poly((0, 0)).coeffs == ()


def test_degree_sentinel_below_all_integers():
    assert ZERO.degree == NEG_INF
    assert ZERO.degree < -10**9
    assert Poly((7,)).degree == 0


# -- addition ----------------------------------------------------------------

def test_add_cancellation():
    assert Poly((1, 1)) + Poly((-1, 1)) == Poly((0, 2))  # (x+1)+(x-1) = 2x


def test_add_identity():
    p = Poly((3, 0, 2))
    assert p + ZERO == p


def test_add_hand_arithmetic():
    assert Poly((-1, 0, 0, 1)) + Poly((5, 0, 0, 5)) == Poly((4, 0, 0, 6))


# -- multiplication -----------------------------------------------------------

def test_mul_difference_of_squares():
    assert Poly((-1, 1)) * Poly((1, 1)) == Poly((-1, 0, 1))


def test_mul_identity():
    p = Poly((2, -3, 5))
    assert p * ONE == p


def test_mul_square():
    assert Poly((-1, 0, 0, 1)) ** 2 == Poly((1, 0, 0, -2, 0, 0, 1))


@given(a=st.lists(ints, min_size=1, max_size=60), b=st.lists(ints, min_size=1, max_size=60))
@settings(max_examples=300, deadline=None)
def test_mul_kronecker_matches_schoolbook(a, b):
    # force the packed path regardless of size thresholds
    from yvlab.polycore import _mul_int_kronecker
    assert _mul_int_kronecker(a, b) == _mul_int_schoolbook(a, b)


# -- derivative ----------------------------------------------------------------

def test_derivative_basic():
    assert Poly((-1, 0, 0, 1)).derivative() == Poly((0, 0, 3))
    assert Poly((42,)).derivative() == ZERO
    assert Poly((-5, 0, 0, -5, 0, 0, 1)).derivative(2) == Poly((0, -30, 0, 0, 30))


@given(p=int_polys, q=int_polys)
@settings(max_examples=300, deadline=None)
def test_derivative_linear_and_leibniz(p, q):
    assert (p + q).derivative() == p.derivative() + q.derivative()
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


# -- exact division -------------------------------------------------------------

def test_exact_div_basic():
    assert Poly((-1, 0, 1)).exact_div(Poly((-1, 1))) == Poly((1, 1))
    p = Poly((9, -2, 7))
    assert p.exact_div(ONE) == p


def test_exact_div_recursion_step():
    # the n=2 step of the bilinear recursion, landing on x^6 - 5x^3 - 5
    t2 = Poly((-1, 0, 0, 1))
    rhs = X * t2 * t2 + t2 * Poly((0, 6)) - Poly((0, 0, 3)) ** 2
    assert rhs.exact_div(X) == Poly((-5, 0, 0, -5, 0, 0, 1))


def test_exact_div_abort_paths():
    with pytest.raises(NonExactDivision):
        Poly((1, 0, 1)).exact_div(Poly((1, 1)))  # remainder 2
    with pytest.raises(NonExactDivision):
        Poly((0, 0, 1)).exact_div(Poly((0, 2)))  # leading step 1//2
    with pytest.raises(ZeroDivisionError):
        ONE.exact_div(ZERO)
    assert Poly((1, 0, 1)).try_exact_div(Poly((1, 1))) is None


@given(p=int_polys, q=nonzero_int_polys)
@many
def test_exact_div_roundtrip_int(p, q):
    assert (p * q).exact_div(q) == p


@given(p=frac_polys, q=nonzero_frac_polys)
@settings(max_examples=400, deadline=None)
def test_exact_div_roundtrip_rational(p, q):
    assert (p * q).exact_div(q) == p


@given(p=st.lists(ints, min_size=1, max_size=40), q=st.lists(ints, min_size=1, max_size=20))
@settings(max_examples=200, deadline=None)
def test_exact_div_kronecker_matches_synthetic(p, q):
    if not q[-1]:
        q[-1] = 1
    prod = _mul_int_schoolbook(p, q)
    from yvlab.polycore import _exact_div_int
    assert _exact_div_int(prod, q) == _exact_div_int_synthetic(prod, q)


# -- ring axioms -------------------------------------------------------------------

@given(p=int_polys, q=int_polys, r=int_polys)
@many
def test_ring_axioms_int(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p


@given(p=frac_polys, q=frac_polys, r=frac_polys)
@many
def test_ring_axioms_rational(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert (p - q) + q == p


# -- evaluation and argument shift ----------------------------------------------------

def test_eval_examples():
    assert Poly((-1, 0, 0, 1))(0) == -1
    assert ZERO(12345) == 0
    assert Poly((0, -1))(2) == -2  # the ratio polynomial -m at m = 2


def test_shift_arg_examples():
    assert Poly((0, 1)).shift_arg(-1) == Poly((-1, 1))
    assert Poly((0, 0, 1)).shift_arg(1) == Poly((1, 2, 1))
    # 3m(m+1)/70 shifted by -1 equals 3m(m-1)/70, both expanded
    p = (Poly((0, 1)) * Poly((1, 1))).scaled(F(3, 70))
    q = (Poly((0, 1)) * Poly((-1, 1))).scaled(F(3, 70))
    assert p.shift_arg(-1) == q


@given(p=int_polys, c=st.integers(-20, 20))
@settings(max_examples=300, deadline=None)
def test_shift_arg_inverse(p, c):
    assert p.shift_arg(c).shift_arg(-c) == p


@given(p=int_polys, c=st.integers(-9, 9), x=st.integers(-9, 9))
@settings(max_examples=300, deadline=None)
def test_shift_arg_agrees_with_eval(p, c, x):
    assert p.shift_arg(c)(x) == p(x + c)


# -- prime fields and reduction ----------------------------------------------------------

def test_prime_field_basics():
    a = PrimeField(3, 5)
    assert (a + 4).value == 2 and (a * a).value == 4 and (1 / a).value == 2
    assert a == 8 and a != 2
    assert -a == PrimeField(2, 5)
    with pytest.raises(NotPrime):
        PrimeField(1, 6)


def test_is_prime_small():
    assert [p for p in range(2, 30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1) and not is_prime(0) and not is_prime(9409)  # 97^2


def test_reduce_mod_examples():
    assert Poly((-1, 0, 0, 1)).reduce_mod(5) == Poly((PrimeField(4, 5), PrimeField(0, 5),
                                                      PrimeField(0, 5), PrimeField(1, 5)))
    assert Poly((F(1, 2),)).reduce_mod(5) == Poly((PrimeField(3, 5),))
    with pytest.raises(NotPIntegral):
        Poly((F(1, 5),)).reduce_mod(5)
    with pytest.raises(NotPrime):
        Poly((1,)).reduce_mod(8)


@given(p=int_polys, q=int_polys, prime=st.sampled_from((2, 3, 5, 7, 13)))
@many
def test_reduce_mod_is_ring_homomorphism(p, q, prime):
    assert (p * q).reduce_mod(prime) == p.reduce_mod(prime) * q.reduce_mod(prime)
    assert (p + q).reduce_mod(prime) == p.reduce_mod(prime) + q.reduce_mod(prime)


# -- rational functions --------------------------------------------------------------------

def test_ratfun_examples():
    r = RationalFunction(Poly((0, 0, 3)), Poly((-1, 0, 0, 1)))
    assert r.num == Poly((0, 0, 3)) and r.den == Poly((-1, 0, 0, 1))
    r = RationalFunction(Poly((-1, 0, 1)), Poly((-1, 1)))
    assert r.num == Poly((1, 1)) and r.den == ONE
    # T_1'/T_1 - T_0'/T_0 with T_1 = x, T_0 = 1
    r = RationalFunction(ONE * ONE - X * ZERO, X * ONE)
    assert r.num == ONE and r.den == X


def test_ratfun_zero_denominator():
    with pytest.raises(ZeroDenominator):
        RationalFunction(ONE, ZERO)


def test_ratfun_denominator_sign_and_zero():
    r = RationalFunction(Poly((1,)), Poly((-2,)))
    assert r.den.lead > 0 and r.num == Poly((-1,)) and r.den == Poly((2,))
    assert RationalFunction(ZERO, Poly((0, 5))).den == ONE


@given(num=int_polys, den=nonzero_int_polys,
       k=st.one_of(st.integers(-40, 40).filter(bool).map(lambda c: Poly((c,))),
                   st.lists(ints, min_size=2, max_size=3).map(Poly).filter(lambda p: not p.is_zero())))
@settings(max_examples=500, deadline=None)
def test_ratfun_canonical_form_unique(num, den, k):
    assert RationalFunction(num, den) == RationalFunction(num * k, den * k)


def test_ratfun_arithmetic():
    one_over_x = RationalFunction(ONE, X)
    assert one_over_x + one_over_x == RationalFunction(Poly((2,)), X)
    assert one_over_x - one_over_x == RationalFunction(ZERO)
    assert (one_over_x * one_over_x).den == X * X
    assert one_over_x.derivative() == RationalFunction(Poly((-1,)), X * X)


@given(a=int_polys, b=nonzero_int_polys)
@settings(max_examples=300, deadline=None)
def test_gcd_divides_both(a, b):
    g = gcd_poly(a, b)
    assert not a.is_zero() or not b.is_zero() or g.is_zero()
    if not g.is_zero():
        assert g.lead > 0
        assert a.is_zero() or a.try_exact_div(g) is not None
        assert b.try_exact_div(g) is not None


def test_poly_divmod_field():
    q, r = poly_divmod(Poly((F(1), F(0), F(1))), Poly((F(1), F(1))))
    assert q == Poly((F(-1), F(1))) and r == Poly((F(2),))
    with pytest.raises(ZeroDivisionError):
        poly_divmod(ONE, ZERO)
