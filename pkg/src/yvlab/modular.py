"""Reduction of the Yablonskii-Vorob'ev polynomials modulo primes.

For a prime p > 3 the congruence T_{mp+n} = x^(d_{mp+n} - d_n) T_n mod p
holds for all m, n >= 0; its special cases collapse T_p, T_{p-1}, T_{p+1}
to monomials, and the negative-index symmetry turns it into the mirrored
form T_{p-1-i} = x^(d_{p-1-i} - d_i) T_i mod p.  For p = 3 the polynomials
collapse to powers of (x - a), and mod 2 with even a everything is a
monomial.  All checks here recompute both sides over Z, reduce, and
compare coefficient-wise; nothing is trusted from the statements being
verified.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRange, NotPrime, PrimeTooSmall
from .polycore import ONE, Poly, PrimeField, is_prime
from .schur_det import mu
from .yv_engine import YvSequenceCache, triangular


@dataclass(frozen=True)
class ModReport:
    """Outcome of one congruence check over GF(p)."""

    prime: int
    indices: tuple[int, ...]
    label: str
    expected: Poly | None  # None when no claim is made (observation only)
    computed: Poly

    @property
    def verdict(self) -> bool | None:
        """True/False for a checked congruence, None for a bare reduction."""
        if self.expected is None:
            return None
        return self.expected == self.computed


def _require_prime_gt3(p: int) -> None:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p <= 3:
        raise PrimeTooSmall(f"the congruence needs a prime > 3, got {p}")


def _reduced(cache: YvSequenceCache, n: int, p: int) -> Poly:
    return cache.get(n).expand().reduce_mod(p)


def _monomial(degree: int, p: int) -> Poly:
    return Poly((PrimeField(1, p),)).mul_xpow(degree)


def check_shift_congruence(p: int, m: int, n: int,
                           cache: YvSequenceCache | None = None) -> ModReport:
    """T_{mp+n} = x^(d_{mp+n} - d_n) T_n mod p, for prime p > 3."""
    _require_prime_gt3(p)
    if m < 0 or n < 0:
        raise IndexOutOfRange("shift congruence needs m, n >= 0")
    cache = cache or YvSequenceCache(1)
    computed = _reduced(cache, m * p + n, p)
    shift = triangular(m * p + n) - triangular(n)
    expected = _reduced(cache, n, p).mul_xpow(shift)
    return ModReport(p, (m, n), f"T_({m}*{p}+{n}) vs x^{shift} T_{n} mod {p}",
                     expected, computed)


def check_prime_collapse(p: int, cache: YvSequenceCache | None = None) -> ModReport:
    """T_p = x^(d_p) mod p, for prime p > 3."""
    _require_prime_gt3(p)
    cache = cache or YvSequenceCache(1)
    return ModReport(p, (p,), f"T_{p} vs x^{triangular(p)} mod {p}",
                     _monomial(triangular(p), p), _reduced(cache, p, p))


def check_monomial_neighbors(p: int, cache: YvSequenceCache | None = None
                             ) -> tuple[ModReport, ModReport]:
    """T_{p+1} = x^(d_{p+1}) and T_{p-1} = x^(d_{p-1}) mod p."""
    _require_prime_gt3(p)
    cache = cache or YvSequenceCache(1)
    reports = []
    for n in (p + 1, p - 1):
        reports.append(ModReport(p, (n,), f"T_{n} vs x^{triangular(n)} mod {p}",
                                 _monomial(triangular(n), p), _reduced(cache, n, p)))
    return tuple(reports)


def check_mirror_congruence(p: int, i: int,
                            cache: YvSequenceCache | None = None) -> ModReport:
    """T_{p-1-i} = x^(d_{p-1-i} - d_i) T_i mod p, for 0 <= i <= p-1.

    For i > p-1-i the exponent is negative and the congruence is a Laurent
    identity; both sides are then multiplied by the inverse monomial so the
    comparison stays inside GF(p)[x].
    """
    _require_prime_gt3(p)
    if not 0 <= i <= p - 1:
        raise IndexOutOfRange(f"mirror congruence needs 0 <= i <= {p - 1}")
    cache = cache or YvSequenceCache(1)
    computed = _reduced(cache, p - 1 - i, p)
    expected = _reduced(cache, i, p)
    shift = triangular(p - 1 - i) - triangular(i)
    if shift >= 0:
        expected = expected.mul_xpow(shift)
    else:
        computed = computed.mul_xpow(-shift)
    return ModReport(p, (i,), f"T_{p - 1 - i} vs x^{shift} T_{i} mod {p}",
                     expected, computed)


def p_adic_valuation(value: int, p: int) -> int:
    """Exponent of the largest power of p dividing the nonzero integer."""
    if value == 0:
        raise ValueError("the zero integer has no finite valuation")
    v = 0
    while value % p == 0:
        value //= p
        v += 1
    return v


def mu_valuation_check(p: int) -> bool:
    """Whether the exact power of p dividing mu_p is p^((p+1)/2)."""
    _require_prime_gt3(p)
    return p_adic_valuation(mu(p), p) == (p + 1) // 2


def _pow_mod3(base: Poly, e: int) -> Poly:
    """base^e over GF(3)[x], using cubing-as-reindexing (Frobenius).

    Over GF(3), q(x)^3 = q(x^3), so a left-to-right base-3 exponentiation
    only ever multiplies by base or base^2.
    """
    sq = base * base
    result = ONE
    for digit in _base3_digits(e):
        if not result.is_zero() and result != ONE:
            spread = [PrimeField(0, 3)] * (3 * len(result.coeffs) - 2)
            for idx, coeff in enumerate(result.coeffs):
                spread[3 * idx] = coeff
            result = Poly(spread)
        if digit == 1:
            result = result * base
        elif digit == 2:
            result = result * sq
    return result


def _base3_digits(e: int) -> list[int]:
    digits = []
    while e:
        digits.append(e % 3)
        e //= 3
    return digits[::-1] or [0]


def check_small_primes(a: int, n: int, cache: YvSequenceCache | None = None
                       ) -> tuple[ModReport, ModReport]:
    """Closed forms mod 3 and mod 2 for the parameter-a sequence.

    Mod 3 (any integer a): T_n = (x-a)^(d_n) when n = 0, 2 mod 3 and
    T_n = x (x-a)^(d_n - 1) when n = 1 mod 3.  Mod 2: T_n = x^(d_n) for
    even a; for odd a the reduction is reported without any verdict.
    """
    if n < 0:
        raise IndexOutOfRange("check_small_primes needs n >= 0")
    cache = cache or YvSequenceCache(a)
    if cache.a != a:
        raise ValueError("cache parameter does not match a")
    d = triangular(n)
    linear = Poly((-a, 1)).reduce_mod(3)
    if n % 3 == 1:
        expected3 = _pow_mod3(linear, d - 1).mul_xpow(1)
    else:
        expected3 = _pow_mod3(linear, d)
    report3 = ModReport(3, (a, n), f"T_{n} (a={a}) vs (x-{a})-power mod 3",
                        expected3, _reduced(cache, n, 3))
    expected2 = _monomial(d, 2) if a % 2 == 0 else None
    report2 = ModReport(2, (a, n), f"T_{n} (a={a}) mod 2",
                        expected2, _reduced(cache, n, 2))
    return report3, report2
