"""Determinant route to the Yablonskii-Vorob'ev polynomials.

The generating function exp(x*lam + lam^3/3) = sum_k h_k(x) lam^k defines a
family of rational polynomials h_k (degree k, leading coefficient 1/k!).
The 2-core Schur polynomial of the depth-n staircase partition is the
Jacobi-Trudi determinant

    tau_n(x) = det( h_{j-2i+n+1}(x) ),  1 <= i,j <= n,

with h_k = 0 for k < 0, and T_n(x) = mu_n tau_n(x) where mu_n is the
product of the first n odd double factorials.  This module is the second,
independent construction of T_n used to cross-validate the recursion.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InternalMismatch, NonIntegralResult
from .polycore import ONE, Poly, X, ZERO
from .yv_engine import YvPolynomial, stride_offset, triangular


@lru_cache(maxsize=None)
def mu(n: int) -> int:
    """mu_n = prod_{k=1..n} (2k-1)!!, with mu_0 = 1 (empty product)."""
    if n < 0:
        raise ValueError("mu is defined for n >= 0")
    if n == 0:
        return 1
    df = 1
    for odd in range(1, 2 * n, 2):
        df *= odd
    return mu(n - 1) * df


@dataclass(frozen=True)
class HkFamily:
    """h_0..h_K and their monic integer normalizations k!*h_k."""

    K: int
    h: tuple[Poly, ...]
    h_tilde: tuple[Poly, ...]

    def entry(self, k: int) -> Poly:
        """h_k with the convention h_k = 0 for k < 0."""
        return self.h[k] if k >= 0 else ZERO


def _hk_explicit(k: int) -> Poly:
    # h_k(x) = sum_{i=0..floor(k/3)} x^(k-3i) / (3^i i! (k-3i)!)
    coeffs = [Fraction(0)] * (k + 1)
    for i in range(k // 3 + 1):
        coeffs[k - 3 * i] = Fraction(1, 3**i * math.factorial(i) * math.factorial(k - 3 * i))
    return Poly(coeffs)


def hk_family(K: int) -> HkFamily:
    """Build h_0..h_K three different ways and insist they agree.

    The rational family comes from (k+1) h_{k+1} = x h_k + h_{k-2}; it is
    checked against the explicit closed-form sum, and the integer family
    k!*h_k is checked against its own recursion
    ht_{k+1} = x ht_k + k(k-1) ht_{k-2}.
    """
    if K < 0:
        raise ValueError("hk_family requires K >= 0")
    hs = [ONE, X, Poly((0, 0, Fraction(1, 2)))][: K + 1]
    for k in range(2, K):
        hs.append((hs[k].mul_xpow(1) + hs[k - 2]).scaled(Fraction(1, k + 1)))
    for k, h in enumerate(hs):
        if h != _hk_explicit(k):
            raise InternalMismatch(f"h_{k}: recursion and explicit sum disagree")

    hts: list[Poly] = []
    fact = 1
    for k, h in enumerate(hs):
        fact = fact * k if k else 1
        coeffs = [Fraction(c) * fact for c in h.coeffs]
        if any(c.denominator != 1 for c in coeffs):
            raise InternalMismatch(f"k!*h_{k} is not integral")
        hts.append(Poly(tuple(int(c) for c in coeffs)))
    for k in range(2, K):
        expected = hts[k].mul_xpow(1) + hts[k - 2].scaled(k * (k - 1))
        if expected != hts[k + 1]:
            raise InternalMismatch(f"integer recursion fails at k={k + 1}")
    for k, ht in enumerate(hts):
        if ht.degree != k or ht.lead != 1:
            raise InternalMismatch(f"k!*h_{k} is not monic of degree {k}")
    return HkFamily(K, tuple(hs), tuple(hts))


@dataclass(frozen=True)
class StaircaseMatrix:
    """The n x n Jacobi-Trudi matrix with entries h_{j-2i+n+1}."""

    n: int
    entries: tuple[tuple[Poly, ...], ...]


def staircase_matrix(n: int, fam: HkFamily | None = None) -> StaircaseMatrix:
    if n < 0:
        raise ValueError("staircase_matrix requires n >= 0")
    if fam is None or fam.K < max(2 * n - 1, 0):
        fam = hk_family(max(2 * n - 1, 0))
    rows = tuple(
        tuple(fam.entry(j - 2 * i + n + 1) for j in range(1, n + 1))
        for i in range(1, n + 1))
    return StaircaseMatrix(n, rows)


def _row_denominator(row) -> int:
    d = 1
    for entry in row:
        for c in entry.coeffs:
            if isinstance(c, Fraction):
                d = d * c.denominator // math.gcd(d, c.denominator)
    return d


def det_bareiss(mat) -> Poly:
    """Exact determinant of a square matrix of polynomials over Q.

    Fraction-free (Bareiss) elimination: every update divides exactly by
    the previous pivot, so intermediates stay polynomial.  Rows are first
    scaled to integer polynomials (the scaling divides back out at the
    end) so the elimination itself runs entirely over Z[x].  A zero pivot
    swaps with the first lower row that is nonzero in that column, with
    the sign tracked; if no such row exists the determinant is zero.
    """
    n = len(mat)
    if n == 0:
        return ONE
    scale = Fraction(1)
    M = []
    for row in mat:
        if len(row) != n:
            raise ValueError("determinant of a non-square matrix")
        d = _row_denominator(row)
        scale = scale / d
        M.append([Poly(tuple(int(c * d) for c in e.coeffs)) for e in row])

    sign = 1
    prev = ONE
    for k in range(n - 1):
        if M[k][k].is_zero():
            for i in range(k + 1, n):
                if not M[i][k].is_zero():
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                elt = pivot * M[i][j] - M[i][k] * M[k][j]
                M[i][j] = elt if k == 0 else elt.exact_div(prev)
            M[i][k] = ZERO
        prev = pivot
    det = M[n - 1][n - 1]
    if sign < 0:
        det = -det
    return Poly(tuple(Fraction(c) * scale for c in det.coeffs))


def tau_det(n: int, fam: HkFamily | None = None) -> Poly:
    """The 2-core Schur polynomial tau_n as an exact rational polynomial.

    tau_0 = 1 by the empty-determinant convention.
    """
    return det_bareiss(staircase_matrix(n, fam).entries)


def yv_via_determinant(n: int, fam: HkFamily | None = None) -> YvPolynomial:
    """T_n = mu_n * tau_n, repackaged in compressed stride-3 form (a = 1)."""
    tau = tau_det(n, fam)
    scaled = tau.scaled(mu(n))
    delta = stride_offset(n)
    d = triangular(n)
    compressed = [0] * ((d - delta) // 3 + 1)
    for e, c in enumerate(scaled.coeffs):
        c = Fraction(c)
        if c.denominator != 1:
            raise NonIntegralResult(f"coefficient of x^{e} in mu_{n} tau_{n} is {c}")
        if c == 0:
            continue
        if e % 3 != delta % 3 or e > d:
            raise NonIntegralResult(f"unexpected support at x^{e} in mu_{n} tau_{n}")
        compressed[(e - delta) // 3] = int(c)
    poly = YvPolynomial(n, 1, delta, tuple(compressed))
    if poly.coeffs[-1] != 1:
        raise NonIntegralResult(f"mu_{n} tau_{n} is not monic of degree {d}")
    return poly


def factorial_det_check(n: int) -> Fraction:
    """det( 1/(j-2i+n+1)! ) for 1 <= i,j <= n, with 1/l! = 0 when l < 0.

    The caller compares the value against 1/mu_n.
    """
    if n < 1:
        raise ValueError("factorial_det_check requires n >= 1")

    def cell(i, j):
        l = j - 2 * i + n + 1
        return Poly((Fraction(1, math.factorial(l)),)) if l >= 0 else ZERO

    mat = [[cell(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    det = det_bareiss(mat)
    return Fraction(det.coeffs[0]) if det.coeffs else Fraction(0)
