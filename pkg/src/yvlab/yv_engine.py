"""Yablonskii-Vorob'ev polynomials via the bilinear recursion.

The sequence T_n is generated by

    T_{n+1} T_{n-1} = x T_n^2 + a (T_n T_n'' - (T_n')^2),   T_0 = 1, T_1 = x,

with a = 1 as the reference normalization (a = -4 gives the classical one).
T_n is monic of degree d_n = n(n+1)/2 and is supported on exponents
congruent to delta mod 3, where delta = 1 iff n = 1 mod 3.  We therefore
store only the coefficients t_j(n) of x^(3j+delta) and do the whole
recursion step on these compressed vectors: writing T_n = x^delta A(u)
with u = x^3, the right-hand side is again x^e R(u) for the appropriate
offset e, and the division by T_{n-1} is an exact division of u-polynomials.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRange
from .polycore import Poly


def triangular(n: int) -> int:
    """d_n = n(n+1)/2, the degree of T_n (valid for negative n as well)."""
    return n * (n + 1) // 2


def stride_offset(n: int) -> int:
    """The exponent offset delta of T_n: 1 iff n = 1 mod 3, else 0."""
    return 1 if n % 3 == 1 else 0


@dataclass(frozen=True)
class YvPolynomial:
    """Compressed representation of T_n: coeffs[j] multiplies x^(3j+delta)."""

    n: int
    a: int
    delta: int
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return triangular(self.n)

    def coefficient(self, j: int) -> int:
        """t_j(n), the coefficient of x^(3j+delta)."""
        if not 0 <= j < len(self.coeffs):
            raise IndexOutOfRange(f"coefficient index {j} outside 0..{len(self.coeffs) - 1}")
        return self.coeffs[j]

    @property
    def lowest(self) -> int:
        """t_0(n), the coefficient of the lowest-degree term."""
        return self.coeffs[0]

    def expand(self) -> Poly:
        """Full dense polynomial in x, zeros off the stride-3 support."""
        out = [0] * (self.degree + 1)
        for j, c in enumerate(self.coeffs):
            out[3 * j + self.delta] = c
        return Poly(out)


def _next_row(prev: tuple[int, ...], cur: tuple[int, ...], delta: int, a: int) -> tuple[int, ...]:
    """One recursion step on compressed vectors.

    With T = x^delta A(u), u = x^3, the combination x T^2 + a (T T'' - T'^2)
    collapses to a single u-polynomial:

        delta = 0:  offset 1,  A^2 + a (A B - u C^2)
        delta = 1:  offset 0,  u (A^2 + a A B) - a C^2

    where B and C carry the second- and first-derivative weights.  The
    offsets always match those of T_{n+1} T_{n-1}, so the quotient by the
    compressed T_{n-1} is an exact division in Z[u].
    """
    A = Poly(cur)
    if delta == 0:
        B = Poly(tuple(cur[j] * (3 * j) * (3 * j - 1) for j in range(1, len(cur))))
        C = Poly(tuple(cur[j] * (3 * j) for j in range(1, len(cur))))
        # A^2 + a A B folds into one product A (A + a B)
        rhs = A * (A + B.scaled(a)) - (C * C).scaled(a).mul_xpow(1)
    else:
        B = Poly(tuple(cur[j] * (3 * j + 1) * (3 * j) for j in range(1, len(cur))))
        C = Poly(tuple(cur[j] * (3 * j + 1) for j in range(len(cur))))
        rhs = (A * (A + B.scaled(a))).mul_xpow(1) - (C * C).scaled(a)
    return rhs.exact_div(Poly(prev)).coeffs


class YvSequenceCache:
    """The sequence T_0..T_N for one parameter a, extended on demand.

    Negative indices are served through the symmetry T_{-n-1} = T_n.
    Values handed out are immutable; extension is single-writer.
    """

    def __init__(self, a: int = 1):
        if not isinstance(a, int) or a == 0:
            raise ValueError("recursion parameter a must be a nonzero integer")
        self.a = a
        self._rows: list[tuple[int, ...]] = [(1,), (1,)]  # T_0 = 1, T_1 = x

    def up_to(self, n: int) -> None:
        while len(self._rows) <= n:
            k = len(self._rows) - 1  # computing T_{k+1}
            row = _next_row(self._rows[k - 1], self._rows[k], stride_offset(k), self.a)
            d = triangular(k + 1)
            assert len(row) == (d - stride_offset(k + 1)) // 3 + 1 and row[-1] == 1
            self._rows.append(row)

    def get(self, n: int) -> YvPolynomial:
        base = n if n >= 0 else -n - 1
        self.up_to(base)
        return YvPolynomial(n, self.a, stride_offset(n), self._rows[base])


def yv_compute(n: int, a: int = 1, cache: YvSequenceCache | None = None) -> YvPolynomial:
    """T_n for n >= 0, computed bottom-up by the recursion."""
    if n < 0:
        raise ValueError("yv_compute requires n >= 0; use yv_compute_negative")
    cache = cache or YvSequenceCache(a)
    return cache.get(n)


def yv_compute_negative(n: int, a: int = 1, cache: YvSequenceCache | None = None) -> YvPolynomial:
    """T_n for n < 0 through the symmetry T_{-n-1} = T_n."""
    if n >= 0:
        raise ValueError("yv_compute_negative requires n < 0")
    cache = cache or YvSequenceCache(a)
    return cache.get(n)


def yv_expand(p: YvPolynomial) -> Poly:
    """Dense integer polynomial for a compressed T_n."""
    return p.expand()


def yv_coefficient(n: int, j: int, a: int = 1, cache: YvSequenceCache | None = None) -> int:
    """t_j(n) for n >= 0."""
    if n < 0:
        raise ValueError("coefficient access requires n >= 0")
    cache = cache or YvSequenceCache(a)
    return cache.get(n).coefficient(j)
