"""Painleve II certificates for the rational solutions.

For each n >= 1 the logarithmic-derivative difference

    y = T_n'/T_n - T_{n-1}'/T_{n-1}

is a rational solution of y'' = 2y^3 - 4xy + 4n in the a = 1 normalization.
The certificate clears denominators: with y = u/v (u, v the unreduced
numerator and denominator), v^3 y'' is again a polynomial, so the residual
y'' - 2y^3 + 4xy - 4n times v^3 reduces to a single polynomial that must
vanish identically.  No gcd is ever taken on that path.
"""
from __future__ import annotations

from dataclasses import dataclass

from .polycore import Poly, RationalFunction, X
from .yv_engine import YvSequenceCache


@dataclass(frozen=True)
class PiiCertificate:
    """Residual of the Painleve II equation for one index n.

    verdict is True/False only for a = 1 (the normalization the equation is
    stated in); for other a the residual is reported with verdict None.
    """

    n: int
    a: int
    residual: RationalFunction

    @property
    def verdict(self) -> bool | None:
        if self.a != 1:
            return None
        return self.residual.is_zero()


def _log_derivative_parts(n: int, cache: YvSequenceCache) -> tuple[Poly, Poly]:
    """Unreduced numerator and denominator of T_n'/T_n - T_{n-1}'/T_{n-1}."""
    hi = cache.get(n).expand()
    lo = cache.get(n - 1).expand()
    return hi.derivative() * lo - hi * lo.derivative(), hi * lo


def pii_solution(n: int, a: int = 1, cache: YvSequenceCache | None = None) -> RationalFunction:
    """The candidate solution y, in canonical (gcd-reduced) form."""
    if n < 1:
        raise ValueError("pii_solution requires n >= 1")
    cache = cache or YvSequenceCache(a)
    u, v = _log_derivative_parts(n, cache)
    return RationalFunction(u, v)


def pii_residual(n: int, a: int = 1, cache: YvSequenceCache | None = None) -> PiiCertificate:
    """Exact residual y'' - 2y^3 + 4xy - 4n with denominators cleared.

    With y = u/v and w = u'v - uv', one has v^3 y'' = (u''v - uv'')v - 2v'w,
    so the residual times v^3 is the polynomial

        (u''v - uv'')v - 2v'w - 2u^3 + 4x u v^2 - 4n v^3,

    and the certificate passes iff that polynomial is identically zero.
    """
    if n < 1:
        raise ValueError("pii_residual requires n >= 1")
    cache = cache or YvSequenceCache(a)
    u, v = _log_derivative_parts(n, cache)
    du, dv = u.derivative(), v.derivative()
    w = du * v - u * dv
    v2 = v * v
    cleared = ((u.derivative(2) * v - u * v.derivative(2)) * v
               - (dv * w).scaled(2)
               - (u * u * u).scaled(2)
               + (X * u * v2).scaled(4)
               - (v2 * v).scaled(4 * n))
    return PiiCertificate(n, a, RationalFunction(cleared, v2 * v))
