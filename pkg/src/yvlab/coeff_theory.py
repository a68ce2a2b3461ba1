"""Coefficient laws of the Yablonskii-Vorob'ev family.

Three groups of exact results live here:

* the closed form for the lowest coefficient t_0(n), split over the residue
  of n mod 3 (with its general-parameter variant, where the power of 1/3
  becomes a power of a/3);
* the Wronskian identity T_{n-1} T'_{n+1} - T'_{n-1} T_{n+1} = (2n+1) T_n^2
  and the constant-term identities it induces, such as
  t_0(3m-1) t_0(3m+1) = (6m+1) t_0(3m)^2;
* the ratio polynomials: for fixed j the ratio t_j(n)/t_0(n) along each
  residue class n = 3m-1, 3m, 3m+1 is a polynomial in m (written
  a~_j, b~_j, c~_j), computed here by the three coupled convolution
  recursions that determine b~_{k+1}, a~_{k+1}, c~_{k+1} in that order.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonIntegralFormulaValue
from .polycore import ONE, Poly, poly_divmod
from .schur_det import mu
from .yv_engine import YvSequenceCache


@dataclass(frozen=True)
class LowestCoeffFormula:
    """The closed-form value of t_0(n), with its branch bookkeeping."""

    n: int
    branch: str  # "3m-1", "3m" or "3m+1"
    m: int
    a: int
    value: int


def _branch(n: int) -> tuple[str, int]:
    r = n % 3
    if r == 2:
        return "3m-1", (n + 1) // 3
    if r == 0:
        return "3m", n // 3
    return "3m+1", (n - 1) // 3


def lowest_coeff_formula(n: int, a: int = 1) -> LowestCoeffFormula:
    """Closed form for t_0(n), n >= 1; integrality of the result is asserted."""
    if n < 1:
        raise ValueError("the lowest-coefficient formula requires n >= 1")
    branch, m = _branch(n)
    if branch == "3m-1":
        denom = mu(m - 1) ** 2 * mu(m)
        exp = (3 * m - 1) * m // 2
    elif branch == "3m":
        denom = mu(m - 1) * mu(m) ** 2
        exp = (3 * m + 1) * m // 2
    else:
        denom = mu(m) ** 3
        exp = 3 * (m + 1) * m // 2
    if a == 1:
        value = Fraction((-1) ** m * mu(n), 3**exp * denom)
    else:
        value = Fraction(a, 3) ** exp * Fraction((-1) ** m * mu(n), denom)
    if value.denominator != 1:
        raise NonIntegralFormulaValue(f"t_0({n}) came out as {value}")
    return LowestCoeffFormula(n, branch, m, a, int(value))


def t0_formula(n: int, a: int = 1) -> int:
    """The exact integer t_0(n) from the closed form."""
    return lowest_coeff_formula(n, a).value


def wronskian_check(n: int, cache: YvSequenceCache | None = None) -> bool:
    """Whether T_{n-1} T'_{n+1} - T'_{n-1} T_{n+1} = (2n+1) T_n^2 exactly.

    n = 0 is allowed: T_{-1} = T_0 through the negative-index symmetry.
    """
    cache = cache or YvSequenceCache(1)
    lo = cache.get(n - 1).expand()
    mid = cache.get(n).expand()
    hi = cache.get(n + 1).expand()
    left = lo * hi.derivative() - lo.derivative() * hi
    return left == (mid * mid).scaled(2 * n + 1)


def key_identity_check(m: int, cache: YvSequenceCache | None = None) -> bool:
    """Constant-term identities coming from the Wronskian relation.

    Checks t_0(3m-1) t_0(3m+1) = (6m+1) t_0(3m)^2 and its companion
    t_0(3m) t_0(3m-2) = -(6m-1) t_0(3m-1)^2, both exactly.
    """
    if m < 1:
        raise ValueError("key_identity_check requires m >= 1")
    cache = cache or YvSequenceCache(1)
    t0 = lambda n: cache.get(n).lowest
    main = t0(3 * m - 1) * t0(3 * m + 1) == (6 * m + 1) * t0(3 * m) ** 2
    companion = t0(3 * m) * t0(3 * m - 2) == -(6 * m - 1) * t0(3 * m - 1) ** 2
    return main and companion


@dataclass(frozen=True)
class RatioTable:
    """The ratio polynomials a~_j, b~_j, c~_j in the variable m, j <= J."""

    J: int
    a: tuple[Poly, ...]
    b: tuple[Poly, ...]
    c: tuple[Poly, ...]

    def family(self, name: str) -> tuple[Poly, ...]:
        return {"a": self.a, "b": self.b, "c": self.c}[name]


def ratio_table(J: int) -> RatioTable:
    """Compute the ratio polynomials up to index J.

    Each induction step k -> k+1 solves for b~_{k+1}, then a~_{k+1}, then
    c~_{k+1}: the c-recursion consumes a~_{k+1}(m+1) and b~_{k+1}(m), so
    the order is forced.  The divisors 3(k+1)(3k+2) and (3k+1)(3k+4) are
    never zero for k >= 0; all arithmetic is exact over Q[m].
    """
    if J < 0:
        raise ValueError("ratio_table requires J >= 0")
    a = [ONE]
    b = [ONE]
    c = [ONE]
    six_p1 = Poly((1, 6))   # 6m + 1
    six_m1 = Poly((-1, 6))  # 6m - 1
    for k in range(J):
        conv_ca = sum((c[i] * a[k - i] for i in range(k + 1)), Poly())
        conv_bb = sum((b[i] * b[k - i] for i in range(k + 1)), Poly())
        wt_b = sum((b[i] * b[k + 1 - i] * (3 * i * (3 * k - 6 * i + 4))
                    for i in range(1, k + 1)), Poly())
        b_next = (six_p1 * conv_ca - conv_bb + wt_b).scaled(
            Fraction(1, 3 * (k + 1) * (3 * k + 2)))

        conv_cb = sum((c[i].shift_arg(-1) * b[k - i] for i in range(k + 1)), Poly())
        conv_aa = sum((a[i] * a[k - i] for i in range(k + 1)), Poly())
        wt_a = sum((a[i] * a[k + 1 - i] * (3 * i * (3 * k - 6 * i + 4))
                    for i in range(1, k + 1)), Poly())
        a_next = (-(six_m1 * conv_cb) - conv_aa + wt_a).scaled(
            Fraction(1, 3 * (k + 1) * (3 * k + 2)))

        a.append(a_next)
        b.append(b_next)

        conv_ab = sum((a[i].shift_arg(1) * b[k + 1 - i] for i in range(k + 2)), Poly())
        conv_cc = sum((c[i] * c[k - i] for i in range(k + 1)), Poly())
        wt_c = sum((c[i] * c[k + 1 - i] * ((3 * i + 1) * (3 * k - 6 * i + 4))
                    for i in range(1, k + 1)), Poly())
        c.append((-conv_ab - conv_cc + wt_c).scaled(
            Fraction(1, (3 * k + 1) * (3 * k + 4))))
    return RatioTable(J, tuple(a), tuple(b), tuple(c))


@dataclass(frozen=True)
class RatioMismatch:
    n: int
    j: int
    expected: Fraction  # value of the table polynomial at m
    actual: Fraction    # exact coefficient ratio t_j(n)/t_0(n)


def ratio_consistency(n_max: int, J: int,
                      cache: YvSequenceCache | None = None,
                      table: RatioTable | None = None) -> list[RatioMismatch]:
    """Compare table polynomials at m against exact ratios from the recursion.

    For every 0 <= n <= n_max and 0 <= j <= J the appropriate family
    polynomial evaluated at the appropriate m must equal t_j(n)/t_0(n),
    where t_j(n) = 0 beyond the top stored coefficient.  Returns the list
    of mismatches (empty on success).
    """
    cache = cache or YvSequenceCache(1)
    table = table or ratio_table(J)
    families = {"3m-1": table.a, "3m": table.b, "3m+1": table.c}
    mismatches = []
    for n in range(n_max + 1):
        poly = cache.get(n)
        t0 = poly.lowest
        assert t0 != 0
        branch, m = _branch(n)
        fam = families[branch]
        for j in range(J + 1):
            tj = poly.coeffs[j] if j < len(poly.coeffs) else 0
            actual = Fraction(tj, t0)
            expected = Fraction(fam[j](m))
            if expected != actual:
                mismatches.append(RatioMismatch(n, j, expected, actual))
    return mismatches


def _flip(p: Poly) -> Poly:
    """q(m) = p(-m)."""
    return Poly(tuple(c if i % 2 == 0 else -c for i, c in enumerate(p.coeffs)))


def symmetry_check(J: int, table: RatioTable | None = None) -> bool:
    """Whether b~_j(m) = a~_j(-m) and c~_j(m) = c~_j(-m-1) for all j <= J."""
    table = table or ratio_table(J)
    for j in range(J + 1):
        if table.b[j] != _flip(table.a[j]):
            return False
        if table.c[j] != _flip(table.c[j]).shift_arg(1):
            return False
    return True


@dataclass(frozen=True)
class DivisibilityReport:
    """Successive divisibility of the ratio polynomials in Q[m].

    a_family[j] records whether a~_j divides a~_{j+1}; c_family[j] whether
    c~_j divides c~_{j+1}.  The observed pattern is: the a-family divides
    for j <= 3 and first fails at j = 4; the c-family divides for
    2 <= j <= 5 and first fails at j = 6.
    """

    a_family: dict[int, bool]
    c_family: dict[int, bool]

    @property
    def as_expected(self) -> bool:
        return (all(self.a_family[j] for j in range(4))
                and not self.a_family[4]
                and all(self.c_family[j] for j in range(2, 6))
                and not self.c_family[6])


def divisibility_observations(table: RatioTable | None = None) -> DivisibilityReport:
    """Check a~_j | a~_{j+1} for j <= 4 and c~_j | c~_{j+1} for 2 <= j <= 6."""
    table = table or ratio_table(7)
    if table.J < 7:
        raise ValueError("divisibility observations need the table up to J = 7")

    def divides(p: Poly, q: Poly) -> bool:
        _, rem = poly_divmod(q, p)
        return rem.is_zero()

    a_family = {j: divides(table.a[j], table.a[j + 1]) for j in range(5)}
    c_family = {j: divides(table.c[j], table.c[j + 1]) for j in range(2, 7)}
    return DivisibilityReport(a_family, c_family)
