"""Exact dense univariate polynomial arithmetic over Z, Q and GF(p).

A polynomial is a tuple of coefficients in ascending degree, trailing zeros
trimmed, so the zero polynomial is the empty tuple.  Coefficients are plain
Python ints (arbitrary precision), ``fractions.Fraction`` values, or
:class:`PrimeField` elements; the operations are generic over these.

Large integer-coefficient products and exact quotients go through Kronecker
substitution: the polynomial is evaluated at a power of two large enough
that every coefficient of the result occupies its own block of bits, the
work is done by one gmpy2 big-integer operation, and the coefficients are
read back out of the bit blocks.  Schoolbook multiplication and synthetic
long division remain as the small-size and fallback paths; the Kronecker
quotient is always verified by one multiplication before it is accepted.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import gmpy2

from .errors import NonExactDivision, NotPIntegral, NotPrime, ZeroDenominator

NEG_INF = float("-inf")  # degree of the zero polynomial; compares below all ints

_KRONECKER_MUL_CUTOFF = 1024   # la*lb above which packed multiplication wins
_KRONECKER_DIV_CUTOFF = 4096   # lq*lr above which packed division wins
_QQ_CLEAR_CUTOFF = 64          # la*lb above which Fraction ops get cleared to Z


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk-scale moduli)."""
    if n < 2:
        return False
    for q in (2, 3):
        if n % q == 0:
            return n == q
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


class PrimeField:
    """An element of the field with p elements, stored reduced to [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        if not is_prime(p):
            raise NotPrime(f"modulus {p} is not prime")
        self.value = value % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, PrimeField):
            if other.p != self.p:
                raise TypeError(f"mixed moduli {self.p} and {other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return None

    def __add__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return PrimeField(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return PrimeField(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return PrimeField(v - self.value, self.p)

    def __mul__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return PrimeField(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return PrimeField(self.value * pow(v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return PrimeField(v * pow(self.value, -1, self.p), self.p)

    def __pow__(self, e: int):
        return PrimeField(pow(self.value, e, self.p), self.p)

    def __neg__(self):
        return PrimeField(-self.value, self.p)

    def __eq__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return self.value == v

    def __hash__(self):
        return hash((self.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"PrimeField({self.value}, {self.p})"


# ---------------------------------------------------------------------------
# Integer-coefficient kernels (Kronecker substitution via gmpy2)
# ---------------------------------------------------------------------------

def _ones(length: int, s: int):
    # 1 + 2^s + 2^(2s) + ... with `length` terms
    return ((gmpy2.mpz(1) << (s * length)) - 1) // ((gmpy2.mpz(1) << s) - 1)


def _pack_signed(coeffs, s: int):
    """Evaluate sum(c_i * 2^(s*i)) exactly, coefficients of either sign."""
    h = 1 << (s - 1)
    return gmpy2.pack([c + h for c in coeffs], s) - h * _ones(len(coeffs), s)


def _unpack_signed(value, s: int, length: int) -> list[int]:
    """Recover `length` signed digits in (-2^(s-1), 2^(s-1)) from an evaluation."""
    h = 1 << (s - 1)
    shifted = value + h * _ones(length, s)
    if shifted < 0 or shifted.bit_length() > s * length:
        raise OverflowError("digit bound too small for unpacking")
    digits = gmpy2.unpack(gmpy2.mpz(shifted), s)
    digits.extend([0] * (length - len(digits)))
    return [int(d) - h for d in digits]


def _mul_int_schoolbook(a, b) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _mul_int_kronecker(a, b) -> list[int]:
    bound = min(len(a), len(b)) * max(map(abs, a)) * max(map(abs, b))
    if bound == 0:  # one factor is identically zero
        return [0] * (len(a) + len(b) - 1)
    s = bound.bit_length() + 2
    va = _pack_signed(a, s)
    vb = va if a is b else _pack_signed(b, s)
    return _unpack_signed(va * vb, s, len(a) + len(b) - 1)


def _mul_int(a, b) -> list[int]:
    if len(a) * len(b) >= _KRONECKER_MUL_CUTOFF:
        return _mul_int_kronecker(a, b)
    return _mul_int_schoolbook(a, b)


def _exact_div_int_synthetic(p, q) -> list[int]:
    """Long division over Z, aborting on the first inexact coefficient step."""
    lq = len(q)
    lead = q[-1]
    rem = list(p)
    out = [0] * (len(p) - lq + 1)
    for i in range(len(out) - 1, -1, -1):
        c = rem[i + lq - 1]
        if c:
            t, r = divmod(c, lead)
            if r:
                raise NonExactDivision("leading coefficient step not exact")
            out[i] = t
            for j in range(lq):
                rem[i + j] -= t * q[j]
    if any(rem):
        raise NonExactDivision("nonzero remainder")
    return out


def _exact_div_int(p, q) -> list[int]:
    lr = len(p) - len(q) + 1
    if len(q) * lr < _KRONECKER_DIV_CUTOFF:
        return _exact_div_int_synthetic(p, q)
    max_q = max(map(abs, q))
    s0 = max(max(map(abs, p)).bit_length(), max_q.bit_length()) + 16
    for attempt in range(4):
        s = s0 << attempt
        vq = _pack_signed(q, s)
        if vq == 0:
            break  # 2^s is a root of q; packed arithmetic cannot be used
        vp = _pack_signed(p, s)
        quo, rem = divmod(vp, vq)
        if rem != 0:
            # exact polynomial divisibility implies exact integer
            # divisibility of the evaluations at any point
            raise NonExactDivision("nonzero remainder")
        try:
            cand = _unpack_signed(quo, s, lr)
        except OverflowError:
            continue  # quotient coefficients larger than assumed; widen blocks
        # cand*q and p evaluate identically at 2^s by construction; when
        # both coefficient vectors fit the signed digit blocks, equal
        # evaluations force equal polynomials, so no product is needed.
        bound = min(lr, len(q)) * max(map(abs, cand)) * max_q
        if bound.bit_length() + 1 < s:
            return cand
        if _mul_int(cand, q) == list(p):
            return cand
    return _exact_div_int_synthetic(p, q)


# ---------------------------------------------------------------------------
# Generic coefficient helpers
# ---------------------------------------------------------------------------

def _coeff_exact_div(a, b):
    if isinstance(a, PrimeField) or isinstance(b, PrimeField):
        return a / b
    if isinstance(a, Fraction) or isinstance(b, Fraction):
        return Fraction(a) / Fraction(b)
    q, r = divmod(a, b)
    if r:
        raise NonExactDivision(f"{a} not divisible by {b}")
    return q


def _common_denominator(coeffs) -> int:
    d = 1
    for c in coeffs:
        if isinstance(c, Fraction):
            d = d * c.denominator // math.gcd(d, c.denominator)
    return d


def _to_int_list(coeffs, den: int) -> list[int]:
    out = []
    for c in coeffs:
        if isinstance(c, Fraction):
            out.append(c.numerator * (den // c.denominator))
        else:
            out.append(c * den)
    return out


class Poly:
    """Dense univariate polynomial; immutable, ascending coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = tuple(coeffs)
        end = len(coeffs)
        while end and not coeffs[end - 1]:
            end -= 1
        self.coeffs = coeffs[:end]

    # -- structure ---------------------------------------------------------

    @property
    def degree(self):
        """Degree of the polynomial; the zero polynomial has degree -inf."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self):
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] = out[i] - c
        return Poly(out)

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def scaled(self, c):
        """The polynomial with every coefficient multiplied by the scalar c."""
        if not c:
            return Poly()
        return Poly(tuple(a * c for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Poly):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return Poly()
            if any(isinstance(c, PrimeField) for c in a + b):
                return Poly(_mul_int_schoolbook(a, b))
            if all(type(c) is int for c in a) and all(type(c) is int for c in b):
                return Poly(_mul_int(a, a) if a == b else _mul_int(a, b))
            if len(a) * len(b) >= _QQ_CLEAR_CUTOFF:
                da, db = _common_denominator(a), _common_denominator(b)
                prod = _mul_int(_to_int_list(a, da), _to_int_list(b, db))
                return Poly(tuple(Fraction(c, da * db) for c in prod))
            return Poly(_mul_int_schoolbook(a, b))
        if isinstance(other, (int, Fraction, PrimeField)):
            return self.scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, PrimeField)):
            return self.scaled(other)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def mul_xpow(self, k: int):
        """Multiply by x^k (k >= 0)."""
        if not self.coeffs:
            return self
        return Poly((0,) * k + self.coeffs)

    # -- calculus and evaluation ---------------------------------------------

    def derivative(self, order: int = 1):
        """Formal derivative (iterated `order` times)."""
        p = self
        for _ in range(order):
            p = Poly(tuple(i * c for i, c in enumerate(p.coeffs) if i))
        return p

    def __call__(self, point):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def shift_arg(self, c):
        """The polynomial q with q(x) = p(x + c); degree is preserved."""
        acc = Poly()
        shift = Poly((c, 1))
        for coeff in reversed(self.coeffs):
            acc = acc * shift + Poly((coeff,))
        return acc

    # -- division -----------------------------------------------------------

    def exact_div(self, other: "Poly") -> "Poly":
        """Exact quotient self/other; raises NonExactDivision otherwise."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return self
        p, q = self.coeffs, other.coeffs
        if len(p) < len(q):
            raise NonExactDivision("dividend degree below divisor degree")
        if all(type(c) is int for c in p) and all(type(c) is int for c in q):
            return Poly(_exact_div_int(p, q))
        if any(isinstance(c, PrimeField) for c in p + q):
            quo, rem = poly_divmod(self, other)
            if not rem.is_zero():
                raise NonExactDivision("nonzero remainder")
            return quo
        # rational coefficients: scale to Z, divide there, scale back
        dp, dq = _common_denominator(p), _common_denominator(q)
        ip, iq = _to_int_list(p, dp), _to_int_list(q, dq)
        t = len(ip) - len(iq) + 1
        scale = iq[-1] ** t
        quo = _exact_div_int([c * scale for c in ip], iq)
        back = Fraction(dq, dp * scale)
        return Poly(tuple(Fraction(c) * back for c in quo))

    def try_exact_div(self, other: "Poly"):
        """Exact quotient, or None when the division is not exact."""
        try:
            return self.exact_div(other)
        except NonExactDivision:
            return None

    # -- change of coefficient ring -------------------------------------------

    def reduce_mod(self, p: int) -> "Poly":
        """Coefficient-wise image in GF(p)[x].

        Rational coefficients must be p-integral; a denominator divisible
        by p raises NotPIntegral.
        """
        if not is_prime(p):
            raise NotPrime(f"modulus {p} is not prime")
        out = []
        for c in self.coeffs:
            if isinstance(c, Fraction):
                if c.denominator % p == 0:
                    raise NotPIntegral(f"denominator of {c} divisible by {p}")
                out.append(PrimeField(c.numerator * pow(c.denominator, -1, p), p))
            elif isinstance(c, PrimeField):
                raise TypeError("polynomial is already over a prime field")
            else:
                out.append(PrimeField(c, p))
        return Poly(out)


ZERO = Poly()
ONE = Poly((1,))
X = Poly((0, 1))


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder over a coefficient field (Q or GF(p))."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    lq = len(b.coeffs)
    lead = b.lead
    if len(rem) < lq:
        return Poly(), a
    out = [0] * (len(rem) - lq + 1)
    for i in range(len(out) - 1, -1, -1):
        c = rem[i + lq - 1]
        if c:
            t = _coeff_exact_div(c, lead)
            out[i] = t
            for j, bj in enumerate(b.coeffs):
                rem[i + j] = rem[i + j] - t * bj
    return Poly(out), Poly(rem[: lq - 1])


# ---------------------------------------------------------------------------
# Integer polynomial gcd (content + primitive pseudo-remainder sequence)
# ---------------------------------------------------------------------------

def content(p: Poly) -> int:
    """Nonnegative gcd of the integer coefficients (0 for the zero poly)."""
    g = 0
    for c in p.coeffs:
        g = math.gcd(g, c)
        if g == 1:
            break
    return g


def primitive_part(p: Poly) -> Poly:
    if p.is_zero():
        return p
    g = content(p)
    if p.lead < 0:
        g = -g
    return Poly(tuple(c // g for c in p.coeffs))


def _pseudo_rem(a: Poly, b: Poly) -> Poly:
    lead = b.lead
    db = len(b.coeffs) - 1
    r = a
    while not r.is_zero() and len(r.coeffs) - 1 >= db:
        c = r.lead
        shift = len(r.coeffs) - 1 - db
        r = r.scaled(lead) - b.scaled(c).mul_xpow(shift)
    return r


def gcd_poly(a: Poly, b: Poly) -> Poly:
    """Gcd in Z[x], primitive-PRS based, normalized to positive leading coeff."""
    if b.is_zero():
        a, b = b, a
    if a.is_zero():
        if b.is_zero():
            return ZERO
        return b if b.lead > 0 else -b
    ca, cb = content(a), content(b)
    A, B = primitive_part(a), primitive_part(b)
    while not B.is_zero():
        A, B = B, primitive_part(_pseudo_rem(A, B))
    return A.scaled(math.gcd(ca, cb))


class RationalFunction:
    """Quotient of integer polynomials in canonical form.

    Canonical means gcd(num, den) = 1 in Z[x] (including integer content)
    and the denominator has a positive leading coefficient.  The zero
    function is 0/1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = ONE):
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        g = gcd_poly(num, den)
        num, den = num.exact_div(g), den.exact_div(g)
        if den.lead < 0:
            num, den = -num, -den
        self.num, self.den = num, den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __add__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    def __sub__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(self.num * other.den - other.num * self.den,
                                self.den * other.den)

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return RationalFunction(self.num * other.num, self.den * other.den)
        if isinstance(other, int):
            return RationalFunction(self.num.scaled(other), self.den)
        return NotImplemented

    __rmul__ = __mul__

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den)
