"""Exact arithmetic in Q[q, q^-1] and its fraction field Q(q).

A Laurent polynomial is stored as ``q^v * p(q)`` with ``p`` a
:class:`flint.fmpq_poly` whose constant term is nonzero, so the pair
``(v, p)`` is canonical.  Coefficients are handed back to Python as ``int``
or :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from numbers import Rational

import flint

_P = flint.fmpq_poly
_EMPTY = _P([])
_UNIT = _P([1])


class ForbiddenSpecializationError(ValueError):
    """Raised when specializing at q0 in {0, 1, -1}."""

    kind = "forbidden-q0"


class PoleError(ZeroDivisionError):
    """Raised when the denominator vanishes at the specialization point."""

    kind = "pole-at-q0"


def _to_py(c):
    """fmpq -> int or Fraction."""
    n, d = int(c.p), int(c.q)
    return n if d == 1 else Fraction(n, d)


def _to_fmpq(c):
    if isinstance(c, int):
        return flint.fmpq(c)
    c = Fraction(c)
    return flint.fmpq(c.numerator, c.denominator)


def _fmt_rational(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _strip(v, p):
    """Move factors of q out of ``p`` into the valuation."""
    if not p:
        return 0, _EMPTY
    if p[0] != 0:
        return v, p
    k = 1
    while p[k] == 0:
        k += 1
    return v + k, p.right_shift(k)


class LaurentPoly:
    """Laurent polynomial in q with rational coefficients (immutable)."""

    __slots__ = ("_v", "_p")

    def __init__(self, coeffs=None):
        if not coeffs:
            self._v, self._p = 0, _EMPTY
            return
        items = {int(e): v for e, v in dict(coeffs).items() if v}
        if not items:
            self._v, self._p = 0, _EMPTY
            return
        lo = min(items)
        dense = [0] * (max(items) - lo + 1)
        for e, v in items.items():
            dense[e - lo] = _to_fmpq(v)
        self._v, self._p = lo, _P(dense)

    @classmethod
    def _raw(cls, v, p):
        r = cls.__new__(cls)
        r._v = v
        r._p = p
        return r

    @classmethod
    def _make(cls, v, p):
        v, p = _strip(v, p)
        return cls._raw(v, p)

    @classmethod
    def monomial(cls, exp: int, coeff=1) -> "LaurentPoly":
        if not coeff:
            return ZERO_POLY
        return cls._raw(exp, _P([_to_fmpq(coeff)]))

    @classmethod
    def constant(cls, coeff) -> "LaurentPoly":
        return cls.monomial(0, coeff)

    @classmethod
    def from_poly(cls, p, shift: int = 0) -> "LaurentPoly":
        """From an ordinary flint polynomial, times q^shift."""
        return cls._make(shift, p)

    # -- inspection ---------------------------------------------------------

    @property
    def coeffs(self) -> dict:
        return {self._v + i: _to_py(c) for i, c in enumerate(self._p.coeffs()) if c != 0}

    def items(self):
        """(exponent, coefficient) pairs, decreasing exponent."""
        return sorted(self.coeffs.items(), reverse=True)

    def __bool__(self):
        return bool(self._p)

    def __len__(self):
        return sum(1 for c in self._p.coeffs() if c != 0)

    def valuation(self) -> int:
        return self._v

    def degree(self) -> int:
        return self._v + self._p.degree()

    def is_constant(self) -> bool:
        return not self._p or (self._v == 0 and self._p.degree() == 0)

    def is_monomial(self) -> bool:
        return bool(self._p) and self._p.degree() == 0

    def constant_value(self):
        if self._v > 0 or self._v + self._p.degree() < 0 or not self._p:
            return 0
        return _to_py(self._p[-self._v])

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._v == other._v and self._p == other._p
        if isinstance(other, (int, Rational)):
            return self == LaurentPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash((self._v, tuple(str(c) for c in self._p.coeffs())))

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _lift(x):
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Rational)):
            return LaurentPoly.constant(x)
        return None

    def __add__(self, other):
        if type(other) is not LaurentPoly:
            other = self._lift(other)
            if other is None:
                return NotImplemented
        if not other._p:
            return self
        if not self._p:
            return other
        v1, v2 = self._v, other._v
        if v1 == v2:
            s = self._p + other._p
            if s and s[0] != 0:
                return LaurentPoly._raw(v1, s)
            return LaurentPoly._make(v1, s)
        if v1 < v2:
            return LaurentPoly._raw(v1, self._p + other._p.left_shift(v2 - v1))
        return LaurentPoly._raw(v2, other._p + self._p.left_shift(v1 - v2))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self._v, -self._p)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if type(other) is LaurentPoly:
            if not self._p or not other._p:
                return ZERO_POLY
            return LaurentPoly._raw(self._v + other._v, self._p * other._p)
        if isinstance(other, (int, Rational)):
            if not other:
                return ZERO_POLY
            return LaurentPoly._raw(self._v, self._p * _to_fmpq(other))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial Laurent polynomial")
            return LaurentPoly._raw(self._v * n, _P([1 / self._p[0]]) ** (-n))
        if not self._p:
            return ONE_POLY if n == 0 else ZERO_POLY
        return LaurentPoly._raw(self._v * n, self._p ** n)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        if not k or not self._p:
            return self
        return LaurentPoly._raw(self._v + k, self._p)

    def evaluate(self, q0):
        q0 = Fraction(q0)
        val = _to_py(self._p(_to_fmpq(q0))) if self._p else 0
        return Fraction(val) * q0 ** self._v

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient; raises ValueError if ``other`` does not divide."""
        if not other._p:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self._p:
            return ZERO_POLY
        qt, r = divmod(self._p, other._p)
        if r:
            raise ValueError("inexact Laurent division")
        return LaurentPoly._raw(self._v - other._v, qt)

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return f"LaurentPoly({format_laurent(self)!r})"


def format_laurent(p: LaurentPoly, var: str = "q") -> str:
    """Render as e.g. ``q^2 - 3/2*q - q^-2`` (decreasing exponents)."""
    if not p:
        return "0"
    out = []
    for idx, (e, v) in enumerate(p.items()):
        neg = v < 0
        a = -v if neg else v
        if e == 0:
            body = _fmt_rational(a)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if a == 1 else f"{_fmt_rational(a)}*{mono}"
        if idx == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


ZERO_POLY = LaurentPoly._raw(0, _EMPTY)
ONE_POLY = LaurentPoly._raw(0, _UNIT)
Q_POLY = LaurentPoly._raw(1, _UNIT)


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd over Q[q] of the q-power-free parts of ``a`` and ``b``."""
    g = a._p.gcd(b._p)
    return LaurentPoly._raw(0, g) if g else ZERO_POLY


def poly_lcm(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """lcm over Q[q] of two ordinary polynomials (valuation 0)."""
    g = a._p.gcd(b._p)
    return LaurentPoly._raw(0, (a._p // g) * b._p)


def _primitive_scale(p) -> Fraction:
    """Scalar s with s*p integral, content 1, positive leading coefficient."""
    vals = [Fraction(_to_py(c)) for c in p.coeffs() if c != 0]
    den = 1
    for v in vals:
        den = lcm(den, v.denominator)
    g = 0
    for v in vals:
        g = gcd(g, (v * den).numerator)
    s = Fraction(den, g)
    if vals[-1] < 0:
        s = -s
    return s


# -- the fraction field -------------------------------------------------------

class RationalFunction:
    """Element of Q(q) in canonical form ``num/den``.

    ``den`` is an ordinary polynomial with nonzero constant term, integer
    coefficients of content 1 and a positive leading coefficient; ``num`` is a
    Laurent polynomial coprime to ``den``.  Equal values therefore have equal
    representations.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num = _lift_poly(num)
        den = _lift_poly(den)
        self.num, self.den = _canonical(num, den)

    @classmethod
    def _raw(cls, num, den=None):
        r = cls.__new__(cls)
        r.num = num
        r.den = ONE_POLY if den is None else den
        return r

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalFunction":
        return cls._raw(p)

    # -- inspection ---------------------------------------------------------

    def is_laurent(self) -> bool:
        return self.den == ONE_POLY

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Rational, LaurentPoly)):
            return self.den == ONE_POLY and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.den == ONE_POLY and other.den == ONE_POLY:
            return RationalFunction._raw(self.num + other.num)
        if self.den == other.den:
            return _make(self.num + other.num, self.den)
        return _make(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.den == ONE_POLY and other.den == ONE_POLY:
            return RationalFunction._raw(self.num * other.num)
        return _make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return _make(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if self.den == ONE_POLY:
            return RationalFunction._raw(self.num ** n)
        return RationalFunction._raw(self.num ** n, self.den ** n)

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        return format_ratfunc(self)

    def __repr__(self):
        return f"RationalFunction({format_ratfunc(self)!r})"


def format_ratfunc(a: RationalFunction) -> str:
    """Canonical string such as ``(q^2 - q^-2)/(q^4 + 1)``."""
    num = format_laurent(a.num)
    if a.den == ONE_POLY:
        return num
    den = format_laurent(a.den)
    if len(a.num) > 1:
        num = f"({num})"
    return f"{num}/({den})"


def _lift_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Rational)):
        return LaurentPoly.constant(x)
    raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial")


def _coerce(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, LaurentPoly):
        return RationalFunction._raw(x)
    if isinstance(x, (int, Rational)):
        return RationalFunction._raw(LaurentPoly.constant(x))
    return None


def as_ratfunc(x) -> RationalFunction:
    r = _coerce(x)
    if r is None:
        raise TypeError(f"cannot interpret {x!r} as an element of Q(q)")
    return r


def _canonical(num: LaurentPoly, den: LaurentPoly):
    if not den:
        raise ZeroDivisionError("zero denominator in Q(q)")
    if not num:
        return ZERO_POLY, ONE_POLY
    # den = q^v * d(q) with d(0) != 0; move q^v into the numerator.
    num = num.shift(-den._v)
    d = den._p
    if d.degree() == 0:
        return num * _to_py(1 / d[0]), ONE_POLY
    n = num._p
    g = n.gcd(d)
    if g.degree() > 0:
        n = n // g
        d = d // g
    if d.degree() == 0:
        return LaurentPoly._raw(num._v, n * (1 / d[0])), ONE_POLY
    s = _to_fmpq(_primitive_scale(d))
    return LaurentPoly._raw(num._v, n * s), LaurentPoly._raw(0, d * s)


def _make(num, den) -> RationalFunction:
    n, d = _canonical(num, den)
    return RationalFunction._raw(n, d)


ZERO = RationalFunction._raw(ZERO_POLY)
ONE = RationalFunction._raw(ONE_POLY)
Q = RationalFunction._raw(Q_POLY)


def qpow(k: int, coeff=1) -> RationalFunction:
    """coeff * q^k."""
    return RationalFunction._raw(LaurentPoly.monomial(k, coeff))


@lru_cache(maxsize=None)
def bracket_poly(n: int) -> LaurentPoly:
    if n == 0:
        return ZERO_POLY
    if n < 0:
        return -bracket_poly(-n)
    # q^(n-1) + q^(n-3) + ... + q^(1-n)
    return LaurentPoly._raw(1 - n, _P([1 if i % 2 == 0 else 0 for i in range(2 * n - 1)]))


def bracket(n: int) -> RationalFunction:
    """The q-integer [n]_q = (q^n - q^-n)/(q - q^-1)."""
    return RationalFunction._raw(bracket_poly(n))


def binom2(ell: int) -> RationalFunction:
    """binomial(ell + 1, 2) as a constant of Q(q)."""
    if ell < 0:
        raise ValueError("binom2 expects ell >= 0")
    return RationalFunction._raw(LaurentPoly.constant((ell + 1) * ell // 2))


def specialize(a, q0) -> Fraction:
    """Exact value of ``a`` at q = q0."""
    a = as_ratfunc(a)
    q0 = Fraction(q0)
    if q0 in (0, 1, -1):
        raise ForbiddenSpecializationError(f"cannot specialize at q = {q0}")
    d = a.den.evaluate(q0)
    if d == 0:
        raise PoleError(f"pole at q = {q0}")
    return Fraction(a.num.evaluate(q0)) / d
