"""Chebyshev polynomials of the second kind and truncated generating series.

The normalization is the monic one: U_0 = 1, U_1 = x, x U_n = U_{n+1} + U_{n-1},
with U_n = 0 for n < 0.  (The textbook normalization is recovered by x -> 2x.)
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .algebra import AlgebraElement, BasisForm, NO_CENTRAL
from .qfield import ONE, RationalFunction, as_ratfunc, bracket, qpow

DEFAULT_ORDER = 20


def _is_zero(c):
    return not c


class UPoly:
    """Univariate polynomial ``{degree: coeff}``.

    Coefficients may be ints, Fractions or :class:`RationalFunction` values;
    zero coefficients are never stored.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        self._c = {int(d): c for d, c in dict(coeffs or {}).items() if not _is_zero(c)}
        if any(d < 0 for d in self._c):
            raise ValueError("negative degree in UPoly")

    @classmethod
    def x(cls):
        return cls({1: 1})

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def degree(self) -> int:
        return max(self._c, default=-1)

    def __getitem__(self, d):
        return self._c.get(d, 0)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == UPoly({0: other})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def _lift(self, other):
        if isinstance(other, UPoly):
            return other
        return UPoly({0: other})

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self._c)
        for d, c in other._c.items():
            out[d] = out[d] + c if d in out else c
        return UPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UPoly({d: -c for d, c in self._c.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        out = {}
        for d1, c1 in self._c.items():
            for d2, c2 in other._c.items():
                d = d1 + d2
                out[d] = out[d] + c1 * c2 if d in out else c1 * c2
        return UPoly(out)

    __rmul__ = __mul__

    def __call__(self, value):
        """Horner evaluation at any ring element supporting + and *."""
        result = 0
        for d in range(self.degree(), -1, -1):
            result = result * value + self._c.get(d, 0)
        return result

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[self.degree()] == 1

    def __repr__(self):
        if not self._c:
            return "UPoly(0)"
        parts = []
        for d in sorted(self._c, reverse=True):
            c = self._c[d]
            mono = "" if d == 0 else ("x" if d == 1 else f"x^{d}")
            if d and c == 1:
                parts.append(mono)
            elif d and c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}" if d else f"{c}")
        return "UPoly(" + " + ".join(parts).replace("+ -", "- ") + ")"


@lru_cache(maxsize=None)
def u_poly(n: int) -> UPoly:
    """U_n(x) from the three-term recurrence."""
    if n < 0:
        return UPoly()
    if n == 0:
        return UPoly({0: 1})
    if n == 1:
        return UPoly.x()
    return UPoly.x() * u_poly(n - 1) - u_poly(n - 2)


def u_closed_sum(n: int) -> UPoly:
    """U_n(x) = sum_i (-1)^i binom(n-i, i) x^(n-2i)."""
    if n < 0:
        raise ValueError("u_closed_sum expects n >= 0")
    return UPoly({n - 2 * i: (-1) ** i * comb(n - i, i) for i in range(n // 2 + 1)})


class SymmetricLaurent:
    """Laurent polynomial in z fixed by z -> 1/z."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {int(e): v for e, v in dict(coeffs or {}).items() if v}
        if any(c.get(-e) != v for e, v in c.items()):
            raise ValueError("coefficients are not symmetric under z -> 1/z")
        self._c = c

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def __eq__(self, other):
        return isinstance(other, SymmetricLaurent) and self._c == other._c

    def __repr__(self):
        return f"SymmetricLaurent({dict(sorted(self._c.items(), reverse=True))})"


def u_via_z(n: int) -> SymmetricLaurent:
    """(z^(n+1) - z^(-n-1))/(z - 1/z) = z^n + z^(n-2) + ... + z^-n."""
    if n < 0:
        raise ValueError("u_via_z expects n >= 0")
    return SymmetricLaurent({n - 2 * i: 1 for i in range(n + 1)})


def substitute_z(p: UPoly) -> SymmetricLaurent:
    """Image of p under x -> z + 1/z."""
    out: dict = {}
    for d, c in p.coeffs.items():
        for i in range(d + 1):
            e = d - 2 * i
            out[e] = out.get(e, 0) + c * comb(d, i)
    return SymmetricLaurent(out)


def to_u_basis(p: UPoly) -> dict:
    """Coefficients {n: c_n} with p = sum c_n U_n (triangular change of basis)."""
    rest = p
    out = {}
    while rest:
        d = rest.degree()
        c = rest[d]
        out[d] = c
        rest = rest - u_poly(d) * c
    return out


def u_at_C(n: int, coeff=1) -> AlgebraElement:
    """coeff * U_n(C) as a main-basis element."""
    coeff = as_ratfunc(coeff)
    terms = {}
    if coeff:
        for d, c in u_poly(n).coeffs.items():
            terms[("C" * d, NO_CENTRAL)] = coeff * c
    return AlgebraElement(terms, BasisForm.MAIN)


def poly_in_C(p: UPoly) -> AlgebraElement:
    """The element p(C) for a UPoly with Q(q) coefficients."""
    return AlgebraElement({("C" * d, NO_CENTRAL): c for d, c in p.coeffs.items()},
                          BasisForm.MAIN)


# -- truncated series in t ----------------------------------------------------

class TruncatedSeries:
    """Laurent series in t with UPoly coefficients, known exactly through t^order.

    ``order=None`` marks a finite (exact) Laurent polynomial in t.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        self.coeffs = {e: p for e, p in coeffs.items()
                       if p and (order is None or e <= order)}
        self.order = order

    @classmethod
    def exact(cls, coeffs):
        return cls({e: p if isinstance(p, UPoly) else UPoly({0: p}) for e, p in coeffs.items()})

    def min_exp(self) -> int:
        return min(self.coeffs, default=0)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.order is None and other.order is None:
            order = None
        elif self.order is None:
            order = other.order + self.min_exp()
        elif other.order is None:
            order = self.order + other.min_exp()
        else:
            order = min(self.order + other.min_exp(), other.order + self.min_exp())
        out: dict = {}
        for e1, p1 in self.coeffs.items():
            for e2, p2 in other.coeffs.items():
                e = e1 + e2
                if order is not None and e > order:
                    continue
                out[e] = out[e] + p1 * p2 if e in out else p1 * p2
        return TruncatedSeries(out, order)

    def agrees_with(self, other: "TruncatedSeries") -> bool:
        """Equality of all coefficients both series know exactly."""
        orders = [o for o in (self.order, other.order) if o is not None]
        top = min(orders) if orders else None
        keys = set(self.coeffs) | set(other.coeffs)
        for e in keys:
            if top is not None and e > top:
                continue
            if self.coeffs.get(e, UPoly()) != other.coeffs.get(e, UPoly()):
                return False
        return True


def _x_poly(*coeffs):
    return UPoly({d: c for d, c in enumerate(coeffs)})


def _series(term, start, order):
    """sum_{n >= start} t^n * term(n) through t^order, term returning UPoly or scalar."""
    out = {}
    for n in range(start, order + 1):
        v = term(n)
        out[n] = v if isinstance(v, UPoly) else UPoly({0: v})
    return TruncatedSeries(out, order)


SERIES_IDS = ("gf", "var-plus", "var-minus", "tbrack",
              "sum-even", "sum-ell", "sum-ellsq", "sum-binom")


def series_sides(which: str, order: int = DEFAULT_ORDER):
    """(series, denominator, numerator) for a generating-function identity.

    The identity holds iff series * denominator == numerator; denominators
    and numerators are the literal Laurent polynomials in t of the closed
    forms, t^-1 included.  The series is computed far enough that the product
    is exact through t^order.
    """
    q = qpow(1)
    qi = qpow(-1)
    x = UPoly.x()
    E = TruncatedSeries.exact
    tt = E({1: 1, -1: -1})  # t - t^-1
    if which == "gf":
        term = u_poly
        den, num = E({0: 1, 1: -x, 2: 1}), E({0: 1})
    elif which == "var-plus":
        def term(k):
            return u_poly(k - 1) * ((-1) ** k * q ** k)
        den, num = E({1: q, -1: qi, 0: x}), E({0: -1})
    elif which == "var-minus":
        def term(k):
            return u_poly(k - 1) * ((-1) ** k * qi ** k)
        den, num = E({1: qi, -1: q, 0: x}), E({0: -1})
    elif which == "tbrack":
        def term(k):
            return u_poly(k - 1) * ((-1) ** k * bracket(k))
        den = E({1: q, -1: qi, 0: x}) * E({1: qi, -1: q, 0: x})
        num = tt
    # the four sums over ell; only even or odd powers of t occur
    elif which == "sum-even":
        def term(k):
            return 1 if k % 2 == 0 else 0
        den, num = tt, E({-1: -1})
    elif which == "sum-ell":
        def term(k):
            return k // 2 if k % 2 == 0 else 0
        den, num = tt * tt, E({0: 1})
    elif which == "sum-ellsq":
        def term(k):
            return (k // 2) ** 2 if k % 2 == 0 else 0
        den, num = tt * tt * tt, E({1: -1, -1: -1})
    elif which == "sum-binom":
        def term(k):
            return comb((k - 1) // 2 + 1, 2) if k % 2 == 1 else 0
        den, num = tt * tt * tt, E({0: -1})
    else:
        raise ValueError(f"unknown series identity {which!r}")
    return _series(term, 0, order - den.min_exp()), den, num


def check_series_identity(which: str, order: int = DEFAULT_ORDER) -> bool:
    """Verify a generating-function identity in denominator-cleared form through t^order."""
    if order < 1:
        raise ValueError("order must be >= 1")
    s, den, num = series_sides(which, order)
    lhs = s * den
    lhs = TruncatedSeries(lhs.coeffs, min(lhs.order, order))
    return lhs.order >= order and lhs.agrees_with(num)
