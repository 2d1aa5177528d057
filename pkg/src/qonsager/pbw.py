"""Images in Delta_q of the PBW elements of the q-Onsager algebra.

The three families are B_{n delta + alpha_0}, B_{n delta + alpha_1} and
B_{n delta}.  Each can be produced recursively (from the commutator
recursion with C, or the double-sum recursion for B_{n delta}) or from the
closed forms in Chebyshev polynomials of C.  All results are main-basis
elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import A, B, C, AlgebraElement, BasisForm, CentralMono, NO_CENTRAL
from .automorphisms import T0, T1, T0_INV, T1_INV
from .chebyshev import u_poly
from .normalform import product, to_main_basis
from .qfield import ONE, RationalFunction, binom2, bracket, qpow

FAMILIES = ("alpha0", "alpha1", "delta")
REAL_METHODS = ("recursive", "closed", "alt", "automorphism")
DELTA_METHODS = ("recursive-a1", "recursive-a0", "closed")

_q = qpow(1)
_qi = qpow(-1)
_d1 = _q - _qi


@dataclass(frozen=True)
class PBWElement:
    family: str
    index: int
    value: AlgebraElement


# -- helpers for assembling closed forms -----------------------------------------

class _Builder:
    """Accumulates coeff * head * U_n(C) * central into a term dict."""

    def __init__(self):
        self.terms: dict = {}

    def add(self, coeff, n, head="", central=NO_CENTRAL):
        if n < 0:
            return
        coeff = coeff if isinstance(coeff, RationalFunction) else ONE * coeff
        if not coeff:
            return
        for d, c in u_poly(n).coeffs.items():
            key = (head + "C" * d, central)
            v = self.terms.get(key)
            v = coeff * c if v is None else v + coeff * c
            self.terms[key] = v

    def element(self) -> AlgebraElement:
        return AlgebraElement(self.terms, BasisForm.MAIN)


_ALPHA = CentralMono(alpha=1)
_BETA = CentralMono(beta=1)
_GAMMA = CentralMono(gamma=1)
_OMEGA = CentralMono(omega=1)


def _sign(n):
    return 1 if n % 2 == 0 else -1


def _u_times(n: int, letter: str) -> AlgebraElement:
    """U_n(C) * letter reduced to the main basis."""
    terms = {("C" * d + letter, NO_CENTRAL): c for d, c in u_poly(n).coeffs.items()}
    return to_main_basis(AlgebraElement(terms))


def _commutator_with_C(x: AlgebraElement) -> AlgebraElement:
    return product(C, x) - product(x, C)


# -- B_{n delta + alpha_i} ---------------------------------------------------------

@lru_cache(maxsize=None)
def _real_recursive(family: str, n: int) -> AlgebraElement:
    # B_{n d + a0} = B_{(n-2) d + a0} + [C, B_{(n-1) d + a0}]/(q - q^-1), with
    # B_{a0} = A and B_{-d + a0} read as B; alpha1 flips the sign and swaps A, B.
    first, other, sign = ("A", "B", 1) if family == "alpha0" else ("B", "A", -1)
    if n == 0:
        return AlgebraElement.gen(first)
    prev2 = AlgebraElement.gen(other) if n == 1 else _real_recursive(family, n - 2)
    step = _commutator_with_C(_real_recursive(family, n - 1)) / _d1
    return (prev2 + step * sign).with_form(BasisForm.MAIN)


def _real_closed(family: str, n: int) -> AlgebraElement:
    s = _sign(n)
    b = _Builder()
    if family == "alpha0":
        b.add(qpow(-n, s), n, "A")
        b.add(qpow(-n - 1, s), n - 1, "B")
        j = 0
        while n - 2 * j - 1 >= 0:
            b.add(qpow(2 * j - n + 1, s), n - 2 * j - 2, central=_ALPHA)
            b.add(qpow(2 * j - n, -s), n - 2 * j - 1, central=_BETA)
            j += 1
    else:
        b.add(qpow(n, s), n, "B")
        b.add(qpow(n + 1, s), n - 1, "A")
        j = 0
        while n - 2 * j - 1 >= 0:
            b.add(qpow(n - 2 * j - 1, s), n - 2 * j - 2, central=_BETA)
            b.add(qpow(n - 2 * j, -s), n - 2 * j - 1, central=_ALPHA)
            j += 1
    return b.element()


def _real_alt(family: str, n: int) -> AlgebraElement:
    s = _sign(n)
    b = _Builder()
    if family == "alpha0":
        lead = _u_times(n, "A").scale(qpow(n, s)) + _u_times(n - 1, "B").scale(qpow(n + 1, s))
        j = 0
        while n - 2 * j - 1 >= 0:
            b.add(qpow(n - 2 * j - 1, s), n - 2 * j - 2, central=_ALPHA)
            b.add(qpow(n - 2 * j, -s), n - 2 * j - 1, central=_BETA)
            j += 1
    else:
        lead = _u_times(n, "B").scale(qpow(-n, s)) + _u_times(n - 1, "A").scale(qpow(-n - 1, s))
        j = 0
        while n - 2 * j - 1 >= 0:
            b.add(qpow(2 * j - n + 1, s), n - 2 * j - 2, central=_BETA)
            b.add(qpow(2 * j - n, -s), n - 2 * j - 1, central=_ALPHA)
            j += 1
    return (lead + b.element()).with_form(BasisForm.MAIN)


@lru_cache(maxsize=None)
def _real_automorphism(family: str, n: int) -> AlgebraElement:
    # alpha0: A, T0(B), T0T1(A), T0T1T0(B), ...; alpha1: B, T1^-1(A), T1^-1T0^-1(B), ...
    if family == "alpha0":
        seeds, maps = ("A", "B"), (T0, T1)
    else:
        seeds, maps = ("B", "A"), (T1_INV, T0_INV)
    x = AlgebraElement.gen(seeds[n % 2])
    for i in reversed(range(n)):
        x = maps[i % 2](x)
    return x


def pbw_real(family: str, n: int, method: str = "recursive") -> PBWElement:
    """B_{n delta + alpha_0} or B_{n delta + alpha_1} in the main basis."""
    if family not in ("alpha0", "alpha1"):
        raise ValueError(f"unknown real family {family!r}")
    if n < 0:
        raise IndexError("index must be >= 0")
    if method == "recursive":
        value = _real_recursive(family, n)
    elif method == "closed":
        value = _real_closed(family, n)
    elif method == "alt":
        value = _real_alt(family, n)
    elif method == "automorphism":
        value = _real_automorphism(family, n)
    else:
        raise ValueError(f"unknown method {method!r}")
    return PBWElement(family, n, value)


def pbw_real_alt(family: str, n: int) -> PBWElement:
    """The variant closed form with U_n(C) to the left of the generator."""
    return pbw_real(family, n, "alt")


# -- B_{n delta} -----------------------------------------------------------------

@lru_cache(maxsize=None)
def _delta_recursive(n: int, family: str) -> AlgebraElement:
    # alpha1: q^-2 X A - A X + (q^-2 - 1) sum B_l B_{n-l-2}, X = B_{(n-1)d+a1}
    # alpha0: q^-2 B X - X B + (q^-2 - 1) sum B_l B_{n-l-2}, X = B_{(n-1)d+a0}
    x = _real_recursive(family, n - 1)
    if family == "alpha1":
        out = product(x, A).scale(qpow(-2)) - product(A, x)
    else:
        out = product(B, x).scale(qpow(-2)) - product(x, B)
    acc = AlgebraElement.zero()
    for ell in range(n - 1):
        acc = acc + product(_real_recursive(family, ell), _real_recursive(family, n - ell - 2))
    out = out + acc.scale(qpow(-2) - 1)
    return out.with_form(BasisForm.MAIN)


def _delta_closed(n: int) -> AlgebraElement:
    b = _Builder()
    ell = 0
    while n - 2 * ell - 1 >= 0:
        b.add(bracket(n - 2 * ell - 1), n - 2 * ell - 2, central=_OMEGA)
        sq = bracket(n - 2 * ell) * (ell * ell)
        b.add(sq, n - 2 * ell - 1, central=CentralMono(alpha=1, beta=1))
        tri = -(binom2(ell) * bracket(n - 2 * ell - 1))
        b.add(tri, n - 2 * ell - 2, central=CentralMono(alpha=2))
        b.add(tri, n - 2 * ell - 2, central=CentralMono(beta=2))
        b.add(bracket(n - 2 * ell - 2) * 2, n - 2 * ell - 3, central=_GAMMA)
        b.add(-(bracket(2) ** 2 * bracket(n - 2 * ell - 3)), n - 2 * ell - 4)
        ell += 1
    b.add(bracket(n), n - 1, central=_GAMMA)
    b.add(-bracket(n + 1), n)
    b.add(-(bracket(3) * bracket(n - 1)), n - 2)
    return b.element().scale((1 - qpow(-2)) * _sign(n))


def pbw_delta(n: int, method: str = "recursive-a1") -> PBWElement:
    """B_{n delta} (n >= 1) in the main basis."""
    if n < 1:
        raise IndexError("B_{n delta} is defined for n >= 1")
    if method == "recursive-a1":
        value = _delta_recursive(n, "alpha1")
    elif method == "recursive-a0":
        value = _delta_recursive(n, "alpha0")
    elif method == "closed":
        value = _delta_closed(n)
    else:
        raise ValueError(f"unknown method {method!r}")
    return PBWElement("delta", n, value)


# -- further identities ------------------------------------------------------------

def un_times_generator(n: int, g: str) -> AlgebraElement:
    """Closed expansion of U_n(C) * A or U_n(C) * B in the main basis."""
    if n < 1:
        raise ValueError("n must be >= 1")
    b = _Builder()
    d1 = _d1
    if g == "A":
        b.add(qpow(-2 * n), n, "A")
        ell = 0
        while n - 2 * ell - 1 >= 0:
            b.add(-(qpow(2) * d1 * bracket(2 * n - 4 * ell - 2)), n - 2 * ell - 2, "A")
            b.add(-(qpow(-1) * d1 * bracket(2 * n - 4 * ell)), n - 2 * ell - 1, "B")
            b.add(d1 * d1 * bracket(n - 2 * ell - 1) * bracket(ell + 1) * bracket(n - ell),
                  n - 2 * ell - 2, central=_ALPHA)
            inner = qpow(ell - n) * bracket(ell + 1) - qpow(n - ell + 1) * bracket(ell)
            b.add(d1 * bracket(n - 2 * ell) * inner, n - 2 * ell - 1, central=_BETA)
            ell += 1
    elif g == "B":
        b.add(qpow(2 * n), n, "B")
        ell = 0
        while n - 2 * ell - 1 >= 0:
            b.add(qpow(-2) * d1 * bracket(2 * n - 4 * ell - 2), n - 2 * ell - 2, "B")
            b.add(qpow(1) * d1 * bracket(2 * n - 4 * ell), n - 2 * ell - 1, "A")
            b.add(d1 * d1 * bracket(n - 2 * ell - 1) * bracket(ell + 1) * bracket(n - ell),
                  n - 2 * ell - 2, central=_BETA)
            inner = qpow(n - ell) * bracket(ell + 1) - qpow(ell - n - 1) * bracket(ell)
            b.add(-(d1 * bracket(n - 2 * ell) * inner), n - 2 * ell - 1, central=_ALPHA)
            ell += 1
    else:
        raise ValueError("g must be 'A' or 'B'")
    return b.element()


def u_times_generator_direct(n: int, g: str) -> AlgebraElement:
    """to_main_basis(U_n(C) * g) computed by the normalizer."""
    return _u_times(n, g)


def b_delta_raw() -> AlgebraElement:
    """q^-2 BA - AB."""
    return B * A * qpow(-2) - A * B


def b_delta_tilde_raw() -> AlgebraElement:
    """q^-2 AB - BA."""
    return A * B * qpow(-2) - B * A


def check_fix_property() -> bool:
    """t0 t1 and t1^-1 t0^-1 both fix B_delta."""
    bd = to_main_basis(b_delta_raw())
    return T0(T1(bd)) == bd and T1_INV(T0_INV(bd)) == bd


def check_center_membership(n: int) -> bool:
    """Every main-basis word of B_{n delta} is a power of C."""
    value = pbw_delta(n).value
    return all(set(word) <= {"C"} for word, _ in value.terms)
