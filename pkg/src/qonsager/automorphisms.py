"""Automorphisms of Delta_q: the PSL2(Z) generators rho, sigma and t0, t1.

An automorphism is recorded by its images of A, B, C, alpha, beta, gamma.
Applying it substitutes those images and reduces to the main basis after
every factor, which keeps intermediate products small.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

from .algebra import (
    ALPHA, BETA, GAMMA, A, B, C,
    AlgebraElement, BasisForm, CentralMono, casimir_expansion,
)
from .normalform import product, to_main_basis
from .qfield import ONE, qpow

SLOTS = ("A", "B", "C", "alpha", "beta", "gamma")

_q = qpow(1)
_qi = qpow(-1)
_d1 = _q - _qi               # q - q^-1
_d2 = _q * _q - _qi * _qi    # q^2 - q^-2
_s1 = _q + _qi               # q + q^-1


@dataclass(frozen=True, eq=False)
class Automorphism:
    name: str
    images: dict
    _omega: list = field(default_factory=list, repr=False)

    def image(self, slot: str) -> AlgebraElement:
        return self.images[slot]

    def omega_image(self) -> AlgebraElement:
        if not self._omega:
            self._omega.append(self(casimir_expansion()))
        return self._omega[0]

    def __call__(self, u: AlgebraElement) -> AlgebraElement:
        return apply_automorphism(self, u)

    def same_action(self, other: "Automorphism") -> bool:
        return all(to_main_basis(self.images[s]) == to_main_basis(other.images[s]) for s in SLOTS)


def _power(u, n):
    return reduce(product, [u] * n, AlgebraElement.one())


def apply_automorphism(a: Automorphism, u: AlgebraElement) -> AlgebraElement:
    """Substitute generator images into ``u``; result in the main basis."""
    out = AlgebraElement.zero()
    for (word, cm), c in u.items():
        acc = AlgebraElement.scalar(c)
        for slot, e in zip(("alpha", "beta", "gamma"), cm[1:]):
            if e:
                acc = product(acc, _power(a.images[slot], e))
        if cm.omega:
            acc = product(acc, _power(a.omega_image(), cm.omega))
        for letter in word:
            acc = product(acc, a.images[letter])
        out = out + acc
    return out.with_form(BasisForm.MAIN)


def compose(f: Automorphism, g: Automorphism, name: str | None = None) -> Automorphism:
    """The map x -> f(g(x))."""
    return Automorphism(name or f"{f.name}*{g.name}", {s: f(g.images[s]) for s in SLOTS})


def compose_all(*maps: Automorphism, name: str | None = None) -> Automorphism:
    """maps[0] o maps[1] o ... o maps[-1]."""
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = compose(m, out)
    if name:
        out = Automorphism(name, out.images)
    return out


def identity() -> Automorphism:
    return Automorphism("id", {"A": A, "B": B, "C": C, "alpha": ALPHA, "beta": BETA, "gamma": GAMMA})


def _main(u):
    return to_main_basis(u)


def _c_from(a_img, b_img):
    # C = gamma/(q+q^-1) - (qAB - q^-1BA)/(q^2-q^-2), for automorphisms fixing gamma
    return _main(GAMMA / _s1 - (product(a_img, b_img) * _q - product(b_img, a_img) * _qi) / _d2)


def _twist(x, y, lead_exp):
    """x + (q^e y^2 x - (q+q^-1) y x y + q^-e x y^2)/((q-q^-1)(q^2-q^-2))."""
    num = (y * y * x) * qpow(lead_exp) - (y * x * y) * _s1 + (x * y * y) * qpow(-lead_exp)
    return _main(x + num / (_d1 * _d2))


def _fixing_centrals(name, a_img, b_img):
    return Automorphism(name, {
        "A": _main(a_img), "B": _main(b_img), "C": _c_from(a_img, b_img),
        "alpha": ALPHA, "beta": BETA, "gamma": GAMMA,
    })


RHO = Automorphism("rho", {"A": B, "B": C, "C": A, "alpha": BETA, "beta": GAMMA, "gamma": ALPHA})
SIGMA = Automorphism("sigma", {
    "A": B, "B": A, "C": _main(C + (A * B - B * A) / _d1),
    "alpha": BETA, "beta": ALPHA, "gamma": GAMMA,
})

# t0(A) = A, t0(B) = B + (qA^2B - (q+q^-1)ABA + q^-1BA^2)/((q-q^-1)(q^2-q^-2)); the
# others follow the same pattern with the roles of A, B and the sign of q swapped.
T0 = _fixing_centrals("t0", A, _twist(B, A, 1))
T1 = _fixing_centrals("t1", _twist(A, B, 1), B)
T0_INV = _fixing_centrals("t0_inv", A, _twist(B, A, -1))
T1_INV = _fixing_centrals("t1_inv", _twist(A, B, -1), B)

AUTOMORPHISMS = {a.name: a for a in (RHO, SIGMA, T0, T1, T0_INV, T1_INV)}


def get(name: str) -> Automorphism:
    return AUTOMORPHISMS[name]
