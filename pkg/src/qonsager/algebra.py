"""Elements of the universal Askey-Wilson algebra as linear combinations.

An element is a finite sum of ``coeff * word * central`` where ``word`` is a
string over the generators ``A < B < C`` and ``central`` is a
:class:`CentralMono` recording exponents of the central elements Omega,
alpha, beta, gamma.  No relations are applied here; multiplication simply
concatenates words.  Reduction to a basis lives in :mod:`qonsager.normalform`.
"""

from __future__ import annotations

import enum
from typing import Mapping, NamedTuple

from .qfield import ONE, RationalFunction, as_ratfunc, qpow, LaurentPoly

GENERATORS = "ABC"
CENTRAL_NAMES = ("omega", "alpha", "beta", "gamma")


class CentralMono(NamedTuple):
    omega: int = 0
    alpha: int = 0
    beta: int = 0
    gamma: int = 0

    def times(self, other: "CentralMono") -> "CentralMono":
        return CentralMono(self[0] + other[0], self[1] + other[1],
                           self[2] + other[2], self[3] + other[3])

    @property
    def degree(self) -> int:
        return sum(self)


NO_CENTRAL = CentralMono()


class BasisForm(enum.Enum):
    RAW = "raw"
    PRE = "pre"    # sorted words, no Omega
    MAIN = "main"  # sorted words with ijk = 0, Omega allowed


def is_sorted_word(word: str) -> bool:
    return all(a <= b for a, b in zip(word, word[1:]))


def word_counts(word: str) -> tuple[int, int, int]:
    return word.count("A"), word.count("B"), word.count("C")


def sorted_word(i: int, j: int, k: int) -> str:
    return "A" * i + "B" * j + "C" * k


def term_key(key):
    word, cm = key
    return (len(word), word, tuple(cm))


class AlgebraElement:
    """Immutable finite linear combination of (word, central) monomials.

    ``terms`` maps ``(word, CentralMono)`` to a nonzero
    :class:`~qonsager.qfield.RationalFunction`.  Iteration follows the order
    (word length, word, central exponents).
    """

    __slots__ = ("_terms", "form")

    def __init__(self, terms: Mapping | None = None, form: BasisForm = BasisForm.RAW):
        clean = {}
        if terms:
            for (word, cm), c in terms.items():
                if word and not set(word) <= set(GENERATORS):
                    raise ValueError(f"bad word {word!r}")
                c = as_ratfunc(c)
                if c:
                    key = (word, CentralMono(*cm))
                    if key in clean:
                        c = clean[key] + c
                        if not c:
                            del clean[key]
                            continue
                    clean[key] = c
        self._terms = dict(sorted(clean.items(), key=lambda kv: term_key(kv[0])))
        self.form = form

    @classmethod
    def _trusted(cls, terms: dict, form: BasisForm) -> "AlgebraElement":
        e = cls.__new__(cls)
        e._terms = dict(sorted(terms.items(), key=lambda kv: term_key(kv[0])))
        e.form = form
        return e

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "AlgebraElement":
        return cls({}, BasisForm.MAIN)

    @classmethod
    def one(cls) -> "AlgebraElement":
        return cls.scalar(1)

    @classmethod
    def scalar(cls, c) -> "AlgebraElement":
        return cls({("", NO_CENTRAL): c}, BasisForm.MAIN)

    @classmethod
    def word(cls, word: str, coeff=1, central: CentralMono = NO_CENTRAL) -> "AlgebraElement":
        return cls({(word, central): coeff})

    @classmethod
    def gen(cls, letter: str) -> "AlgebraElement":
        if letter not in GENERATORS:
            raise ValueError(f"unknown generator {letter!r}")
        return cls({(letter, NO_CENTRAL): 1}, BasisForm.MAIN)

    @classmethod
    def central(cls, omega=0, alpha=0, beta=0, gamma=0, coeff=1) -> "AlgebraElement":
        return cls({("", CentralMono(omega, alpha, beta, gamma)): coeff}, BasisForm.MAIN)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def coefficient(self, word: str, central=NO_CENTRAL) -> RationalFunction:
        from .qfield import ZERO
        return self._terms.get((word, CentralMono(*central)), ZERO)

    def word_degree(self) -> int:
        return max((len(w) for w, _ in self._terms), default=0)

    def has_omega(self) -> bool:
        return any(cm.omega for _, cm in self._terms)

    def check_form(self) -> bool:
        """Whether the terms satisfy the constraints of ``self.form``."""
        if self.form is BasisForm.RAW:
            return True
        for word, cm in self._terms:
            if not is_sorted_word(word):
                return False
            if self.form is BasisForm.PRE and cm.omega:
                return False
            if self.form is BasisForm.MAIN and all(word_counts(word)):
                return False
        return True

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self._terms == other._terms
        if isinstance(other, (int, RationalFunction, LaurentPoly)) or hasattr(other, "denominator"):
            return self._terms == AlgebraElement.scalar(other)._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _lift(x):
        if isinstance(x, AlgebraElement):
            return x
        try:
            return AlgebraElement.scalar(as_ratfunc(x))
        except TypeError:
            return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s:
                    out[k] = s
                else:
                    del out[k]
        form = self.form if self.form is other.form else BasisForm.RAW
        if not other._terms:
            form = self.form
        elif not self._terms:
            form = other.form
        return AlgebraElement._trusted(out, form)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement._trusted({k: -c for k, c in self._terms.items()}, self.form)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "AlgebraElement":
        c = as_ratfunc(c)
        if not c:
            return AlgebraElement.zero()
        return AlgebraElement._trusted({k: v * c for k, v in self._terms.items()}, self.form)

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        out = {}
        for (w1, m1), c1 in self._terms.items():
            for (w2, m2), c2 in other._terms.items():
                key = (w1 + w2, m1.times(m2))
                s = out.get(key)
                c = c1 * c2
                out[key] = c if s is None else s + c
        return AlgebraElement._trusted({k: v for k, v in out.items() if v}, BasisForm.RAW)

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        return self.scale(ONE / as_ratfunc(other))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined in the algebra")
        result = AlgebraElement.one()
        for _ in range(n):
            result = result * self
        return result

    def with_form(self, form: BasisForm) -> "AlgebraElement":
        return AlgebraElement._trusted(self._terms, form)

    def __repr__(self):
        from .render import to_text
        return f"AlgebraElement({to_text(self)!r}, form={self.form.value})"

    def __str__(self):
        from .render import to_text
        return to_text(self)


A = AlgebraElement.gen("A")
B = AlgebraElement.gen("B")
C = AlgebraElement.gen("C")
OMEGA = AlgebraElement.central(omega=1)
ALPHA = AlgebraElement.central(alpha=1)
BETA = AlgebraElement.central(beta=1)
GAMMA = AlgebraElement.central(gamma=1)


def commutator(u, v) -> AlgebraElement:
    """[u, v] = uv - vu (no relations applied)."""
    u = AlgebraElement._lift(u)
    v = AlgebraElement._lift(v)
    return u * v - v * u


def _q(k, c=1):
    return qpow(k, c)


def _term(word, coeff, **central):
    return ((word, CentralMono(**central)), coeff)


def casimir_expansion() -> AlgebraElement:
    """Omega = qABC + q^2A^2 + q^-2B^2 + q^2C^2 - qA alpha - q^-1B beta - qC gamma."""
    return AlgebraElement(dict([
        _term("ABC", _q(1)),
        _term("AA", _q(2)),
        _term("BB", _q(-2)),
        _term("CC", _q(2)),
        _term("A", _q(1, -1), alpha=1),
        _term("B", _q(-1, -1), beta=1),
        _term("C", _q(1, -1), gamma=1),
    ]))


def derived_central(which: str) -> AlgebraElement:
    """Express C, alpha or beta through A, B and gamma."""
    q = RationalFunction(LaurentPoly.monomial(1))
    qi = ONE / q
    s1 = q + qi           # q + q^-1
    d1 = q - qi           # q - q^-1
    d2 = q * q - qi * qi  # q^2 - q^-2
    s2 = q * q + qi * qi  # q^2 + q^-2
    if which == "C":
        return AlgebraElement(dict([
            _term("", ONE / s1, gamma=1),
            _term("AB", -q / d2),
            _term("BA", qi / d2),
        ]))
    if which in ("alpha", "beta"):
        x, y = ("A", "B") if which == "beta" else ("B", "A")
        den = d1 * d2
        return AlgebraElement(dict([
            _term(x + x + y, ONE / den),
            _term(x + y + x, -s2 / den),
            _term(y + x + x, ONE / den),
            _term(y, d2 * d2 / den),
            _term(x, d1 * d1 / den, gamma=1),
        ]))
    raise ValueError(f"no derived expression for {which!r}")
