"""Reduction of algebra elements to the two linear bases of Delta_q.

* ``pre`` basis:  A^i B^j C^k alpha^r beta^s gamma^t
* ``main`` basis: A^i B^j C^k Omega^l alpha^r beta^s gamma^t with ijk = 0

Internally a normal-form element is a dict from 7-tuples
``(i, j, k, l, r, s, t)`` to :class:`LaurentPoly` coefficients.  Elements
with genuine rational-function coefficients are first scaled by a common
denominator so the reduction itself never divides.

The pre basis is reached by right-multiplying one generator at a time; the
product of a sorted monomial with a letter is memoized and computed from
the three exchange rules (BA, CA, CB).  The main basis then trades each
monomial with i, j, k >= 1 for Omega times a lower one.
"""

from __future__ import annotations

from collections import defaultdict

from .algebra import (
    AlgebraElement,
    BasisForm,
    CentralMono,
    casimir_expansion,
    is_sorted_word,
    sorted_word,
    word_counts,
)
from .qfield import ONE_POLY, ZERO_POLY, LaurentPoly, RationalFunction, poly_lcm


class OmegaPresentError(ValueError):
    """normalize_pre was given an element containing Omega."""


class NonterminationError(RuntimeError):
    """The reduction exceeded its iteration cap (indicates a bug)."""


MAX_MAIN_REDUCTIONS = 200_000

_L = LaurentPoly.monomial


def _lp(*pairs):
    return LaurentPoly(dict(pairs))


# Exchange rules: descending pair -> {(i, j, k, l, r, s, t): coeff}.
#   BA = q^2 AB + q(q^2-q^-2) C - q(q-q^-1) gamma
#   CA = q^-2 AC - q^-1(q^2-q^-2) B + q^-1(q-q^-1) beta
#   CB = q^2 BC + q(q^2-q^-2) A - q(q-q^-1) alpha
RULES = {
    "BA": {
        (1, 1, 0, 0, 0, 0, 0): _L(2),
        (0, 0, 1, 0, 0, 0, 0): _lp((3, 1), (-1, -1)),
        (0, 0, 0, 0, 0, 0, 1): _lp((2, -1), (0, 1)),
    },
    "CA": {
        (1, 0, 1, 0, 0, 0, 0): _L(-2),
        (0, 1, 0, 0, 0, 0, 0): _lp((1, -1), (-3, 1)),
        (0, 0, 0, 0, 0, 1, 0): _lp((0, 1), (-2, -1)),
    },
    "CB": {
        (0, 1, 1, 0, 0, 0, 0): _L(2),
        (1, 0, 0, 0, 0, 0, 0): _lp((3, 1), (-1, -1)),
        (0, 0, 0, 0, 1, 0, 0): _lp((2, -1), (0, 1)),
    },
}


def _addto(out, key, c):
    s = out.get(key)
    if s is None:
        out[key] = c
    else:
        s = s + c
        if s:
            out[key] = s
        else:
            del out[key]


def _shifted(key, cen):
    return (key[0], key[1], key[2], key[3] + cen[0], key[4] + cen[1],
            key[5] + cen[2], key[6] + cen[3])


# -- pre basis ----------------------------------------------------------------

_letter_cache: dict = {}


def _times_C(d, n=1):
    return {(k[0], k[1], k[2] + n) + k[3:]: c for k, c in d.items()}


def _mono_letter(i, j, k, x):
    """Normal form of A^i B^j C^k * x as a dict (central part starts at 0)."""
    key = (i, j, k, x)
    hit = _letter_cache.get(key)
    if hit is not None:
        return hit
    if x == "C":
        res = {(i, j, k + 1, 0, 0, 0, 0): ONE_POLY}
    elif x == "B":
        if k == 0:
            res = {(i, j + 1, 0, 0, 0, 0, 0): ONE_POLY}
        else:
            # A^i B^j C^(k-1) * CB
            rule = RULES["CB"]
            res = {}
            for kk, c in _times_C(_mono_letter(i, j, k - 1, "B")).items():
                _addto(res, kk, c * rule[(0, 1, 1, 0, 0, 0, 0)])
            for kk, c in _mono_letter(i, j, k - 1, "A").items():
                _addto(res, kk, c * rule[(1, 0, 0, 0, 0, 0, 0)])
            _addto(res, (i, j, k - 1, 0, 1, 0, 0), rule[(0, 0, 0, 0, 1, 0, 0)])
    elif x == "A":
        if j == 0 and k == 0:
            res = {(i + 1, 0, 0, 0, 0, 0, 0): ONE_POLY}
        elif k > 0:
            rule = RULES["CA"]
            res = {}
            for kk, c in _times_C(_mono_letter(i, j, k - 1, "A")).items():
                _addto(res, kk, c * rule[(1, 0, 1, 0, 0, 0, 0)])
            for kk, c in _mono_letter(i, j, k - 1, "B").items():
                _addto(res, kk, c * rule[(0, 1, 0, 0, 0, 0, 0)])
            _addto(res, (i, j, k - 1, 0, 0, 1, 0), rule[(0, 0, 0, 0, 0, 1, 0)])
        else:
            rule = RULES["BA"]
            res = {}
            for kk, c in _elem_letter(_mono_letter(i, j - 1, 0, "A"), "B").items():
                _addto(res, kk, c * rule[(1, 1, 0, 0, 0, 0, 0)])
            _addto(res, (i, j - 1, 1, 0, 0, 0, 0), rule[(0, 0, 1, 0, 0, 0, 0)])
            _addto(res, (i, j - 1, 0, 0, 0, 0, 1), rule[(0, 0, 0, 0, 0, 0, 1)])
    else:
        raise ValueError(f"unknown generator {x!r}")
    _letter_cache[key] = res
    return res


def _elem_letter(d, x):
    """Right-multiply a normal-form dict by one generator."""
    if x == "C":
        return _times_C(d)
    out = {}
    for key, c in d.items():
        cen = key[3:]
        for k2, c2 in _mono_letter(key[0], key[1], key[2], x).items():
            _addto(out, _shifted(k2, cen) if any(cen) else k2, c * c2)
    return out


def _elem_word(d, word):
    i = 0
    n = len(word)
    while i < n:
        x = word[i]
        if x == "C":
            run = 1
            while i + run < n and word[i + run] == "C":
                run += 1
            d = _times_C(d, run)
            i += run
        else:
            d = _elem_letter(d, x)
            i += 1
    return d


def _mul_normal(d1, d2):
    """Product of two normal-form dicts (pre or main), result in pre form."""
    out = {}
    for k2, c2 in d2.items():
        word = sorted_word(k2[0], k2[1], k2[2])
        cen = k2[3:]
        for k, c in _elem_word(d1, word).items():
            _addto(out, _shifted(k, cen), c * c2)
    return out


# -- main basis ---------------------------------------------------------------

_main_cache: dict = {}
_reductions = 0


def _casimir_dict():
    return {
        (1, 1, 1, 0, 0, 0, 0): _L(1),
        (2, 0, 0, 0, 0, 0, 0): _L(2),
        (0, 2, 0, 0, 0, 0, 0): _L(-2),
        (0, 0, 2, 0, 0, 0, 0): _L(2),
        (1, 0, 0, 0, 1, 0, 0): _L(1, -1),
        (0, 1, 0, 0, 0, 1, 0): _L(-1, -1),
        (0, 0, 1, 0, 0, 0, 1): _L(1, -1),
    }


def _main_mono(i, j, k):
    """Main-basis expansion of the sorted monomial A^i B^j C^k."""
    global _reductions
    if i == 0 or j == 0 or k == 0:
        return {(i, j, k, 0, 0, 0, 0): ONE_POLY}
    hit = _main_cache.get((i, j, k))
    if hit is not None:
        return hit
    _reductions += 1
    if _reductions > MAX_MAIN_REDUCTIONS:
        raise NonterminationError("main-basis reduction exceeded its iteration cap")
    # M * Omega = lead * A^i B^j C^k + R with M = A^(i-1) B^(j-1) C^(k-1).
    m = {(i - 1, j - 1, k - 1, 0, 0, 0, 0): ONE_POLY}
    expanded = _mul_normal(m, _casimir_dict())
    target = (i, j, k, 0, 0, 0, 0)
    lead = expanded.pop(target)
    if not lead.is_monomial():
        raise AssertionError(f"non-invertible leading coefficient {lead}")
    inv = lead ** -1
    res = {}
    for kk, c in _main_mono(i - 1, j - 1, k - 1).items():
        _addto(res, (kk[0], kk[1], kk[2], kk[3] + 1) + kk[4:], c * inv)
    neg = -inv
    for kk, c in expanded.items():
        if sum(kk[:3]) >= i + j + k:
            raise AssertionError("correction term does not lower the word degree")
        for k2, c2 in _main_mono(kk[0], kk[1], kk[2]).items():
            _addto(res, _shifted(k2, kk[3:]), c * c2 * neg)
    _main_cache[(i, j, k)] = res
    return res


def main_reduction_lead(i: int, j: int, k: int) -> LaurentPoly:
    """Coefficient of A^i B^j C^k in A^(i-1) B^(j-1) C^(k-1) * Omega (i, j, k >= 1).

    Moving A left past C^(k-1) and B^(j-1), then B past C^(k-1), gives
    q^(1 + 2(j-1)).
    """
    if min(i, j, k) < 1:
        raise ValueError("needs i, j, k >= 1")
    m = {(i - 1, j - 1, k - 1, 0, 0, 0, 0): ONE_POLY}
    return _mul_normal(m, _casimir_dict())[(i, j, k, 0, 0, 0, 0)]


def _pre_to_main(d):
    out = {}
    for key, c in d.items():
        if key[0] and key[1] and key[2]:
            cen = key[3:]
            for k2, c2 in _main_mono(key[0], key[1], key[2]).items():
                _addto(out, _shifted(k2, cen), c * c2)
        else:
            _addto(out, key, c)
    return out


_omega_cache: dict = {0: {(0, 0, 0, 0, 0, 0, 0): ONE_POLY}}


def _omega_power_pre(n):
    """Pre-basis normal form of (Casimir expansion)^n."""
    hit = _omega_cache.get(n)
    if hit is None:
        hit = _mul_normal(_omega_power_pre(n - 1), _casimir_dict())
        _omega_cache[n] = hit
    return hit


def _expand_omega_dict(d):
    out = {}
    for key, c in d.items():
        if key[3]:
            base = _omega_power_pre(key[3])
            mono = {(key[0], key[1], key[2], 0) + key[4:]: ONE_POLY}
            for k2, c2 in _mul_normal(base, mono).items():
                _addto(out, k2, c * c2)
        else:
            _addto(out, key, c)
    return out


def clear_caches():
    global _reductions
    _letter_cache.clear()
    _main_cache.clear()
    _reductions = 0
    for n in list(_omega_cache):
        if n:
            del _omega_cache[n]


# -- conversion between AlgebraElement and internal dicts ----------------------

def _common_denominator(u: AlgebraElement) -> LaurentPoly:
    den = ONE_POLY
    for c in u._terms.values():
        if c.den != ONE_POLY:
            den = poly_lcm(den, c.den)
    return den


def _scaled_numerators(u: AlgebraElement):
    """(D, {(word, cm): LaurentPoly}) with coeff = numerator / D."""
    den = _common_denominator(u)
    out = {}
    for key, c in u._terms.items():
        if den == ONE_POLY:
            out[key] = c.num
        else:
            out[key] = c.num * den.exact_div(c.den)
    return den, out


def _pre_dict_of(u: AlgebraElement):
    """(D, pre-basis dict) for an element, Omega kept as a central exponent."""
    den, nums = _scaled_numerators(u)
    out = {}
    for (word, cm), c in nums.items():
        start = {(0, 0, 0) + tuple(cm): ONE_POLY}
        if is_sorted_word(word):
            i, j, k = word_counts(word)
            _addto(out, (i, j, k) + tuple(cm), c)
            continue
        for k2, c2 in _elem_word(start, word).items():
            _addto(out, k2, c * c2)
    return den, out


def _element_of(den: LaurentPoly, d: dict, form: BasisForm) -> AlgebraElement:
    terms = {}
    trivial = den == ONE_POLY
    for key, c in d.items():
        if not c:
            continue
        coeff = RationalFunction.from_poly(c) if trivial else RationalFunction(c, den)
        terms[(sorted_word(key[0], key[1], key[2]), CentralMono(*key[3:]))] = coeff
    return AlgebraElement._trusted(terms, form)


def normal_dict(u: AlgebraElement, basis: str = "main"):
    """Internal (D, dict) view used by fast paths elsewhere in the package."""
    den, d = _pre_dict_of(u)
    if basis == "main":
        d = _pre_to_main(d)
    return den, d


# -- public operations ----------------------------------------------------------

def expand_omega(u: AlgebraElement) -> AlgebraElement:
    """Replace every Omega^l by the l-th power of the Casimir expansion."""
    if not u.has_omega():
        return u
    cas = casimir_expansion()
    out = AlgebraElement.zero()
    for (word, cm), c in u.items():
        term = AlgebraElement.word(word, c, CentralMono(0, *cm[1:]))
        out = out + (cas ** cm.omega) * term
    return out.with_form(BasisForm.RAW)


def normalize_pre(u: AlgebraElement, expand: bool = False) -> AlgebraElement:
    """Coordinates of ``u`` in the basis A^i B^j C^k alpha^r beta^s gamma^t."""
    if u.has_omega():
        if not expand:
            raise OmegaPresentError("element contains Omega; pass expand=True")
        den, d = _pre_dict_of(u)
        d = _expand_omega_dict(d)
        return _element_of(den, d, BasisForm.PRE)
    if u.form in (BasisForm.PRE,) and u.check_form():
        return u
    den, d = _pre_dict_of(u)
    return _element_of(den, d, BasisForm.PRE)


def to_main_basis(u: AlgebraElement) -> AlgebraElement:
    """Coordinates of ``u`` in the basis A^i B^j C^k Omega^l ... with ijk = 0.

    Omega is central, so a factor Omega^l is carried through unchanged rather
    than expanded and re-collected; the coordinates are the same.
    """
    if u.form is BasisForm.MAIN and u.check_form():
        return u
    den, d = normal_dict(u, "main")
    return _element_of(den, d, BasisForm.MAIN)


def from_main_basis(u: AlgebraElement) -> AlgebraElement:
    """Expand Omega and return pre-basis coordinates."""
    den, d = _pre_dict_of(u)
    return _element_of(den, _expand_omega_dict(d), BasisForm.PRE)


def is_zero(u: AlgebraElement) -> bool:
    """True iff ``u`` is zero in Delta_q."""
    if not u:
        return True
    _, d = normal_dict(u, "main")
    return not any(d.values())


def equal_in_algebra(u: AlgebraElement, v: AlgebraElement) -> bool:
    return is_zero(u - v)


def product(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """to_main_basis(u * v), reusing the normal forms of the factors."""
    du, a = normal_dict(u, "main")
    dv, b = normal_dict(v, "main")
    d = _pre_to_main(_mul_normal(a, b))
    return _element_of(du * dv, d, BasisForm.MAIN)


# -- reference strategy ---------------------------------------------------------

def _inversions(word: str) -> int:
    n = 0
    for a in range(len(word)):
        for b in range(a + 1, len(word)):
            if word[a] > word[b]:
                n += 1
    return n


def normalize_pre_by_rewriting(u: AlgebraElement, max_steps: int = 1_000_000) -> AlgebraElement:
    """Slow reference reduction: rewrite the leftmost descending pair until sorted.

    Uses the same three exchange rules as :func:`normalize_pre` but no
    memoization; meant as an independent cross-check.
    """
    if u.has_omega():
        raise OmegaPresentError("element contains Omega")
    rules = {}
    for pair, rhs in RULES.items():
        rules[pair] = [(sorted_word(*k[:3]), CentralMono(*k[3:]), c) for k, c in rhs.items()]
    work = defaultdict(lambda: ZERO_POLY)
    den, nums = _scaled_numerators(u)
    for key, c in nums.items():
        work[key] = work[key] + c
    done = {}
    steps = 0
    while work:
        (word, cm), c = work.popitem()
        if not c:
            continue
        pos = next((p for p in range(len(word) - 1) if word[p] > word[p + 1]), None)
        if pos is None:
            _addto(done, (word, cm), c)
            continue
        steps += 1
        if steps > max_steps:
            raise NonterminationError("rewriting exceeded its step cap")
        before = (len(word), _inversions(word))
        for rw, rcm, rc in rules[word[pos:pos + 2]]:
            nw = word[:pos] + rw + word[pos + 2:]
            assert (len(nw), _inversions(nw)) < before
            key = (nw, cm.times(rcm))
            work[key] = work[key] + c * rc
    terms = {}
    for (word, cm), c in done.items():
        terms[(word, cm)] = RationalFunction(c, den)
    return AlgebraElement(terms, BasisForm.PRE)
