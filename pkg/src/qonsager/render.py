"""Text, LaTeX and JSON rendering of algebra elements."""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import AlgebraElement, BasisForm, CentralMono, term_key
from .qfield import LaurentPoly, RationalFunction, format_laurent, ONE_POLY

_CENTRAL_TEXT = ("Omega", "alpha", "beta", "gamma")
_CENTRAL_TEX = (r"\Omega", r"\alpha", r"\beta", r"\gamma")


def _runs(word):
    out = []
    for ch in word:
        if out and out[-1][0] == ch:
            out[-1][1] += 1
        else:
            out.append([ch, 1])
    return out


def _monomial_text(word: str, cm: CentralMono) -> str:
    parts = [ch if n == 1 else f"{ch}^{n}" for ch, n in _runs(word)]
    for name, e in zip(_CENTRAL_TEXT, cm):
        if e:
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _split_sign(c: RationalFunction):
    """(negative?, |c|) where the sign is taken from the leading numerator term."""
    lead = c.num.items()[0][1]
    if lead < 0:
        return True, -c
    return False, c


def _coeff_text(c: RationalFunction, alone: bool) -> str:
    """Coefficient rendering; ``alone`` when no monomial follows it."""
    if c.den == ONE_POLY:
        if alone:
            s = format_laurent(c.num)
            return f"({s})" if len(c.num) > 1 else s
        if c.num == 1:
            return ""
        s = format_laurent(c.num)
        return (f"({s})" if len(c.num) > 1 else s) + "*"
    s = f"({format_laurent(c.num)})/({format_laurent(c.den)})"
    return s if alone else s + "*"


def to_text(u: AlgebraElement) -> str:
    """Deterministic text form, highest word degree first; parseable back."""
    if not u:
        return "0"
    keys = sorted(u.terms, key=term_key, reverse=True)
    out = []
    for idx, key in enumerate(keys):
        word, cm = key
        neg, c = _split_sign(u.terms[key])
        mono = _monomial_text(word, cm)
        body = _coeff_text(c, not mono) + mono
        if idx == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# -- LaTeX -------------------------------------------------------------------

def _frac_tex(v) -> str:
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    return rf"\frac{{{v.numerator}}}{{{v.denominator}}}"


def laurent_tex(p: LaurentPoly) -> str:
    if not p:
        return "0"
    out = []
    for idx, (e, v) in enumerate(p.items()):
        neg = v < 0
        a = -v if neg else v
        if e == 0:
            body = _frac_tex(a)
        else:
            mono = "q" if e == 1 else f"q^{{{e}}}"
            body = mono if a == 1 else _frac_tex(a) + mono
        sign = ("-" if neg else "") if idx == 0 else (" - " if neg else " + ")
        out.append(sign + body)
    return "".join(out)


def ratfunc_tex(c: RationalFunction) -> str:
    if c.den == ONE_POLY:
        return laurent_tex(c.num)
    return rf"\frac{{{laurent_tex(c.num)}}}{{{laurent_tex(c.den)}}}"


def _monomial_tex(word: str, cm: CentralMono) -> str:
    parts = [ch if n == 1 else f"{ch}^{{{n}}}" for ch, n in _runs(word)]
    for name, e in zip(_CENTRAL_TEX, cm):
        if e:
            parts.append(name if e == 1 else f"{name}^{{{e}}}")
    return " ".join(parts)


def _wrap(tex: str, c: RationalFunction) -> str:
    if c.den == ONE_POLY and len(c.num) == 1:
        return tex
    return rf"\left({tex}\right)"


def to_latex(u: AlgebraElement, chebyshev: bool = False) -> str:
    """LaTeX form.  With ``chebyshev``, powers of C are regrouped as U_n(C)."""
    if not u:
        return "0"
    if chebyshev:
        return _latex_chebyshev(u)
    keys = sorted(u.terms, key=term_key, reverse=True)
    out = []
    for idx, key in enumerate(keys):
        neg, c = _split_sign(u.terms[key])
        mono = _monomial_tex(*key)
        if not mono:
            body = _wrap(ratfunc_tex(c), c) if idx else ratfunc_tex(c)
        elif c == 1:
            body = mono
        else:
            body = _wrap(ratfunc_tex(c), c) + " " + mono
        sign = ("-" if neg else "") if idx == 0 else (" - " if neg else " + ")
        out.append(sign + body)
    return "".join(out)


def _latex_chebyshev(u: AlgebraElement) -> str:
    from .chebyshev import UPoly, to_u_basis
    groups: dict = {}
    for (word, cm), c in u.terms.items():
        k = len(word) - len(word.rstrip("C"))
        head = word[: len(word) - k]
        groups.setdefault((head, cm), {})[k] = c
    rows = []
    for (head, cm) in sorted(groups, key=term_key, reverse=True):
        ucoeffs = to_u_basis(UPoly(groups[(head, cm)]))
        pieces = []
        for n in sorted(ucoeffs, reverse=True):
            c = ucoeffs[n]
            neg, a = _split_sign(c)
            body = ("" if a == 1 else _wrap(ratfunc_tex(a), a) + " ") + f"U_{{{n}}}(C)"
            pieces.append(("-" if neg else "+") + " " + body)
        inner = " ".join(pieces).lstrip("+ ")
        mono = _monomial_tex(head, cm)
        rows.append(rf"{mono or '1'} & {inner} \\")
    return "\n".join([r"\begin{tabular}{c|c}", r"term & coefficient \\", r"\hline"]
                     + rows + [r"\end{tabular}"])


# -- JSON --------------------------------------------------------------------

def _poly_json(p: LaurentPoly):
    return [[e, str(Fraction(v))] for e, v in p.items()]


def _poly_from_json(items) -> LaurentPoly:
    return LaurentPoly({int(e): Fraction(v) for e, v in items})


def to_json_obj(u: AlgebraElement) -> dict:
    terms = []
    for (word, cm), c in u.terms.items():
        terms.append({
            "word": word,
            "omega": cm.omega, "alpha": cm.alpha, "beta": cm.beta, "gamma": cm.gamma,
            "coeff": {"num": _poly_json(c.num), "den": _poly_json(c.den)},
        })
    return {"form": u.form.value, "terms": terms}


def to_json(u: AlgebraElement, **kw) -> str:
    return json.dumps(to_json_obj(u), **kw)


def from_json_obj(obj: dict) -> AlgebraElement:
    form = BasisForm(obj.get("form", "raw"))
    terms = {}
    for t in obj["terms"]:
        cm = CentralMono(t.get("omega", 0), t.get("alpha", 0), t.get("beta", 0), t.get("gamma", 0))
        c = RationalFunction(_poly_from_json(t["coeff"]["num"]), _poly_from_json(t["coeff"]["den"]))
        terms[(t["word"], cm)] = c
    u = AlgebraElement(terms, form)
    if not u.check_form():
        raise ValueError(f"terms violate the declared form {form.value!r}")
    return u


def from_json(s: str) -> AlgebraElement:
    return from_json_obj(json.loads(s))
