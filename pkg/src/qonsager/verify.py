"""Verification suites: each runs a list of exact identity checks and reports.

A suite is a generator of ``(check_id, params, thunk)`` triples; the runner
times each thunk and records pass/fail.  Index caps come from ``max_n``.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import automorphisms as aut
from . import chebyshev as cheb
from . import pbw
from .algebra import (
    A, B, C, ALPHA, BETA, GAMMA, AlgebraElement, casimir_expansion, commutator,
    derived_central,
)
from .expr import parse_element
from .normalform import from_main_basis, is_zero, normalize_pre, product, to_main_basis
from .qfield import ONE, bracket, qpow, specialize

SUITES = ("field", "chebyshev", "relations", "automorphisms",
          "closed-forms", "delta-commute", "tca")
DEFAULT_MAX_N = {"closed-forms": 12, "delta-commute": 6, "tca": 8}

# U_0 .. U_9 as printed in the standard table (monic convention)
U_TABLE = (
    "1", "x", "x^2-1", "x^3-2x", "x^4-3x^2+1", "x^5-4x^3+3x",
    "x^6-5x^4+6x^2-1", "x^7-6x^5+10x^3-4x", "x^8-7x^6+15x^4-10x^2+1",
    "x^9-8x^7+21x^5-20x^3+5x",
)


@dataclass
class CheckResult:
    check: str
    params: dict
    passed: bool
    seconds: float
    detail: str = ""


@dataclass
class VerifyReport:
    suite: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            params = ", ".join(f"{k}={v}" for k, v in c.params.items())
            mark = "PASS" if c.passed else "FAIL"
            line = f"{mark}  {c.check}({params})  {c.seconds:.3f}s"
            if c.detail and not c.passed:
                line += f"  {c.detail}"
            lines.append(line)
        total = sum(c.seconds for c in self.checks)
        lines.append(f"suite {self.suite}: {'pass' if self.passed else 'FAIL'} "
                     f"({len(self.checks) - len(self.failures())}/{len(self.checks)} checks, {total:.2f}s)")
        return "\n".join(lines)

    def to_json_obj(self) -> dict:
        return {"suite": self.suite, "overall": "pass" if self.passed else "fail",
                "checks": [asdict(c) for c in self.checks]}


def parse_upoly(text: str) -> cheb.UPoly:
    """Read a table entry like ``x^3-2x`` into a UPoly with integer coefficients."""
    out = {}
    for term in text.replace("-", "+-").split("+"):
        if not term:
            continue
        coeff, _, power = term.partition("x")
        if "x" not in term:
            out[0] = int(coeff)
            continue
        c = -1 if coeff == "-" else int(coeff) if coeff else 1
        out[int(power[1:]) if power else 1] = c
    return cheb.UPoly(out)


# -- field ---------------------------------------------------------------------

def _field_checks(max_n, rng):
    s1 = qpow(1) + qpow(-1)
    yield "bracket-recurrence", {"r": "-20..20"}, lambda: all(
        not (bracket(r - 1) - s1 * bracket(r) + bracket(r + 1)) for r in range(-20, 21))

    def ident3():
        for r in range(-10, 11):
            for s in range(-10, 11):
                lhs = bracket(r - 1) * bracket(s - 1) * bracket(r - s) + bracket(r) * bracket(s) * bracket(r - s)
                rhs = (bracket(r - 1) * bracket(s) * bracket(r - s + 1)
                       + bracket(r) * bracket(s - 1) * bracket(r - s - 1))
                if lhs != rhs:
                    return False
        return True
    yield "bracket-product-identity", {"r,s": "-10..10"}, ident3
    yield "bracket-odd", {"n": "0..30"}, lambda: all(bracket(-n) == -bracket(n) for n in range(31))
    yield "bracket-value", {"n": 3}, lambda: bracket(3) == qpow(2) + 1 + qpow(-2)

    samples = [_random_scalar(rng) for _ in range(60)]

    def canonical():
        for a, b, c in zip(samples[::3], samples[1::3], samples[2::3]):
            if (a + b) * c != a * c + b * c or hash((a + b) * c) != hash(a * c + b * c):
                return False
            if b and (a / b) * b != a:
                return False
        return True
    yield "canonical-form", {"triples": 20}, canonical

    def homomorphism():
        q0 = Fraction(3, 2)
        for a, b, c in zip(samples[::3], samples[1::3], samples[2::3]):
            if specialize(a * b + c, q0) != specialize(a, q0) * specialize(b, q0) + specialize(c, q0):
                return False
        return True
    yield "specialize-homomorphism", {"q0": "3/2"}, homomorphism


def _random_scalar(rng):
    num = sum((qpow(rng.randint(-3, 3), rng.randint(-4, 4)) for _ in range(3)), ONE * 0)
    den = sum((qpow(rng.randint(0, 3), rng.randint(1, 3)) for _ in range(2)), ONE * 0)
    return num / den if den else num


# -- chebyshev --------------------------------------------------------------------

def _chebyshev_checks(max_n, order):
    yield "u-table", {"n": "0..9"}, lambda: all(cheb.u_poly(n) == parse_upoly(t) for n, t in enumerate(U_TABLE))
    yield "u-negative", {"n": -1}, lambda: not cheb.u_poly(-1)
    x = cheb.UPoly.x()
    yield "u-recurrence", {"n": "0..30"}, lambda: all(
        x * cheb.u_poly(n) == cheb.u_poly(n + 1) + cheb.u_poly(n - 1) for n in range(31))
    yield "u-three-forms", {"n": "0..20"}, lambda: all(
        cheb.u_poly(n) == cheb.u_closed_sum(n) and cheb.substitute_z(cheb.u_poly(n)) == cheb.u_via_z(n)
        for n in range(21))

    def shape():
        for n in range(31):
            p = cheb.u_poly(n)
            if not p.is_monic() or p.degree() != n:
                return False
            if any((d - n) % 2 or not isinstance(c, int) for d, c in p.coeffs.items()):
                return False
        return True
    yield "u-monic-parity", {"n": "0..30"}, shape
    for which in cheb.SERIES_IDS:
        yield f"series-{which}", {"order": order}, lambda w=which: cheb.check_series_identity(w, order)


# -- relations ----------------------------------------------------------------------

RELATIONS = {
    "rel1": "A^3 B - [3]_q A^2 B A + [3]_q A B A^2 - B A^3 - (q^2 - q^-2)^2 (B A - A B)",
    "rel2": "B^3 A - [3]_q B^2 A B + [3]_q B A B^2 - A B^3 - (q^2 - q^-2)^2 (A B - B A)",
    "rel3": "A^2 B^2 - B^2 A^2 + (q^2 + q^-2)(B A B A - A B A B) - (q - q^-1)^2 (B A - A B) gamma",
}

KNOWN_REDUCTIONS = {
    "BA": "q^2 A B + (q^3 - q^-1) C - (q^2 - 1) gamma",
    "CA": "q^-2 A C - (q - q^-3) B + (1 - q^-2) beta",
    "CB": "q^2 B C + (q^3 - q^-1) A - (q^2 - 1) alpha",
    "C A^2": "q^-4 A^2 C - q^-1 (q^4 - q^-4) A B + q^-2 (q^2 - q^-2) A beta"
             " - (q^2 - q^-2)^2 C + (q - q^-1)(q^2 - q^-2) gamma",
    "q^-2 B A - A B": "q^-1 (q^2 - q^-2) C - q^-1 (q - q^-1) gamma",
}

MAIN_REDUCTIONS = {
    "A B C": "q^-1 Omega - q A^2 - q^-3 B^2 - q C^2 + A alpha + q^-2 B beta + C gamma",
    "B A C": "q Omega - q^3 A^2 - q^-1 B^2 - q^-1 C^2 + q^2 A alpha + B beta + C gamma",
}


def _relation_checks(max_n):
    for name, src in RELATIONS.items():
        yield f"relation-{name}", {}, lambda s=src: is_zero(parse_element(s))
    cas = casimir_expansion()
    for cname, z in (("alpha", ALPHA), ("beta", BETA), ("gamma", GAMMA), ("Omega", cas)):
        for gname, g in (("A", A), ("B", B), ("C", C)):
            yield "central", {"z": cname, "x": gname}, lambda z=z, g=g: is_zero(commutator(z, g))
    yield "casimir-round-trip", {}, lambda: from_main_basis(AlgebraElement.central(omega=1)) == normalize_pre(cas)
    for lhs, rhs in KNOWN_REDUCTIONS.items():
        yield "normalize-pre", {"input": lhs}, lambda l=lhs, r=rhs: (
            normalize_pre(parse_element(l)) == normalize_pre(parse_element(r)))
    for lhs, rhs in MAIN_REDUCTIONS.items():
        yield "to-main", {"input": lhs}, lambda l=lhs, r=rhs: (
            to_main_basis(parse_element(l)) == to_main_basis(parse_element(r)))
    for which, target in (("C", C), ("alpha", ALPHA), ("beta", BETA)):
        yield "derived-central", {"which": which}, lambda w=which, t=target: is_zero(derived_central(w) - t)


# -- automorphisms ---------------------------------------------------------------------

def _automorphism_checks(max_n):
    I = aut.identity()
    R, S = aut.RHO, aut.SIGMA
    yield "rho-cubed", {}, lambda: aut.compose_all(R, R, R).same_action(I)
    yield "sigma-squared", {}, lambda: aut.compose(S, S).same_action(I)
    yield "t0-word", {}, lambda: aut.compose_all(R, R, S, R, R, S).same_action(aut.T0)
    yield "t1-word", {}, lambda: aut.compose_all(S, R, R, S, R, R).same_action(aut.T1)
    for f, g in ((aut.T0, aut.T0_INV), (aut.T0_INV, aut.T0), (aut.T1, aut.T1_INV), (aut.T1_INV, aut.T1)):
        yield "inverse", {"map": f"{f.name}*{g.name}"}, lambda f=f, g=g: aut.compose(f, g).same_action(I)
    bd = to_main_basis(pbw.b_delta_raw())
    bt = to_main_basis(pbw.b_delta_tilde_raw())
    yield "t1-of-B-delta", {}, lambda: aut.T1(bd) == bt
    yield "t0-of-B-delta-tilde", {}, lambda: aut.T0(bt) == bd
    yield "fix-property", {}, pbw.check_fix_property
    for a in aut.AUTOMORPHISMS.values():
        yield "preserves-relations", {"map": a.name}, lambda a=a: all(
            is_zero(a(parse_element(s))) for s in RELATIONS.values())


# -- PBW closed forms ----------------------------------------------------------------------

def _closed_form_checks(max_n):
    for fam in ("alpha0", "alpha1"):
        for n in range(max_n + 1):
            def real(f=fam, n=n):
                rec = pbw.pbw_real(f, n, "recursive").value
                return rec == pbw.pbw_real(f, n, "closed").value == pbw.pbw_real_alt(f, n).value
            yield "real-closed", {"family": fam, "n": n}, real
    for fam in ("alpha0", "alpha1"):
        for n in range(min(max_n, 4) + 1):
            yield "real-automorphism-route", {"family": fam, "n": n}, lambda f=fam, n=n: (
                pbw.pbw_real(f, n, "automorphism").value == pbw.pbw_real(f, n).value)
    for n in range(1, max_n + 1):
        def delta(n=n):
            vals = [pbw.pbw_delta(n, m).value for m in pbw.DELTA_METHODS]
            return vals[0] == vals[1] == vals[2]
        yield "delta-three-way", {"n": n}, delta
        yield "center-membership", {"n": n}, lambda n=n: pbw.check_center_membership(n)
    for n in range(1, min(max_n, 6) + 1):
        yield "delta-specialized", {"n": n, "q0": "3/2"}, lambda n=n: _specialized_equal(
            pbw.pbw_delta(n, "closed").value, pbw.pbw_delta(n, "recursive-a1").value, Fraction(3, 2))


def _specialized_equal(u, v, q0):
    su = {k: specialize(c, q0) for k, c in u.terms.items()}
    sv = {k: specialize(c, q0) for k, c in v.terms.items()}
    return su == sv


def _delta_commute_checks(max_n):
    for n in range(2, max_n + 1):
        for m in range(1, n):
            def check(m=m, n=n):
                x, y = pbw.pbw_delta(m).value, pbw.pbw_delta(n).value
                return not (product(x, y) - product(y, x))
            yield "delta-commute", {"m": m, "n": n}, check


def _tca_checks(max_n):
    for n in range(1, max_n + 1):
        for g in "AB":
            yield "u-times-generator", {"n": n, "g": g}, lambda n=n, g=g: (
                pbw.un_times_generator(n, g) == pbw.u_times_generator_direct(n, g))


# -- runner --------------------------------------------------------------------------------

def _checks_for(suite, max_n, order, seed):
    if suite == "field":
        return _field_checks(max_n, random.Random(seed))
    if suite == "chebyshev":
        return _chebyshev_checks(max_n, order)
    if suite == "relations":
        return _relation_checks(max_n)
    if suite == "automorphisms":
        return _automorphism_checks(max_n)
    if suite == "closed-forms":
        return _closed_form_checks(max_n)
    if suite == "delta-commute":
        return _delta_commute_checks(max_n)
    if suite == "tca":
        return _tca_checks(max_n)
    raise ValueError(f"unknown suite {suite!r}")


def run_suite(suite: str, max_n: int | None = None, order: int = cheb.DEFAULT_ORDER,
              seed: int = 0) -> VerifyReport:
    """Run one suite (or ``all``) with indices capped at ``max_n``."""
    if max_n is not None and max_n < 1:
        raise ValueError("max_n must be >= 1")
    names = SUITES if suite == "all" else (suite,)
    report = VerifyReport(suite)
    for name in names:
        cap = max_n if max_n is not None else DEFAULT_MAX_N.get(name, 1)
        for check_id, params, thunk in _checks_for(name, cap, order, seed):
            t = time.perf_counter()
            try:
                ok, detail = bool(thunk()), ""
            except Exception as exc:  # a crash is a failed check, not a crashed run
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            report.checks.append(CheckResult(f"{name}/{check_id}", params, ok,
                                             time.perf_counter() - t, detail))
    return report


def report_json(report: VerifyReport) -> str:
    return json.dumps(report.to_json_obj(), indent=2)
