"""Expressions over Delta_q: tokenizer, recursive-descent parser, elaboration.

Grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/' | juxtaposition) factor)*
    factor := atom ['^' ['-'] int]
    atom   := A | B | C | alpha | beta | gamma | Omega | q
            | int ['/' int] | '[' int ']_q' | '(' expr ')'

Division is accepted only by scalars (elements of Q(q)); this lets the text
renderer's ``(num)/(den)*word`` coefficients parse back.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraElement, ALPHA, BETA, GAMMA, OMEGA, A, B, C
from .qfield import RationalFunction, bracket, qpow


class ParseError(ValueError):
    """Syntax error at a byte offset of the source."""

    kind = "syntax-error"

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UnknownIdentifier(ParseError):
    kind = "unknown-identifier"


class BadExponent(ParseError):
    kind = "bad-exponent"


# -- AST -----------------------------------------------------------------------

@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Int:
    value: int


@dataclass(frozen=True)
class Rat:
    num: int
    den: int


@dataclass(frozen=True)
class Bracket:
    n: int


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    factors: tuple


@dataclass(frozen=True)
class Div:
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Paren:
    inner: object


ExprAST = Gen | Int | Rat | Bracket | Add | Sub | Mul | Div | Neg | Pow | Paren

NAMES = ("Omega", "alpha", "beta", "gamma", "A", "B", "C", "q")

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<bracket>\[\s*(?P<bn>-?\d+)\s*\]_q)
  | (?P<int>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()])
""", re.VERBOSE)


def tokenize(src: str):
    """List of (kind, text, offset); kinds are bracket, int, ident, op, end."""
    out = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        kind = m.lastgroup if m.lastgroup != "bn" else "bracket"
        if m.group("bracket"):
            out.append(("bracket", m.group("bn"), pos))
        elif kind == "ident":
            out.extend(_split_ident(m.group(), pos))
        elif kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(src)))
    return out


def _split_ident(text, offset):
    # greedy split so that juxtaposed names like "ABC" or "qA" read as products
    out = []
    i = 0
    while i < len(text):
        for name in NAMES:
            if text.startswith(name, i):
                out.append(("ident", name, offset + i))
                i += len(name)
                break
        else:
            raise UnknownIdentifier(f"unknown identifier {text!r}", offset)
    return out


class _Parser:
    def __init__(self, src):
        self.toks = tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, text):
        tok = self.take()
        if tok[1] != text or tok[0] not in ("op",):
            raise ParseError(f"expected {text!r}", tok[2])
        return tok

    def expr(self):
        if self.peek()[1] == "-" and self.peek()[0] == "op":
            self.take()
            node = Neg(self.term())
        else:
            node = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def _starts_atom(self):
        kind, text, _ = self.peek()
        return kind in ("ident", "int", "bracket") or (kind == "op" and text == "(")

    def term(self):
        factors = [self.factor()]
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text == "*":
                self.take()
                factors.append(self.factor())
            elif kind == "op" and text == "/":
                self.take()
                left = factors[0] if len(factors) == 1 else Mul(tuple(factors))
                factors = [Div(left, self.factor())]
            elif self._starts_atom():
                factors.append(self.factor())
            else:
                break
        return factors[0] if len(factors) == 1 else Mul(tuple(factors))

    def factor(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            sign = 1
            kind, text, off = self.peek()
            if kind == "op" and text == "-":
                self.take()
                sign = -1
                kind, text, off = self.peek()
            if kind != "int":
                raise BadExponent("exponent must be an integer", off)
            self.take()
            e = sign * int(text)
            if e < 0 and base != Gen("q"):
                raise BadExponent("only q may carry a negative exponent", off)
            return Pow(base, e)
        return base

    def atom(self):
        kind, text, off = self.take()
        if kind == "ident":
            return Gen(text)
        if kind == "bracket":
            return Bracket(int(text))
        if kind == "int":
            k2, t2, _ = self.peek()
            if k2 == "op" and t2 == "/" and self.toks[self.i + 1][0] == "int":
                self.take()
                den = int(self.take()[1])
                if den == 0:
                    raise ParseError("zero denominator", off)
                return Rat(int(text), den)
            return Int(int(text))
        if kind == "op" and text == "(":
            inner = self.expr()
            self.expect(")")
            return Paren(inner)
        if kind == "end":
            raise ParseError("unexpected end of input", off)
        raise ParseError(f"unexpected {text!r}", off)


def parse(src: str) -> ExprAST:
    if not src.strip():
        raise ParseError("empty expression", 0)
    p = _Parser(src)
    node = p.expr()
    kind, text, off = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {text!r}", off)
    return node


# -- elaboration -------------------------------------------------------------------

_LEAVES = {"A": A, "B": B, "C": C, "alpha": ALPHA, "beta": BETA, "gamma": GAMMA, "Omega": OMEGA}


def _scalar_of(u: AlgebraElement) -> RationalFunction | None:
    if not u:
        return RationalFunction.from_poly(0)
    if len(u) == 1:
        (word, cm), c = next(iter(u.items()))
        if not word and not any(cm):
            return c
    return None


def elaborate(ast) -> AlgebraElement:
    """Raw element denoted by ``ast``; scalars fold into coefficients."""
    match ast:
        case Gen("q"):
            return AlgebraElement.scalar(qpow(1))
        case Gen(name):
            return _LEAVES[name]
        case Int(v):
            return AlgebraElement.scalar(v)
        case Rat(n, d):
            return AlgebraElement.scalar(Fraction(n, d))
        case Bracket(n):
            return AlgebraElement.scalar(bracket(n))
        case Add(l, r):
            return elaborate(l) + elaborate(r)
        case Sub(l, r):
            return elaborate(l) - elaborate(r)
        case Neg(x):
            return -elaborate(x)
        case Paren(x):
            return elaborate(x)
        case Mul(fs):
            out = AlgebraElement.one()
            for f in fs:
                out = out * elaborate(f)
            return out
        case Div(l, r):
            d = _scalar_of(elaborate(r))
            if d is None or not d:
                raise ValueError("division is only defined by nonzero scalars")
            return elaborate(l) / d
        case Pow(Gen("q"), e):
            return AlgebraElement.scalar(qpow(e))
        case Pow(base, e):
            inner = elaborate(base)
            if e < 0:
                s = _scalar_of(inner)
                if s is None or not s:
                    raise ValueError("negative powers need an invertible scalar")
                return AlgebraElement.scalar(s ** e)
            return inner ** e
    raise TypeError(f"not an expression node: {ast!r}")


def parse_element(src: str) -> AlgebraElement:
    return elaborate(parse(src))
