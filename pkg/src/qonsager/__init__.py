"""Exact computations in the universal Askey-Wilson algebra over Q(q)."""

from .algebra import A, B, C, ALPHA, BETA, GAMMA, OMEGA, AlgebraElement, CentralMono
from .expr import parse_element
from .normalform import is_zero, normalize_pre, product, to_main_basis
from .pbw import pbw_delta, pbw_real
from .qfield import RationalFunction, bracket, qpow
from .render import to_text

__all__ = [
    "A", "B", "C", "ALPHA", "BETA", "GAMMA", "OMEGA", "AlgebraElement", "CentralMono",
    "parse_element", "is_zero", "normalize_pre", "product", "to_main_basis",
    "pbw_delta", "pbw_real", "RationalFunction", "bracket", "qpow", "to_text",
]
