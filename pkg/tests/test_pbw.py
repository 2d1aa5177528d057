from fractions import Fraction

import pytest

from qonsager import automorphisms as aut
from qonsager.algebra import A, B, C, ALPHA, BETA, GAMMA, BasisForm
from qonsager.expr import parse_element as P
from qonsager.normalform import is_zero, product, to_main_basis
from qonsager.pbw import (
    DELTA_METHODS, b_delta_raw, b_delta_tilde_raw, check_center_membership,
    check_fix_property, pbw_delta, pbw_real, pbw_real_alt, u_times_generator_direct,
    un_times_generator,
)
from qonsager.qfield import qpow, specialize

q = qpow(1)
qi = qpow(-1)


def M(src):
    return to_main_basis(P(src))


def test_automorphism_examples():
    assert aut.T0(A) == A
    assert aut.RHO(ALPHA) == BETA
    assert aut.SIGMA(C) == M("C + (A B - B A)/(q - q^-1)")


def test_group_laws():
    I = aut.identity()
    R, S = aut.RHO, aut.SIGMA
    assert aut.compose_all(R, R, R).same_action(I)
    assert aut.compose(S, S).same_action(I)
    assert aut.compose_all(R, R, S, R, R, S).same_action(aut.T0)
    assert aut.compose_all(S, R, R, S, R, R).same_action(aut.T1)
    for f, g in ((aut.T0, aut.T0_INV), (aut.T1, aut.T1_INV)):
        assert aut.compose(f, g).same_action(I)
        assert aut.compose(g, f).same_action(I)


def test_automorphisms_fix_centrals_of_t_maps():
    for a in (aut.T0, aut.T1, aut.T0_INV, aut.T1_INV):
        assert a(ALPHA) == ALPHA and a(BETA) == BETA and a(GAMMA) == GAMMA


def test_automorphisms_preserve_relations():
    rel = P("A^3 B - [3]_q A^2 B A + [3]_q A B A^2 - B A^3 - (q^2 - q^-2)^2 (B A - A B)")
    for a in aut.AUTOMORPHISMS.values():
        assert is_zero(a(rel))


def test_fix_property_steps():
    bd = to_main_basis(b_delta_raw())
    bt = to_main_basis(b_delta_tilde_raw())
    assert aut.T1(bd) == bt
    assert aut.T0(bt) == bd
    assert check_fix_property()


def test_real_small():
    assert pbw_real("alpha0", 0).value == A
    assert pbw_real("alpha1", 0, "closed").value == B
    expected = M("-q B C - q^2 A + q alpha")
    assert pbw_real("alpha1", 1, "recursive").value == expected
    assert pbw_real("alpha1", 1, "closed").value == expected
    assert pbw_real_alt("alpha0", 0).value == A
    assert pbw_real_alt("alpha0", 1).value == pbw_real("alpha0", 1, "closed").value


@pytest.mark.parametrize("family", ["alpha0", "alpha1"])
def test_real_methods_agree(family):
    for n in range(13):
        rec = pbw_real(family, n).value
        assert rec.form is BasisForm.MAIN and rec.check_form()
        assert pbw_real(family, n, "closed").value == rec
        assert pbw_real_alt(family, n).value == rec


@pytest.mark.parametrize("family", ["alpha0", "alpha1"])
def test_automorphism_route(family):
    for n in range(5):
        assert pbw_real(family, n, "automorphism").value == pbw_real(family, n).value


def test_delta_one():
    expected = M("q^-1 (q^2 - q^-2) C - q^-1 (q - q^-1) gamma")
    for m in DELTA_METHODS:
        assert pbw_delta(1, m).value == expected


def test_delta_methods_agree():
    for n in range(1, 11):
        vals = [pbw_delta(n, m).value for m in DELTA_METHODS]
        assert vals[0] == vals[1] == vals[2]


def test_delta_index_errors():
    with pytest.raises(IndexError):
        pbw_delta(0)
    with pytest.raises(ValueError):
        pbw_delta(2, "bogus")


def test_center_membership():
    for n in range(1, 11):
        assert check_center_membership(n)


def test_delta_commute():
    for n in range(2, 7):
        for m in range(1, n):
            x, y = pbw_delta(m).value, pbw_delta(n).value
            assert product(x, y) == product(y, x)


def test_un_times_generator():
    assert un_times_generator(1, "A") == to_main_basis(C * A)
    for n in range(1, 9):
        for g in "AB":
            assert un_times_generator(n, g) == u_times_generator_direct(n, g)


def test_specialized_delta_agree():
    q0 = Fraction(3, 2)
    for n in range(1, 7):
        a = pbw_delta(n, "closed").value
        b = pbw_delta(n, "recursive-a1").value
        assert {k: specialize(c, q0) for k, c in a.items()} == {k: specialize(c, q0) for k, c in b.items()}


def test_delta_two_is_nontrivial():
    # the alpha*beta row carries a factor l^2, so it first shows up at n = 3
    assert not any(cm.alpha and cm.beta for (_, cm) in pbw_delta(2).value.terms)
    u = pbw_delta(3).value
    assert u.has_omega()
    assert any(cm.alpha and cm.beta for (_, cm) in u.terms)
