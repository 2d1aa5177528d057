from hypothesis import given, settings

from qonsager.algebra import (
    A, B, C, ALPHA, GAMMA, OMEGA, AlgebraElement, BasisForm, CentralMono,
    casimir_expansion, commutator, derived_central,
)
from qonsager.qfield import ONE, qpow
from conftest import elements, scalars

q = qpow(1)
qi = qpow(-1)


def test_addition_basics():
    assert A + AlgebraElement.zero() == A
    assert not (A + (-1) * A)
    assert A * B * q + A * B * qi == (A * B).scale(q + qi)


def test_free_product_concatenates():
    u = (A * B).scale(q) * (C * ALPHA)
    assert u.terms == {("ABC", CentralMono(alpha=1)): q}
    assert u.form is BasisForm.RAW
    assert (GAMMA * ALPHA).terms == {("", CentralMono(alpha=1, gamma=1)): ONE}


def test_zero_coefficients_dropped():
    u = AlgebraElement({("A", CentralMono()): ONE, ("B", CentralMono()): ONE - 1})
    assert len(u) == 1


def test_casimir_coefficients():
    cas = casimir_expansion()
    assert cas.coefficient("ABC") == q
    assert cas.coefficient("A", CentralMono(alpha=1)) == -q
    assert cas.coefficient("") == 0
    assert not cas.has_omega()
    assert OMEGA.has_omega()


def test_derived_central_coefficients():
    d1 = q - qi
    d2 = q * q - qi * qi
    assert derived_central("C").coefficient("AB") == -q / d2
    assert derived_central("alpha").coefficient("BAB") == -(q * q + qi * qi) / (d1 * d2)
    assert derived_central("beta").coefficient("A", CentralMono(gamma=1)) == d1 / d2


def test_commutator_of_generators():
    assert commutator(A, B) == A * B - B * A
    assert not commutator(A, A)


def test_term_order_is_deterministic():
    u = C + A * B + ALPHA + B
    words = [w for (w, _), _ in u.items()]
    assert words == sorted(words, key=lambda w: (len(w), w))


@settings(max_examples=60, deadline=None)
@given(elements(), elements(), elements())
def test_ring_laws(u, v, w):
    assert (u * v) * w == u * (v * w)
    assert u * AlgebraElement.one() == u == AlgebraElement.one() * u
    assert u * (v + w) == u * v + u * w
    assert (u + v) * w == u * w + v * w


@settings(max_examples=60, deadline=None)
@given(elements(), elements(), scalars())
def test_scalars_commute(u, v, c):
    assert (u * v).scale(c) == u.scale(c) * v == u * v.scale(c)
    assert (u + v).scale(c) == u.scale(c) + v.scale(c)


@settings(max_examples=60, deadline=None)
@given(elements(), elements(), elements(), scalars())
def test_commutator_bilinear_antisymmetric(u, v, w, c):
    assert not (commutator(u, v) + commutator(v, u))
    assert commutator(u + w.scale(c), v) == commutator(u, v) + commutator(w, v).scale(c)


@settings(max_examples=40, deadline=None)
@given(elements(omega=True), elements(omega=True))
def test_central_exponents_add(u, v):
    for (w1, c1), _ in u.items():
        for (w2, c2), _ in v.items():
            assert (AlgebraElement.word(w1, 1, c1) * AlgebraElement.word(w2, 1, c2)).terms == {
                (w1 + w2, c1.times(c2)): ONE}
