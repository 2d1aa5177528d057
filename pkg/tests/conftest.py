import random

import pytest
from hypothesis import strategies as st

from qonsager.algebra import AlgebraElement, CentralMono
from qonsager.qfield import LaurentPoly, RationalFunction, qpow

small_ints = st.integers(min_value=-5, max_value=5)

laurent = st.dictionaries(st.integers(-4, 4), small_ints, max_size=4).map(LaurentPoly)


@st.composite
def scalars(draw, allow_zero=True):
    num = draw(laurent)
    den = draw(st.dictionaries(st.integers(0, 3), st.integers(1, 3), min_size=1, max_size=2).map(LaurentPoly))
    value = RationalFunction(num, den)
    if not allow_zero and not value:
        value = value + 1
    return value


@st.composite
def elements(draw, max_degree=4, max_terms=4, omega=False):
    """Sparse raw elements of bounded word degree."""
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        word = "".join(draw(st.lists(st.sampled_from("ABC"), max_size=max_degree)))
        cm = CentralMono(
            draw(st.integers(0, 1)) if omega else 0,
            draw(st.integers(0, 1)), draw(st.integers(0, 1)), draw(st.integers(0, 1)),
        )
        terms[(word, cm)] = draw(scalars())
    return AlgebraElement(terms)


def random_element(rng: random.Random, max_degree=4, max_terms=3, omega=False):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        word = "".join(rng.choice("ABC") for _ in range(rng.randint(0, max_degree)))
        cm = CentralMono(rng.randint(0, 1) if omega else 0, rng.randint(0, 1), 0, rng.randint(0, 1))
        c = qpow(rng.randint(-2, 2), rng.randint(-3, 3)) + rng.randint(-1, 1)
        terms[(word, cm)] = c
    return AlgebraElement(terms)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS):
            terminalreporter.write_line(line)
