import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from altset.omega import OmegaRational
from altset.poly import Polynomial

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_poly(rng, max_degree=4, lo=-100, hi=100, nonzero=False):
    while True:
        p = Polynomial([rng.randint(lo, hi) for _ in range(rng.randint(0, max_degree) + 1)])
        if not nonzero or not p.is_zero():
            return p


def random_element(rng, max_degree=4, lo=-100, hi=100):
    return OmegaRational(random_poly(rng, max_degree, lo, hi), random_poly(rng, max_degree, lo, hi, nonzero=True))


def random_bounded(rng, max_degree=4, lo=-100, hi=100):
    while True:
        x = random_element(rng, max_degree, lo, hi)
        if x.num.degree <= x.den.degree:
            return x


@pytest.fixture
def rng():
    return random.Random(20261016)


small_ints = st.integers(min_value=-30, max_value=30)
polys = st.lists(small_ints, min_size=0, max_size=4).map(Polynomial)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
elements = st.builds(OmegaRational, polys, nonzero_polys)
bounded_elements = elements.filter(lambda x: x.num.degree <= x.den.degree)
rationals = st.fractions(min_value=-50, max_value=50, max_denominator=40)
