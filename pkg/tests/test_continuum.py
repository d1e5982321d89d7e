import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from altset.continuum import (
    IdealUniform,
    Point,
    WitnessedRelative,
    WitnessedUniform,
    figure,
    grid,
    indiscernible,
    is_connected,
    monad,
    read_points,
    transitivity_defect,
    witnessed_at_horizon,
)
from altset.errors import DimensionMismatch, EmptyInput, ParseError
from altset.parsing import parse_element

from conftest import rationals

F = Fraction


def pts(*values):
    return [Point(v) for v in values]


def brute_connected(spec, X):
    """The subset definition: every proper non-empty v has a pair crossing to X minus v."""
    n = len(X)
    for mask in range(1, (1 << n) - 1):
        inside = [i for i in range(n) if mask >> i & 1]
        outside = [i for i in range(n) if not mask >> i & 1]
        if not any(indiscernible(spec, X[i], X[j]) for i in inside for j in outside):
            return False
    return True


def test_indiscernible_examples():
    assert indiscernible(WitnessedUniform(1), Point(0), Point(F(1, 2)))
    assert not indiscernible(WitnessedUniform(F(1, 100)), Point(0), Point(F(1, 2)))
    assert not indiscernible(WitnessedUniform(1), Point(0), Point(1))  # strict
    x = Point(parse_element("1 + 1/w"))
    assert indiscernible(IdealUniform(1), x, Point(1))
    assert not indiscernible(IdealUniform(1), Point(1), Point(F(1001, 1000)))
    with pytest.raises(DimensionMismatch):
        indiscernible(WitnessedUniform(1), Point(0), Point(0, 0))


def test_ideal_scale():
    # at an infinitesimal unit, standard distances are no longer negligible
    d = parse_element("1/w")
    assert not indiscernible(IdealUniform(d), Point(parse_element("1/w")), Point(0))
    assert indiscernible(IdealUniform(d), Point(parse_element("1/w^2")), Point(0))
    big = IdealUniform(parse_element("w"))
    assert indiscernible(big, Point(0), Point(10**6))


def test_relative():
    spec = WitnessedRelative(F(1, 10))
    assert indiscernible(spec, Point(1000), Point(1050))
    assert not indiscernible(spec, Point(1), Point(F(3, 2)))
    assert indiscernible(spec, Point(0), Point(F(1, 20)))


@given(st.lists(rationals, min_size=2, max_size=2), st.lists(rationals, min_size=2, max_size=2), st.fractions(min_value=F(1, 100), max_value=10))
def test_reflexive_symmetric(a, b, t):
    x, y = Point(a), Point(b)
    for spec in (WitnessedUniform(t), WitnessedRelative(t), IdealUniform(t)):
        assert indiscernible(spec, x, x)
        assert indiscernible(spec, x, y) == indiscernible(spec, y, x)


def test_monad_examples():
    X = pts(0, F(1, 2), 2)
    assert monad(WitnessedUniform(1), Point(0), X) == pts(0, F(1, 2))
    assert monad(WitnessedUniform(F(1, 10**9)), Point(3), pts(3)) == pts(3)


def test_monad_naive_filter(rng):
    for _ in range(50):
        X = [Point(F(rng.randint(-50, 50), 10), F(rng.randint(-50, 50), 10)) for _ in range(rng.randint(1, 15))]
        theta = F(rng.randint(1, 40), 10)
        x = rng.choice(X)
        expected = [y for y in X if max(abs(x[0] - y[0]), abs(x[1] - y[1])) < theta]
        assert monad(WitnessedUniform(theta), x, X) == expected
        assert x in monad(WitnessedUniform(theta), x, X)


def test_figure_examples():
    ambient = pts(0, F(1, 2), 2)
    assert figure(WitnessedUniform(1), pts(0), ambient) == pts(0, F(1, 2))
    X = pts(0, 2)
    assert set(X) <= set(figure(WitnessedUniform(F(1, 10)), X, ambient))


def test_figure_support_idempotence(rng):
    for _ in range(30):
        ambient = [Point(F(rng.randint(0, 100), 10)) for _ in range(20)]
        X = rng.sample(ambient, 3)
        spec = WitnessedUniform(F(rng.randint(1, 30), 10))
        fig = figure(spec, X, ambient)
        assert set(figure(spec, fig, ambient)) >= set(fig)


def test_connected_examples():
    assert is_connected(WitnessedUniform(F(6, 10)), pts(0, F(1, 2), 1)).connected
    result = is_connected(WitnessedUniform(1), pts(0, 10))
    assert not result.connected
    assert result.part == pts(0) and result.rest == pts(10)
    assert is_connected(WitnessedUniform(1), pts(5)).connected
    with pytest.raises(EmptyInput):
        is_connected(WitnessedUniform(1), [])


def test_connected_matches_subset_oracle(rng):
    for _ in range(200):
        n = rng.randint(1, 8)
        X = [Point(F(rng.randint(0, 40), 4)) for _ in range(n)]
        spec = WitnessedUniform(F(rng.randint(1, 20), 4))
        result = is_connected(spec, X)
        assert result.connected == brute_connected(spec, X)
        if not result.connected:
            assert not any(indiscernible(spec, a, b) for a in result.part for b in result.rest)
            assert len(result.part) + len(result.rest) == n


def test_theta_monotonicity(rng):
    for _ in range(50):
        X = [Point(F(rng.randint(0, 60), 6)) for _ in range(8)]
        t1 = F(rng.randint(1, 20), 6)
        t2 = t1 + F(rng.randint(0, 20), 6)
        a, b = WitnessedUniform(t1), WitnessedUniform(t2)
        for x in X:
            assert set(monad(a, x, X)) <= set(monad(b, x, X))
        if is_connected(a, X).connected:
            assert is_connected(b, X).connected


def test_defect_examples():
    chain = transitivity_defect(WitnessedUniform(1), pts(0, F(6, 10), F(12, 10)))
    assert chain == (Point(0), Point(F(3, 5)), Point(F(6, 5)))
    assert transitivity_defect(WitnessedUniform(1), pts(0, 10, 20)) is None


def test_defect_rainbow_grid():
    for theta in (F(1), F(1, 7), F(3, 2)):
        X = list(grid(0, theta * F(6, 10), 5))
        x, y, z = transitivity_defect(WitnessedUniform(theta), X)
        assert indiscernible(WitnessedUniform(theta), x, y)
        assert indiscernible(WitnessedUniform(theta), y, z)
        assert not indiscernible(WitnessedUniform(theta), x, z)


def test_ideal_has_no_defect(rng):
    eps = [parse_element(s) for s in ("0", "1/w", "-3/w", "1/w^2", "(w+1)/w^3")]
    for _ in range(50):
        X = [Point(F(rng.randint(-3, 3)) + rng.choice(eps)) for _ in range(6)]
        assert transitivity_defect(IdealUniform(1), X) is None


def test_witnessed_at_horizon():
    assert witnessed_at_horizon(1, 1000).theta == F(1, 1000)


def test_read_points():
    lines = ["# header", "3/4,-1/2", "", "0.6, 1e-3"]
    assert read_points(lines) == [Point(F(3, 4), F(-1, 2)), Point(F(3, 5), F(1, 1000))]
    with pytest.raises(DimensionMismatch):
        read_points(["1,2", "3"])
    with pytest.raises(ParseError, match="line 2"):
        read_points(["1", "x"])
