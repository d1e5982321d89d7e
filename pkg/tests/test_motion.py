from fractions import Fraction

import pytest

from altset.continuum import Point, WitnessedRelative, WitnessedUniform
from altset.errors import TooFewSamples
from altset.motion import MotionTrace, check_continuous, check_observable, read_trace, zeno_dichotomy
from altset.errors import ParseError

F = Fraction
GRID = [F(i, 10) for i in range(11)]


def trace(f, theta_t, theta_s, times=GRID):
    return MotionTrace.from_function(times, f, WitnessedUniform(theta_t), WitnessedUniform(theta_s))


def brute(tr, premise, conclusion):
    s = tr.samples
    return all(not premise(a, b) or conclusion(a, b) for i, a in enumerate(s) for b in s[i + 1:])


def test_identity_trace():
    tr = trace(lambda t: t, F(15, 100), F(15, 100))
    assert check_continuous(tr).ok
    assert check_observable(tr).ok
    assert brute(tr, tr.times_indiscernible, tr.images_indiscernible)


def test_step_trace():
    tr = MotionTrace(((0, Point(0)), (F(1, 10), Point(5))), WitnessedUniform(F(15, 100)), WitnessedUniform(1))
    result = check_continuous(tr)
    assert not result.ok
    a, b = result.pair
    assert (a.t, b.t) == (0, F(1, 10))


def test_vacuous_continuity():
    tr = trace(lambda t: 100 * t * t, F(1, 20), F(1, 100))
    assert check_continuous(tr).ok


def test_constant_trace_unobservable():
    long_grid = [F(i, 10) for i in range(101)]
    tr = trace(lambda t: 0, F(15, 100), F(15, 100), long_grid)
    assert check_continuous(tr).ok
    result = check_observable(tr)
    assert not result.ok
    a, b = result.pair
    assert not tr.times_indiscernible(a, b) and tr.images_indiscernible(a, b)


def test_expanding_map_observable():
    tr = trace(lambda t: 10 * t, F(15, 100), F(15, 100))
    assert check_observable(tr).ok
    assert brute(tr, tr.images_indiscernible, tr.times_indiscernible)


def test_too_few_samples():
    tr = trace(lambda t: t, 1, 1, [0])
    with pytest.raises(TooFewSamples):
        check_continuous(tr)
    with pytest.raises(TooFewSamples):
        check_observable(tr)


def test_trace_validation():
    with pytest.raises(ValueError):
        MotionTrace(((1, Point(0)), (0, Point(1))), WitnessedUniform(1), WitnessedUniform(1))


def test_spec_monotonicity(rng):
    for _ in range(40):
        times = sorted({F(rng.randint(0, 100), 10) for _ in range(12)})
        values = {t: F(rng.randint(-30, 30), 10) for t in times}
        tt = F(rng.randint(1, 20), 10)
        ts1 = F(rng.randint(1, 20), 10)
        ts2 = ts1 + F(rng.randint(0, 10), 10)
        if check_continuous(trace(values.__getitem__, tt, ts1, times)).ok:
            assert check_continuous(trace(values.__getitem__, tt, ts2, times)).ok
        tt2 = tt + F(rng.randint(0, 10), 10)
        if check_observable(trace(values.__getitem__, tt, ts1, times)).ok:
            assert check_observable(trace(values.__getitem__, tt2, ts1, times)).ok


def test_time_rescaling_invariance(rng):
    for _ in range(40):
        times = sorted({F(rng.randint(0, 60), 10) for _ in range(10)})
        values = {t: F(rng.randint(-20, 20), 10) for t in times}
        tt, ts = F(rng.randint(1, 20), 10), F(rng.randint(1, 20), 10)
        c = F(rng.randint(1, 50), rng.randint(1, 50))
        base = trace(values.__getitem__, tt, ts, times)
        scaled = trace(lambda t: values[t / c], tt * c, ts, [t * c for t in times])
        assert check_continuous(base).ok == check_continuous(scaled).ok
        assert check_observable(base).ok == check_observable(scaled).ok


def test_relative_space_spec():
    tr = MotionTrace.from_function([0, 1, 2], lambda t: 1000 + t, WitnessedUniform(F(3, 2)), WitnessedRelative(F(1, 100)))
    assert check_continuous(tr).ok
    assert not check_observable(tr).ok


def test_zeno_examples():
    # exact oracle: 2^-19 >= 10^-6 > 2^-20
    assert F(1, 2**19) >= F(1, 10**6) > F(1, 2**20)
    assert zeno_dichotomy(WitnessedUniform(F(1, 10**6))) == (20, F(1, 1048576))
    assert zeno_dichotomy(WitnessedUniform(F(1, 2))).steps == 2
    assert zeno_dichotomy(WitnessedUniform(2)).steps == 1


@pytest.mark.parametrize("start, ratio, theta", [(1, F(1, 2), F(1, 3)), (10, F(9, 10), F(1, 7)), (F(1, 3), F(1, 100), F(1, 10**9))])
def test_zeno_bracket(start, ratio, theta):
    n, final = zeno_dichotomy(WitnessedUniform(theta), start, ratio)
    assert final == F(start) * F(ratio) ** n
    assert F(start) * F(ratio) ** n < theta <= F(start) * F(ratio) ** (n - 1)


def test_zeno_rejects_bad_ratio():
    with pytest.raises(ValueError):
        zeno_dichotomy(WitnessedUniform(1), 1, 1)


def test_read_trace():
    rows = read_trace(["t,x,y", "0,0,0", "0.1,1/2,-1"])
    assert rows == [(0, Point(0, 0)), (F(1, 10), Point(F(1, 2), -1))]
    with pytest.raises(ParseError):
        read_trace(["0,0"])
    with pytest.raises(ParseError):
        read_trace(["t,x", "0,0,0"])
