"""Sampled motions between two indiscernibility spaces."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .continuum import IndiscernibilitySpec, Point, WitnessedUniform, parse_point
from .errors import DimensionMismatch, ParseError, TooFewSamples
from .parsing import parse_rational


class Sample(NamedTuple):
    t: Fraction
    p: Point

    def __str__(self) -> str:
        return f"{self.t}:{self.p}"


@dataclass(frozen=True)
class MotionTrace:
    samples: tuple[Sample, ...]
    time_spec: IndiscernibilitySpec
    space_spec: IndiscernibilitySpec

    def __post_init__(self):
        samples = tuple(Sample(Fraction(t), p if isinstance(p, Point) else Point(p)) for t, p in self.samples)
        object.__setattr__(self, "samples", samples)
        for a, b in zip(samples, samples[1:]):
            if not a.t < b.t:
                raise ValueError(f"sample times must increase strictly ({a.t} then {b.t})")
        if samples:
            dim = len(samples[0].p)
            if any(len(s.p) != dim for s in samples):
                raise DimensionMismatch("trace points have mixed dimensions")

    @classmethod
    def from_function(cls, times: Iterable, f, time_spec, space_spec) -> MotionTrace:
        return cls(tuple((t, Point(f(Fraction(t)))) for t in times), time_spec, space_spec)

    def times_indiscernible(self, a: Sample, b: Sample) -> bool:
        return self.time_spec.related(Point(a.t), Point(b.t))

    def images_indiscernible(self, a: Sample, b: Sample) -> bool:
        return self.space_spec.related(a.p, b.p)


class CheckResult(NamedTuple):
    ok: bool
    pair: tuple[Sample, Sample] | None

    def __bool__(self) -> bool:
        return self.ok


def _pairs(trace: MotionTrace):
    s = trace.samples
    if len(s) < 2:
        raise TooFewSamples(f"need at least 2 samples, got {len(s)}")
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            yield s[i], s[j]


def check_continuous(trace: MotionTrace) -> CheckResult:
    """Indiscernible times must map to indiscernible points (all pairs)."""
    for a, b in _pairs(trace):
        if trace.times_indiscernible(a, b) and not trace.images_indiscernible(a, b):
            return CheckResult(False, (a, b))
    return CheckResult(True, None)


def check_observable(trace: MotionTrace) -> CheckResult:
    """Indiscernible points must come from indiscernible times (all pairs)."""
    for a, b in _pairs(trace):
        if trace.images_indiscernible(a, b) and not trace.times_indiscernible(a, b):
            return CheckResult(False, (a, b))
    return CheckResult(True, None)


class ZenoResult(NamedTuple):
    steps: int
    final: Fraction


def zeno_dichotomy(space_spec: WitnessedUniform, start=Fraction(1), ratio=Fraction(1, 2)) -> ZenoResult:
    """Least ``n >= 1`` with ``start * ratio**n < theta``.

    The remaining distance to the goal after ``n`` steps is then
    indiscernible from zero.  With ``ratio`` the tortoise/Achilles speed
    ratio this is also the Achilles race.
    """
    start, ratio = Fraction(start), Fraction(ratio)
    if not 0 < ratio < 1:
        raise ValueError("ratio must lie strictly between 0 and 1")
    if start <= 0:
        raise ValueError("start must be positive")
    theta = space_spec.theta
    n, distance = 1, start * ratio
    while not distance < theta:
        n += 1
        distance *= ratio
    return ZenoResult(n, distance)


def read_trace(lines: Iterable[str]) -> list[tuple[Fraction, Point]]:
    """Header ``t,x1,...,xn`` then one ``t,x1,...,xn`` sample per line."""
    rows: list[tuple[Fraction, Point]] = []
    header_seen = False
    width = None
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not header_seen:
            fields = [f.strip() for f in line.split(",")]
            if fields[0] != "t" or len(fields) < 2:
                raise ParseError(f"line {lineno}: expected header 't,x1,...', got {line!r}")
            width = len(fields)
            header_seen = True
            continue
        fields = line.split(",")
        if len(fields) != width:
            raise ParseError(f"line {lineno}: expected {width} fields, got {len(fields)}")
        try:
            rows.append((parse_rational(fields[0]), parse_point(",".join(fields[1:]))))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    if not header_seen:
        raise ParseError("missing header line")
    return rows


def pair_str(pair: Sequence[Sample]) -> str:
    return f"{pair[0]} {pair[1]}"
