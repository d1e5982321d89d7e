"""Three-valued class membership below a finite horizon.

A sigma-class is a countable union of definable pieces and a pi-class a
countable intersection.  Only indices below the hard bound of a
:class:`Horizon` are ever inspected, so a sigma-class can confirm
membership but never refute it, and a pi-class can refute membership but
never confirm it.  Whatever the scan cannot settle is reported as
``BEYOND_HORIZON``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, NamedTuple, Union

from .parsing import parse_rational


class Verdict(enum.Enum):
    IN = "In"
    OUT = "Out"
    BEYOND_HORIZON = "BeyondHorizon"

    def __str__(self) -> str:
        return self.value


# position in the antitone scan order In > BeyondHorizon > Out
VERDICT_RANK = {Verdict.IN: 2, Verdict.BEYOND_HORIZON: 1, Verdict.OUT: 0}


@dataclass(frozen=True)
class Horizon:
    hard: int
    soft: int

    def __post_init__(self):
        if not 0 < self.soft < self.hard:
            raise ValueError(f"horizon needs 0 < soft < hard, got soft={self.soft} hard={self.hard}")

    @classmethod
    def with_hard(cls, hard: int) -> Horizon:
        """Horizon whose vague band starts at a tenth of the hard bound."""
        return cls(hard=hard, soft=max(1, hard // 10))

    def doubled(self) -> Horizon:
        return Horizon(hard=2 * self.hard, soft=self.soft)


DEFAULT_HORIZON = Horizon(hard=10_000, soft=1_000)


class Kind(enum.Enum):
    SIGMA = "sigma"
    PI = "pi"


@dataclass(frozen=True)
class ClassFamily:
    """Indexed family ``P(n, x)``: the pieces ``A_n`` (sigma) or ``B_n`` (pi).

    ``generator`` must be pure and total for every ``n`` below the horizon.
    """

    kind: Kind
    generator: Callable[[int, Any], bool]
    domain: str = "rationals"
    name: str = ""

    def __call__(self, n: int, x) -> bool:
        return bool(self.generator(n, x))


def sigma_family(generator, domain="rationals", name="") -> ClassFamily:
    return ClassFamily(Kind.SIGMA, generator, domain, name)


def pi_family(generator, domain="rationals", name="") -> ClassFamily:
    return ClassFamily(Kind.PI, generator, domain, name)


class Evaluation(NamedTuple):
    verdict: Verdict
    index: int | None  # the deciding index, if any


def sigma_eval(family: ClassFamily, x, h: Horizon) -> Evaluation:
    if family.kind is not Kind.SIGMA:
        raise ValueError("sigma_member needs a sigma family")
    for n in range(h.hard):
        if family(n, x):
            return Evaluation(Verdict.IN, n)
    return Evaluation(Verdict.BEYOND_HORIZON, None)


def pi_eval(family: ClassFamily, x, h: Horizon) -> Evaluation:
    if family.kind is not Kind.PI:
        raise ValueError("pi_member needs a pi family")
    for n in range(h.hard):
        if not family(n, x):
            return Evaluation(Verdict.OUT, n)
    return Evaluation(Verdict.BEYOND_HORIZON, None)


def sigma_member(family: ClassFamily, x, h: Horizon) -> Verdict:
    return sigma_eval(family, x, h).verdict


def pi_member(family: ClassFamily, x, h: Horizon) -> Verdict:
    return pi_eval(family, x, h).verdict


def member(family: ClassFamily, x, h: Horizon) -> Verdict:
    """Dispatch on the family kind."""
    if family.kind is Kind.SIGMA:
        return sigma_member(family, x, h)
    return pi_member(family, x, h)


def complement_family(family: ClassFamily) -> ClassFamily:
    gen = family.generator
    kind = Kind.PI if family.kind is Kind.SIGMA else Kind.SIGMA
    name = family.name[4:] if family.name.startswith("not ") else f"not {family.name}"
    inner = getattr(gen, "_negated", None)
    if inner is not None:
        return ClassFamily(kind, inner, family.domain, name)

    def negated(n, x):
        return not gen(n, x)

    negated._negated = gen
    return ClassFamily(kind, negated, family.domain, name)


def feasible(n: int, h: Horizon = DEFAULT_HORIZON) -> Verdict:
    """The vague predicate "n is small" seen from a horizon."""
    if n < h.soft:
        return Verdict.IN
    if n >= h.hard:
        return Verdict.OUT
    return Verdict.BEYOND_HORIZON


def feasible_scan(h: Horizon, stop: int | None = None) -> list[Verdict]:
    """Verdicts for ``n = 0 .. stop`` inclusive (``stop`` defaults to the hard bound)."""
    stop = h.hard if stop is None else stop
    return [feasible(n, h) for n in range(stop + 1)]


class SemisetReport(NamedTuple):
    is_semiset: bool
    witness: Any


Membership = Union[ClassFamily, Callable[[Any, Horizon], Verdict]]


def is_witnessed_semiset(family: Membership, bounding_set: Iterable, h: Horizon) -> SemisetReport:
    """Does the class have an undecided member inside ``bounding_set``?

    ``family`` is a :class:`ClassFamily` or any ``(x, horizon) -> Verdict``
    membership test, e.g. :func:`feasible`.
    """
    elements = list(bounding_set)
    if not elements:
        raise ValueError("bounding set must be non-empty")
    if isinstance(family, ClassFamily):
        def test(x):
            return member(family, x, h)
    else:
        def test(x):
            return family(x, h)
    for x in elements:
        if test(x) is Verdict.BEYOND_HORIZON:
            return SemisetReport(True, x)
    return SemisetReport(False, None)


# -- named families ---------------------------------------------------------


def below_index_family() -> ClassFamily:
    """Sigma family ``A_n = {x : x < n}``; its union is the finite numbers."""
    return sigma_family(lambda n, x: x < n, name="feasible")


def infinitesimal_band_family() -> ClassFamily:
    """Pi family ``B_n = {q : |q| < 1/n}`` (``B_0`` is everything)."""
    return pi_family(lambda n, q: n == 0 or abs(q) * n < 1, name="infinitesimal-band")


def threshold_family(c: Fraction) -> ClassFamily:
    """Sigma family ``A_n = {x : x < c*n}``."""
    c = Fraction(c)
    if c <= 0:
        raise ValueError("threshold constant must be positive")
    return sigma_family(lambda n, x: x < c * n, name=f"threshold:{c}")


def family_by_name(name: str) -> ClassFamily:
    if name == "feasible":
        return below_index_family()
    if name == "infinitesimal-band":
        return infinitesimal_band_family()
    if name.startswith("threshold:"):
        return threshold_family(parse_rational(name.split(":", 1)[1]))
    raise KeyError(f"unknown family {name!r}")


FAMILY_NAMES = ("feasible", "infinitesimal-band", "threshold:<c>")


def read_config(lines: Iterable[str]) -> dict[str, str]:
    """Parse ``key=value`` lines; blank lines and ``#`` comments are skipped."""
    out = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected key=value, got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        out[key] = value
    return out


def horizon_from_config(config: dict[str, str]) -> Horizon:
    if "horizon.hard" not in config and "horizon.soft" not in config:
        return DEFAULT_HORIZON
    hard = int(config.get("horizon.hard", DEFAULT_HORIZON.hard))
    if "horizon.soft" not in config:
        return Horizon.with_hard(hard)
    return Horizon(hard=hard, soft=int(config["horizon.soft"]))
