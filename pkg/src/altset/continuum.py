"""Indiscernibility on rational coordinates.

Three relations are provided, all reflexive and symmetric:

* :class:`WitnessedUniform` - Chebyshev distance strictly below ``theta``;
  the relation a fixed observer sees, not transitive in general.
* :class:`WitnessedRelative` - Chebyshev distance divided by
  ``max(|x|, |y|, 1)`` strictly below ``epsilon``; monads grow with
  distance from the origin.
* :class:`IdealUniform` - coordinates divided by a scale ``d`` are
  infinitely near in the omega field; an equivalence relation.

Monads, figures and connectedness are computed over explicit finite lists
of points.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

from .errors import DimensionMismatch, EmptyInput, ParseError
from .omega import OmegaRational, infinitely_near
from .parsing import parse_rational

Coord = Union[Fraction, OmegaRational]


class Point(tuple):
    """Immutable coordinate tuple of exact numbers."""

    def __new__(cls, *coords):
        if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
            coords = tuple(coords[0])
        if not coords:
            raise ValueError("a point needs at least one coordinate")
        return super().__new__(cls, (c if isinstance(c, OmegaRational) else Fraction(c) for c in coords))

    @property
    def dim(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Point({', '.join(str(c) for c in self)})"

    def __str__(self) -> str:
        return ",".join(str(c) for c in self)


def chebyshev(x: Point, y: Point):
    _check_dims(x, y)
    return max(abs(a - b) for a, b in zip(x, y))


def norm(x: Point):
    return max(abs(c) for c in x)


def _check_dims(x: Point, y: Point) -> None:
    if len(x) != len(y):
        raise DimensionMismatch(f"{len(x)}-dimensional point vs {len(y)}-dimensional point")


@dataclass(frozen=True)
class WitnessedUniform:
    theta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "theta", Fraction(self.theta))
        if self.theta <= 0:
            raise ValueError("theta must be positive")

    def related(self, x: Point, y: Point) -> bool:
        return chebyshev(x, y) < self.theta

    def __str__(self) -> str:
        return f"uniform(theta={self.theta})"


@dataclass(frozen=True)
class WitnessedRelative:
    epsilon: Fraction

    def __post_init__(self):
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")

    def related(self, x: Point, y: Point) -> bool:
        scale = max(norm(x), norm(y), Fraction(1))
        return chebyshev(x, y) < self.epsilon * scale

    def __str__(self) -> str:
        return f"relative(epsilon={self.epsilon})"


@dataclass(frozen=True)
class IdealUniform:
    scale: Coord = Fraction(1)

    def __post_init__(self):
        if self.scale <= 0:
            raise ValueError("scale must be positive")

    def related(self, x: Point, y: Point) -> bool:
        _check_dims(x, y)
        d = OmegaRational.coerce(self.scale)
        return all(infinitely_near(OmegaRational.coerce(a) / d, OmegaRational.coerce(b) / d) for a, b in zip(x, y))

    def __str__(self) -> str:
        return f"ideal(scale={self.scale})"


IndiscernibilitySpec = Union[WitnessedUniform, WitnessedRelative, IdealUniform]


def witnessed_at_horizon(c: Fraction, hard: int) -> WitnessedUniform:
    """Collapse the family ``R_n = {|x - y| < c/n}`` to its member at index ``hard``."""
    return WitnessedUniform(Fraction(c) / hard)


def indiscernible(spec: IndiscernibilitySpec, x: Point, y: Point) -> bool:
    _check_dims(x, y)
    return spec.related(x, y)


def _check_all(points: Sequence[Point], dim: int | None = None) -> None:
    for p in points:
        if dim is None:
            dim = len(p)
        elif len(p) != dim:
            raise DimensionMismatch(f"mixed dimensions {dim} and {len(p)}")


def monad(spec: IndiscernibilitySpec, x: Point, points: Sequence[Point]) -> list[Point]:
    _check_all(points, len(x))
    return [y for y in points if spec.related(x, y)]


def figure(spec: IndiscernibilitySpec, X: Sequence[Point], ambient: Sequence[Point]) -> list[Point]:
    """Members of ``ambient`` indiscernible from some member of ``X``."""
    _check_all([*X, *ambient])
    return [y for y in ambient if any(spec.related(x, y) for x in X)]


def indiscernibility_graph(spec: IndiscernibilitySpec, points: Sequence[Point]) -> list[list[int]]:
    """Adjacency lists over indices, self-loops omitted."""
    _check_all(points)
    adj: list[list[int]] = [[] for _ in points]
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if spec.related(points[i], points[j]):
                adj[i].append(j)
                adj[j].append(i)
    return adj


class DisjointSet:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int) -> bool:
        i, j = self.find(i), self.find(j)
        if i == j:
            return False
        if self.size[i] < self.size[j]:
            i, j = j, i
        self.parent[j] = i
        self.size[i] += self.size[j]
        return True


class Connectivity(NamedTuple):
    connected: bool
    part: list[Point] | None  # one side of a separating partition
    rest: list[Point] | None

    def __bool__(self) -> bool:
        return self.connected


def is_connected(spec: IndiscernibilitySpec, X: Sequence[Point]) -> Connectivity:
    """Connectivity of the indiscernibility graph on ``X``.

    When disconnected, ``part`` is the component of ``X[0]`` and ``rest``
    the remaining points; no pair across the split is indiscernible.
    """
    if not X:
        raise EmptyInput("connectedness needs at least one point")
    _check_all(X)
    ds = DisjointSet(len(X))
    components = len(X)
    for i in range(len(X)):
        for j in range(i + 1, len(X)):
            if ds.find(i) != ds.find(j) and spec.related(X[i], X[j]):
                ds.union(i, j)
                components -= 1
    if components == 1:
        return Connectivity(True, None, None)
    root = ds.find(0)
    part = [p for i, p in enumerate(X) if ds.find(i) == root]
    rest = [p for i, p in enumerate(X) if ds.find(i) != root]
    return Connectivity(False, part, rest)


def transitivity_defect(spec: IndiscernibilitySpec, X: Sequence[Point]) -> tuple[Point, Point, Point] | None:
    """Find ``x ~ y``, ``y ~ z`` with ``x`` and ``z`` discernible, if any."""
    _check_all(X)
    n = len(X)
    rel = [[i == j or spec.related(X[i], X[j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if j == i or not rel[i][j]:
                continue
            for k in range(n):
                if rel[j][k] and not rel[i][k]:
                    return X[i], X[j], X[k]
    return None


def parse_point(line: str) -> Point:
    return Point(*(parse_rational(field) for field in line.split(",")))


def read_points(lines: Iterable[str]) -> list[Point]:
    """One point per line, comma-separated; blank and ``#`` lines skipped."""
    points = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            points.append(parse_point(line))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    _check_all(points)
    return points


def grid(start, step, count: int) -> Iterator[Point]:
    """1-d points ``start, start + step, ...``."""
    start, step = Fraction(start), Fraction(step)
    for i in range(count):
        yield Point(start + i * step)
