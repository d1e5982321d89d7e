"""Hereditarily finite sets.

Every set is built from the empty set by adjoining single elements.  A set
is stored with its elements sorted by their serialized form, so two sets
are equal exactly when their serializations coincide.  Serializations are
interned, which makes equality an identity check in the common case.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .errors import CapExceeded, EmptyInput

VON_NEUMANN_CAP = 16
RANK_CAP = 5


class HFSet:
    __slots__ = ("_elements", "_key", "_rank")

    def __init__(self, elements: Iterable[HFSet] = ()):
        unique = {e._key: e for e in elements}
        ordered = tuple(unique[k] for k in sorted(unique))
        self._elements = ordered
        self._key = sys.intern("{" + ",".join(e._key for e in ordered) + "}")
        self._rank = 1 + max(e._rank for e in ordered) if ordered else 0

    @property
    def elements(self) -> tuple[HFSet, ...]:
        return self._elements

    @property
    def key(self) -> str:
        """Canonical serialization, e.g. ``{{},{{}}}``."""
        return self._key

    @property
    def rank(self) -> int:
        return self._rank

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self) -> Iterator[HFSet]:
        return iter(self._elements)

    def __contains__(self, item: object) -> bool:
        if not isinstance(item, HFSet):
            return False
        return any(e._key is item._key or e._key == item._key for e in self._elements)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HFSet):
            return NotImplemented
        return self._key is other._key or self._key == other._key

    def __lt__(self, other: HFSet) -> bool:
        return self._key < other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __str__(self) -> str:
        return self._key

    def __repr__(self) -> str:
        return f"HFSet({self._key})"

    def intersection(self, other: HFSet) -> HFSet:
        return HFSet(e for e in self._elements if e in other)

    def is_disjoint(self, other: HFSet) -> bool:
        return not any(e in other for e in self._elements)


_EMPTY = HFSet()


def empty() -> HFSet:
    return _EMPTY


def adjoin(x: HFSet, y: HFSet) -> HFSet:
    """Return ``x ∪ {y}``; returns ``x`` itself when ``y`` is already a member."""
    if y in x:
        return x
    return HFSet((*x.elements, y))


def equals(x: HFSet, y: HFSet) -> bool:
    return x == y


def rank(x: HFSet) -> int:
    return x.rank


def regularity_witness(x: HFSet) -> HFSet:
    """Return an element of ``x`` that shares no element with ``x``.

    A minimum-rank element always qualifies: anything it contains has a
    strictly smaller rank, so cannot be in ``x``.
    """
    if not x.elements:
        raise EmptyInput("the empty set has no elements")
    return min(x.elements, key=lambda e: (e.rank, e.key))


def von_neumann(n: int) -> HFSet:
    if n < 0:
        raise ValueError("von Neumann numbers are non-negative")
    if n > VON_NEUMANN_CAP:
        raise CapExceeded(f"von_neumann({n}) exceeds the cap of {VON_NEUMANN_CAP}")
    current = _EMPTY
    for _ in range(n):
        current = adjoin(current, current)
    return current


def successor(x: HFSet) -> HFSet:
    return adjoin(x, x)


def universe_up_to_rank(k: int) -> list[HFSet]:
    """Every set of rank ``< k``, once each, in canonical order.

    Sizes are 0, 1, 2, 4, 16, 65536 for k = 0..5.
    """
    if k < 0:
        raise ValueError("rank bound must be non-negative")
    if k > RANK_CAP:
        raise CapExceeded(f"rank bound {k} exceeds the cap of {RANK_CAP}")
    stage: list[HFSet] = []
    for _ in range(k):
        stage = _powerset(stage)
    return sorted(stage)


def _powerset(members: list[HFSet]) -> list[HFSet]:
    out = []
    for mask in range(1 << len(members)):
        out.append(HFSet(m for i, m in enumerate(members) if mask >> i & 1))
    return out


@dataclass(frozen=True)
class InductionReport:
    base: bool
    step: bool
    conclusion: bool
    step_counterexample: tuple[HFSet, HFSet] | None = None
    conclusion_counterexample: HFSet | None = None

    @property
    def schema_holds(self) -> bool:
        """The instance of the induction schema is valid on the checked universe."""
        return not (self.base and self.step) or self.conclusion


def check_induction(phi: Callable[[HFSet], bool], k: int = 4) -> InductionReport:
    """Check one instance of the induction schema on the sets of rank < k.

    The step premise is checked for every pair ``x, y`` from the universe;
    ``adjoin(x, y)`` may leave the universe, and ``phi`` is evaluated there
    too.
    """
    universe = universe_up_to_rank(k)
    base = bool(phi(_EMPTY))
    step_cex = None
    for x in universe:
        if not phi(x):
            continue
        for y in universe:
            if not phi(adjoin(x, y)):
                step_cex = (x, y)
                break
        if step_cex:
            break
    concl_cex = next((x for x in universe if not phi(x)), None)
    return InductionReport(
        base=base,
        step=step_cex is None,
        conclusion=concl_cex is None,
        step_counterexample=step_cex,
        conclusion_counterexample=concl_cex,
    )


def parse_hf(text: str) -> HFSet:
    """Parse the brace serialization back into a set."""
    pos = 0
    text = text.replace(" ", "")

    def parse() -> HFSet:
        nonlocal pos
        if pos >= len(text) or text[pos] != "{":
            raise ValueError(f"expected '{{' at position {pos}")
        pos += 1
        items = []
        if pos < len(text) and text[pos] == "}":
            pos += 1
            return HFSet()
        while True:
            items.append(parse())
            if pos < len(text) and text[pos] == ",":
                pos += 1
                continue
            if pos < len(text) and text[pos] == "}":
                pos += 1
                return HFSet(items)
            raise ValueError(f"expected ',' or '}}' at position {pos}")

    result = parse()
    if pos != len(text):
        raise ValueError(f"trailing input at position {pos}")
    return result
