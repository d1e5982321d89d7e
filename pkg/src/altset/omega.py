"""Rational functions in one infinite element ``w``.

The field Q(w) ordered by eventual dominance: ``x > 0`` iff ``x(t) > 0`` for
every sufficiently large real ``t``.  With the denominator made monic that
is just the sign of the numerator's leading coefficient, so the order is
decidable and ``w`` exceeds every standard number.  This is a computable
stand-in for the nonstandard rationals: standard rationals are the
constants, bounded elements have numerator degree at most the denominator
degree, and infinitesimals have strictly smaller numerator degree.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, IllFormedSequence, InfiniteArgument
from .poly import ONE, ZERO, Polynomial, W, nonnegative_integer_roots, poly_gcd

Scalar = Union[int, Fraction]


class Order(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class OmegaRational:
    """Canonical ``numerator/denominator`` with a monic, coprime denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial | Scalar = ZERO, den: Polynomial | Scalar = ONE):
        if not isinstance(num, Polynomial):
            num = Polynomial.constant(num)
        if not isinstance(den, Polynomial):
            den = Polynomial.constant(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        if not den.is_constant():
            g = poly_gcd(num, den)
            if not g.is_constant():
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
        lead = den.lead
        if lead != 1:
            num = num.scale(1 / lead)
            den = den.scale(1 / lead)
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num: Polynomial, den: Polynomial) -> OmegaRational:
        x = object.__new__(cls)
        x.num, x.den = num, den
        return x

    @classmethod
    def coerce(cls, value: OmegaRational | Scalar) -> OmegaRational:
        if isinstance(value, OmegaRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls._raw(Polynomial.constant(value), ONE)
        raise TypeError(f"cannot treat {value!r} as an element of the field")

    # -- structure -----------------------------------------------------

    def is_standard(self) -> bool:
        """True for the embedded standard rationals (constants)."""
        return self.num.is_constant() and self.den.is_constant()

    def to_fraction(self) -> Fraction:
        if not self.is_standard():
            raise ValueError(f"{self} is not a standard rational")
        return self.num.coeffs[0] if self.num.coeffs else Fraction(0)

    def sign(self) -> int:
        lead = self.num.lead
        return (lead > 0) - (lead < 0)

    def evaluate(self, t: Scalar) -> Fraction:
        """Substitute a standard number for ``w``."""
        d = self.den(Fraction(t))
        if d == 0:
            raise DivisionByZero(f"denominator vanishes at {t}")
        return Fraction(self.num(Fraction(t))) / d

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        try:
            o = OmegaRational.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            return OmegaRational(self.num + o.num, self.den)
        return OmegaRational(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> OmegaRational:
        return OmegaRational._raw(-self.num, self.den)

    def __pos__(self) -> OmegaRational:
        return self

    def __sub__(self, other):
        try:
            o = OmegaRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = OmegaRational.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den.is_constant() and o.den.is_constant():
            return OmegaRational(self.num * o.num, self.den * o.den)
        # cross-cancel first to keep the gcd inputs small
        g1 = poly_gcd(self.num, o.den) if not o.den.is_constant() else ONE
        g2 = poly_gcd(o.num, self.den) if not self.den.is_constant() else ONE
        n1, d2 = _exact_div(self.num, g1), _exact_div(o.den, g1)
        n2, d1 = _exact_div(o.num, g2), _exact_div(self.den, g2)
        num = n1 * n2
        if num.is_zero():
            return ZERO_ELEMENT
        # both denominators were monic and coprime to the other numerator
        return OmegaRational._raw(num, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> OmegaRational:
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero")
        return OmegaRational(self.den, self.num)

    def __truediv__(self, other):
        try:
            o = OmegaRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return OmegaRational.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> OmegaRational:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** -k
        result = OmegaRational._raw(ONE, ONE)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __abs__(self) -> OmegaRational:
        return -self if self.sign() < 0 else self

    # -- order and equality ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, OmegaRational):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_standard() and self.to_fraction() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_standard():
            return hash(self.to_fraction())
        return hash((self.num, self.den))

    def _cmp(self, other) -> int:
        return (self - OmegaRational.coerce(other)).sign()

    def __lt__(self, other):
        if not isinstance(other, (OmegaRational, int, Fraction)):
            return NotImplemented
        return self._cmp(other) < 0

    def __le__(self, other):
        if not isinstance(other, (OmegaRational, int, Fraction)):
            return NotImplemented
        return self._cmp(other) <= 0

    def __gt__(self, other):
        if not isinstance(other, (OmegaRational, int, Fraction)):
            return NotImplemented
        return self._cmp(other) > 0

    def __ge__(self, other):
        if not isinstance(other, (OmegaRational, int, Fraction)):
            return NotImplemented
        return self._cmp(other) >= 0

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    # -- text -----------------------------------------------------------

    def to_str(self, var: str = "w") -> str:
        if self.den == ONE:
            return self.num.to_str(var)
        return f"({self.num.to_str(var)})/({self.den.to_str(var)})"

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"OmegaRational({self.to_str()!r})"


def _exact_div(p: Polynomial, g: Polynomial) -> Polynomial:
    if g == ONE:
        return p
    return p.divmod(g)[0]


OMEGA = OmegaRational._raw(W, ONE)
ZERO_ELEMENT = OmegaRational._raw(ZERO, ONE)


def omega() -> OmegaRational:
    return OMEGA


def field_arith(op: str, x, y=None) -> OmegaRational:
    """Dispatch ``add``, ``sub``, ``mul``, ``div``, ``neg`` or ``inv`` by name."""
    x = OmegaRational.coerce(x)
    if op == "neg":
        return -x
    if op == "inv":
        return x.inverse()
    if y is None:
        raise TypeError(f"{op} needs two operands")
    y = OmegaRational.coerce(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def compare(x, y) -> Order:
    return Order((OmegaRational.coerce(x) - OmegaRational.coerce(y)).sign())


@dataclass(frozen=True)
class Classification:
    is_infinitesimal: bool
    is_bounded: bool
    is_infinite: bool

    def labels(self) -> str:
        if self.is_infinite:
            return "infinite"
        if self.is_infinitesimal:
            return "infinitesimal bounded"
        return "bounded"


def classify(x) -> Classification:
    x = OmegaRational.coerce(x)
    dn, dd = x.num.degree, x.den.degree
    infinite = dn > dd
    return Classification(
        is_infinitesimal=dn < dd,  # zero has degree -1
        is_bounded=not infinite,
        is_infinite=infinite,
    )


def is_infinitesimal(x) -> bool:
    return classify(x).is_infinitesimal


def is_bounded(x) -> bool:
    return classify(x).is_bounded


def is_infinite(x) -> bool:
    return classify(x).is_infinite


def infinitely_near(x, y) -> bool:
    return classify(OmegaRational.coerce(x) - OmegaRational.coerce(y)).is_infinitesimal


def standard_part(x) -> Fraction:
    """The standard rational infinitely near ``x``; it labels the monad of ``x``."""
    x = OmegaRational.coerce(x)
    dn, dd = x.num.degree, x.den.degree
    if dn > dd:
        raise InfiniteArgument(f"{x} is infinite and has no standard part")
    if dn < dd:
        return Fraction(0)
    return x.num.lead / x.den.lead


def is_finite_natural(x) -> bool:
    x = OmegaRational.coerce(x)
    return x.is_standard() and x.to_fraction().denominator == 1 and x >= 0


def is_natural(x) -> bool:
    """Non-negative with an integer-coefficient polynomial form.

    Covers the standard naturals and infinite naturals such as ``w`` or
    ``2*w^2 + 3``.
    """
    x = OmegaRational.coerce(x)
    return x.den == ONE and x.num.has_integer_coeffs() and x.sign() >= 0


class DefinableSequence:
    """A sequence ``n -> rule(n + shift)`` given by a rational function of the index.

    The rule is stored as an :class:`OmegaRational` whose variable is read
    as the index; a non-zero ``shift`` is folded into the stored rule.
    Construction fails if the denominator vanishes at any non-negative
    integer, so ``(n^2 + 1)/n^2`` needs ``shift=1``.
    """

    __slots__ = ("rule",)

    def __init__(self, rule: OmegaRational | Scalar, shift: int = 0):
        rule = OmegaRational.coerce(rule)
        if shift:
            inner = Polynomial((shift, 1))
            rule = OmegaRational(rule.num.compose(inner), rule.den.compose(inner))
        bad = nonnegative_integer_roots(rule.den)
        if bad:
            raise IllFormedSequence(f"rule {rule.to_str('n')} is undefined at n={bad[0]}")
        self.rule = rule

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise IndexError("sequences are indexed from 0")
        return self.rule.evaluate(n)

    def __repr__(self) -> str:
        return f"DefinableSequence(n -> {self.rule.to_str('n')})"


def prolong(seq: DefinableSequence) -> OmegaRational:
    """Value of the sequence at the infinite index ``w``."""
    return seq.rule
