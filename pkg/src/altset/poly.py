"""Dense univariate polynomials with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class Polynomial:
    """``coeffs[i]`` is the coefficient of ``w**i``; no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        self.coeffs = _trim([Fraction(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> Polynomial:
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def constant(cls, c: Number) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Number = 1) -> Polynomial:
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([Fraction(other)])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other: Polynomial) -> Polynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial._raw(_trim(out))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial._raw(_trim(out))

    def scale(self, c: Number) -> Polynomial:
        if not c:
            return ZERO
        return Polynomial._raw(tuple(x * c for x in self.coeffs))

    def divmod(self, divisor: Polynomial) -> tuple[Polynomial, Polynomial]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead_inv = 1 / divisor.lead
        if len(rem) - 1 < dd:
            return ZERO, self
        quot = [Fraction(0)] * (len(rem) - dd)
        dc = divisor.coeffs
        for shift in range(len(rem) - 1 - dd, -1, -1):
            c = rem[shift + dd] * lead_inv
            quot[shift] = c
            if c:
                for i, y in enumerate(dc):
                    rem[shift + i] -= c * y
        return Polynomial._raw(_trim(quot)), Polynomial._raw(_trim(rem[:dd]))

    def monic(self) -> Polynomial:
        if self.is_zero() or self.lead == 1:
            return self
        return self.scale(1 / self.lead)

    def __call__(self, x):
        """Horner evaluation; ``x`` may be any ring element supporting + and *."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: Polynomial) -> Polynomial:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * inner + Polynomial.constant(c)
        return acc

    def has_integer_coeffs(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_str(self, var: str = "w") -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for deg in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[deg]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if deg == 0:
                body = str(mag)
            else:
                power = var if deg == 1 else f"{var}^{deg}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_str()!r})"


ZERO = Polynomial()
ONE = Polynomial((1,))
W = Polynomial((0, 1))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor (zero only if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def nonnegative_integer_roots(p: Polynomial) -> list[int]:
    """Non-negative integer roots of ``p`` (which must be non-zero)."""
    if p.is_zero():
        raise ValueError("the zero polynomial vanishes everywhere")
    coeffs: Sequence[Fraction] = p.coeffs
    roots = []
    if coeffs[0] == 0:
        roots.append(0)
        k = next(i for i, c in enumerate(coeffs) if c)
        coeffs = coeffs[k:]
    if len(coeffs) == 1:
        return roots
    # clear denominators; an integer root divides the constant term and is
    # below the Cauchy bound
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    a0, an = abs(ints[0]), abs(ints[-1])
    bound = 1 + max(abs(c) for c in ints[:-1]) // an
    reduced = Polynomial(ints)
    for d in range(1, min(a0, bound) + 1):
        if a0 % d == 0 and reduced(d) == 0:
            roots.append(d)
    return roots

