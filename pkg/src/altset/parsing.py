"""Text syntax for exact numbers.

Rationals are written ``p/q`` or as decimals (``0.6``, ``1e-6``), always
converted exactly.  Field elements are arithmetic expressions over
rationals and one variable, ``w`` by default::

    3*w^2 - w + 1/2
    (2*w + 1)/(w)
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .omega import OmegaRational
from .poly import Polynomial

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))"
)


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q``, an integer or a decimal literal into an exact Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not an exact rational: {text!r}") from exc


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} at position {pos}")
        kind = m.lastgroup
        tokens.append((kind, m.group(kind)))
        pos = m.end()
    return tokens


class _Parser:
    # expr   := term (('+'|'-') term)*
    # term   := unary (('*'|'/') unary)*
    # unary  := ('-'|'+') unary | power
    # power  := atom ('^' ['-'] integer)?
    # atom   := number | var | '(' expr ')'

    def __init__(self, text: str, var: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.var = var
        self.text = text

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, value: str):
        kind, val = self.take()
        if val != value:
            raise ParseError(f"expected {value!r} in {self.text!r}, got {val!r}")

    def parse(self) -> OmegaRational:
        if not self.tokens:
            raise ParseError("empty expression")
        result = self.expr()
        if self.pos != len(self.tokens):
            raise ParseError(f"unexpected {self.peek()[1]!r} in {self.text!r}")
        return result

    def expr(self) -> OmegaRational:
        value = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> OmegaRational:
        value = self.unary()
        while self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            rhs = self.unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def unary(self) -> OmegaRational:
        if self.peek()[1] == "-":
            self.take()
            return -self.unary()
        if self.peek()[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> OmegaRational:
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            negative = False
            if self.peek()[1] == "-":
                self.take()
                negative = True
            kind, val = self.take()
            if kind != "num" or not val.isdigit():
                raise ParseError(f"exponent must be an integer literal in {self.text!r}")
            k = int(val)
            return base ** (-k if negative else k)
        return base

    def atom(self) -> OmegaRational:
        kind, val = self.take()
        if kind == "num":
            return OmegaRational.coerce(Fraction(val))
        if kind == "name":
            if val != self.var:
                raise ParseError(f"unknown name {val!r} (the variable is {self.var!r})")
            return OmegaRational._raw(Polynomial((0, 1)), Polynomial((1,)))
        if val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {val!r} in {self.text!r}")


def parse_element(text: str, var: str = "w") -> OmegaRational:
    """Parse an arithmetic expression in ``var`` into a field element."""
    return _Parser(text, var).parse()


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))
