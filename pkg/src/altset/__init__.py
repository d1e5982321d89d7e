"""Exact models of hereditarily finite sets, nonstandard rationals, horizon
semantics and indiscernibility continua."""

from .errors import (
    AltSetError,
    CapExceeded,
    DimensionMismatch,
    DivisionByZero,
    EmptyInput,
    IllFormedSequence,
    InfiniteArgument,
    ParseError,
    TooFewSamples,
)
from .hf import HFSet, adjoin, empty, equals, regularity_witness, universe_up_to_rank, von_neumann
from .omega import (
    Classification,
    DefinableSequence,
    OmegaRational,
    Order,
    classify,
    compare,
    field_arith,
    infinitely_near,
    omega,
    prolong,
    standard_part,
)
from .parsing import parse_element, parse_rational

__version__ = "0.1.0"
