# -*- coding: utf-8 -*-
"""
Exact scalars and exponent vectors.

Scalars are ``fractions.Fraction`` values: always reduced, denominator > 0,
zero stored as 0/1, so equality and hashing are structural.
"""

import re
import sys
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Tuple, Union

from errors import DimensionMismatch, InvalidDimension, MalformedRational, NegativeCoordinate

RationalLike = Union[Fraction, int, str]

# "num/den" or "num"; decimals and exponents are rejected on purpose
_RATIONAL_RE = re.compile(r"^\s*([+-]?[0-9]+)(?:\s*/\s*([0-9]+))?\s*$", re.ASCII)

# exact rationals have no size bound; lift the int <-> str digit cap (3.11+)
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)


# ---------------------------------------------------------------------
# SCALARS
# ---------------------------------------------------------------------
def parse_rational(text: str, locus: Optional[str] = None) -> Fraction:
    """Parse ``"num/den"`` or ``"num"`` into a reduced Fraction."""
    if not isinstance(text, str):
        raise MalformedRational(f"expected a rational string, got {type(text).__name__}", locus=locus)
    m = _RATIONAL_RE.match(text)
    if not m:
        raise MalformedRational(f"not a rational: {text!r}", locus=locus)
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise MalformedRational(f"zero denominator: {text!r}", locus=locus)
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise MalformedRational(f"cannot convert {type(x).__name__} to an exact rational")


# ---------------------------------------------------------------------
# EXPONENT VECTORS
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class ExponentVector:
    """A vector of ``d >= 1`` nonnegative rationals."""

    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(as_rational(c) for c in self.coords)
        if not coords:
            raise InvalidDimension("exponent vectors need dimension d >= 1")
        for i, c in enumerate(coords):
            if c < 0:
                raise NegativeCoordinate(f"coordinate {i + 1} is negative: {format_rational(c)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, *values: RationalLike) -> "ExponentVector":
        return cls(tuple(values))

    @classmethod
    def zero(cls, d: int) -> "ExponentVector":
        return cls((Fraction(0),) * d)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def nonzero_count(self) -> int:
        return sum(1 for c in self.coords if c != 0)

    def permuted(self, order: Sequence[int]) -> "ExponentVector":
        """Reorder coordinates; ``order[k]`` is the 0-based source index of new coordinate k."""
        return ExponentVector(tuple(self.coords[k] for k in order))

    def to_strings(self) -> list:
        return [format_rational(c) for c in self.coords]


def _check_same_length(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise DimensionMismatch(f"length {len(a)} vs {len(b)}")


def componentwise_leq(a: ExponentVector, b: ExponentVector) -> bool:
    """``a <= b`` iff ``b - a`` has no negative coordinate."""
    _check_same_length(a, b)
    return all(x <= y for x, y in zip(a, b))


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def lex_compare(a: Sequence[Fraction], b: Sequence[Fraction]) -> Ordering:
    _check_same_length(a, b)
    for x, y in zip(a, b):
        if x < y:
            return Ordering.LESS
        if x > y:
            return Ordering.GREATER
    return Ordering.EQUAL