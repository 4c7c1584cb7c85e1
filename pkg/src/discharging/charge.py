"""
Exact charges with denominator 3.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Union

from ..errors import InvalidParameter


@total_ordering
@dataclass(frozen=True)
class Charge:
    """numerator / 3."""
    thirds: int

    @classmethod
    def of(cls, value: int) -> "Charge":
        return cls(3 * value)

    @classmethod
    def from_fraction(cls, value: Union[Fraction, int]) -> "Charge":
        value = Fraction(value)
        scaled = value * 3
        if scaled.denominator != 1:
            raise InvalidParameter(f"{value} is not a multiple of 1/3")
        return cls(int(scaled))

    def to_fraction(self) -> Fraction:
        return Fraction(self.thirds, 3)

    def __add__(self, other: "Charge") -> "Charge":
        return Charge(self.thirds + other.thirds)

    def __sub__(self, other: "Charge") -> "Charge":
        return Charge(self.thirds - other.thirds)

    def __neg__(self) -> "Charge":
        return Charge(-self.thirds)

    def __mul__(self, k: int) -> "Charge":
        return Charge(self.thirds * k)

    __rmul__ = __mul__

    def __lt__(self, other: "Charge") -> bool:
        return self.thirds < other.thirds

    def __str__(self) -> str:
        if self.thirds % 3 == 0:
            return str(self.thirds // 3)
        return f"{self.thirds}/3"


ZERO = Charge(0)


def total(charges: Iterable[Charge]) -> Charge:
    return Charge(sum(c.thirds for c in charges))
