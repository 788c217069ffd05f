"""Exact dimension values with three-valued zero testing.

A cohomology dimension computed by this package is either known exactly
or confined to a closed integer interval.  Both are represented by a
single immutable type whose endpoints are plain Python integers, so all
arithmetic is exact at any size.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class DimValue:
    """A non-negative integer dimension, exact or bounded by an interval.

    ``lo == hi`` means the value is known exactly.  The constructors
    normalize degenerate intervals, so an interval that collapses to a
    point is indistinguishable from the exact value.
    """

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not (0 <= self.lo <= self.hi):
            raise ValueError(f"invalid dimension interval [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, value: int) -> DimValue:
        return cls(value, value)

    @classmethod
    def between(cls, lo: int, hi: int) -> DimValue:
        """Interval constructor; a width-zero interval is an exact value."""
        return cls(lo, hi)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def is_zero(self) -> bool:
        """Definitely zero."""
        return self.hi == 0

    @property
    def is_nonzero(self) -> bool:
        """Definitely at least one."""
        return self.lo >= 1

    @property
    def is_indeterminate(self) -> bool:
        """The interval contains zero and a positive value."""
        return self.lo == 0 < self.hi

    def __add__(self, other: DimValue) -> DimValue:
        if not isinstance(other, DimValue):
            return NotImplemented
        return DimValue(self.lo + other.lo, self.hi + other.hi)

    def __mul__(self, other: DimValue) -> DimValue:
        if not isinstance(other, DimValue):
            return NotImplemented
        # endpoints are non-negative, so endpoint products bound the product
        return DimValue(self.lo * other.lo, self.hi * other.hi)

    def shift(self, delta: int) -> DimValue:
        """Translate both endpoints by ``delta``, clamping at zero."""
        return DimValue(max(0, self.lo + delta), max(0, self.hi + delta))

    def contains(self, other: DimValue) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def __str__(self) -> str:
        if self.is_exact:
            return str(self.lo)
        return f"[{self.lo},{self.hi}]"
