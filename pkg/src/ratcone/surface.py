"""Divisor classes and cohomology on the product of a curve with a line.

On X = C x P1 every class considered here is a*C0 + b*f, where C0 is a
section pulled back from the line factor and f a fiber pulled back from
the curve factor.  The associated line bundle is the external tensor
product O(a) on P1 with O(bQ) on C, so its cohomology splits through
the Kunneth formula into products of the factor cohomologies.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import CurveModel, h0_curve, h0_p1, h1_curve, h1_p1
from .dimension import DimValue


@dataclass(frozen=True, slots=True)
class SurfaceClass:
    """The class a*C0 + b*f in the Neron-Severi lattice of C x P1.

    ``a`` is the degree along the line factor and ``b`` the degree along
    the curve factor.
    """

    a: int
    b: int

    def __add__(self, other: SurfaceClass) -> SurfaceClass:
        if not isinstance(other, SurfaceClass):
            return NotImplemented
        return SurfaceClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: SurfaceClass) -> SurfaceClass:
        if not isinstance(other, SurfaceClass):
            return NotImplemented
        return SurfaceClass(self.a - other.a, self.b - other.b)

    def __mul__(self, k: int) -> SurfaceClass:
        if not isinstance(k, int):
            return NotImplemented
        return SurfaceClass(k * self.a, k * self.b)

    __rmul__ = __mul__

    def __neg__(self) -> SurfaceClass:
        return SurfaceClass(-self.a, -self.b)

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


def intersect(c1: SurfaceClass, c2: SurfaceClass) -> int:
    """Intersection number; C0 and f square to zero and meet once."""
    return c1.a * c2.b + c2.a * c1.b


def is_ample(c: SurfaceClass) -> bool:
    """Ample iff positive degree on both rulings."""
    return c.a >= 1 and c.b >= 1


def is_effective_class(c: SurfaceClass) -> bool:
    """Effective iff both coefficients are non-negative."""
    return c.a >= 0 and c.b >= 0


def kunneth_h(model: CurveModel, c: SurfaceClass, i: int) -> DimValue:
    """h^i(X, O(a*C0 + b*f)) via the Kunneth decomposition.

    h0 = h0(P1, a) h0(C, b)
    h1 = h0(P1, a) h1(C, b) + h1(P1, a) h0(C, b)
    h2 = h1(P1, a) h1(C, b)

    Interval endpoints add and multiply exactly; a zero factor collapses
    the product to an exact zero.
    """
    if i == 0:
        return h0_p1(c.a) * h0_curve(model, c.b)
    if i == 1:
        return h0_p1(c.a) * h1_curve(model, c.b) + h1_p1(c.a) * h0_curve(model, c.b)
    if i == 2:
        return h1_p1(c.a) * h1_curve(model, c.b)
    raise ValueError(f"cohomological degree must be 0, 1 or 2, got {i}")
