"""Line bundle cohomology on a smooth projective curve and on the line.

Divisors on the curve are integer multiples of a single marked point Q
on a curve of genus g.  Riemann-Roch pins the dimension of h0(nQ) down
exactly outside the range 2 <= n <= 2g-2; inside it the answer depends
on how special the point is, which is captured by two modes:

* generic: Q has the generic gap sequence 1, ..., g, so every dimension
  is exact;
* arbitrary: nothing is assumed about Q, and for 2 <= n <= 2g-2 the
  dimension is only confined to the interval between the Riemann-Roch
  lower bound and Clifford's upper bound.  Both endpoints are attained
  (by a generic point and by a hyperelliptic Weierstrass point).

The second factor of the product surface is the projective line, whose
cohomology is included here as well.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .dimension import DimValue


class PointMode(enum.Enum):
    """How special the marked point is allowed to be."""

    GENERIC = "generic"
    ARBITRARY = "arbitrary"


@dataclass(frozen=True, slots=True)
class CurveModel:
    """A smooth projective curve of genus ``genus`` with one marked point."""

    genus: int
    point_mode: PointMode = PointMode.GENERIC

    def __post_init__(self) -> None:
        if not isinstance(self.genus, int) or isinstance(self.genus, bool):
            raise TypeError("genus must be an integer")
        if self.genus < 0:
            raise ValueError(f"genus must be non-negative, got {self.genus}")
        if not isinstance(self.point_mode, PointMode):
            raise TypeError("point_mode must be a PointMode")


def h0_curve(model: CurveModel, n: int) -> DimValue:
    """h0(C, O(nQ)).

    Exact branches, in order: negative degree has no sections; O has the
    constants; degree above 2g-2 is nonspecial, so Riemann-Roch gives
    n - g + 1; a degree-1 bundle with two sections would force genus 0,
    so n = 1 gives 1.  In the remaining range 2 <= n <= 2g-2 a generic
    point has h0 = max(1, n - g + 1), while an arbitrary point is only
    bounded: at least the generic value, at most floor(n/2) + 1 by
    Clifford's theorem.
    """
    g = model.genus
    if n < 0:
        return DimValue.exact(0)
    if n == 0:
        return DimValue.exact(1)
    if n > 2 * g - 2:
        return DimValue.exact(n - g + 1)
    if n == 1:
        return DimValue.exact(1)
    lo = max(1, n - g + 1)
    if model.point_mode is PointMode.GENERIC:
        return DimValue.exact(lo)
    hi = max(lo, n // 2 + 1)
    return DimValue.between(lo, hi)


def h1_curve(model: CurveModel, n: int) -> DimValue:
    """h1(C, O(nQ)) through the Riemann-Roch shift h1 = h0 - n + g - 1.

    The shift moves both interval endpoints and clamps at zero, which
    reproduces the unconditional facts h1 = 0 for n > 2g-2 and
    h1 = g - n - 1 for n < 0.
    """
    return h0_curve(model, n).shift(model.genus - n - 1)


def h0_p1(n: int) -> DimValue:
    """h0(P1, O(n)): the n + 1 monomials of degree n, none when n < 0."""
    return DimValue.exact(max(0, n + 1))


def h1_p1(n: int) -> DimValue:
    """h1(P1, O(n)) = h0(P1, O(-n-2)) by Serre duality on the line."""
    return DimValue.exact(max(0, -n - 1))
