"""Decision procedure for the cone vanishing criterion.

Let X = C x P1 carry an ample class L and an effective class D.  The
affine cone over (X, L), with boundary the cone over D, is a rational
pair exactly when h^i(X, m*L - D) = 0 for every i > 0 and every m >= 0,
provided (X, D) is itself a rational pair.  ``serre_bound`` cuts the
infinite quantifier down to a finite window: above the bound the twist
has non-negative degree along the line and degree at least 2g-1 along
the curve, so h1 and h2 vanish for degree reasons.  ``cone_check``
scans the window and returns a certificate that can be re-validated
independently of the scan.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .curve import CurveModel
from .dimension import DimValue
from .surface import SurfaceClass, is_ample, is_effective_class, kunneth_h


class Verdict(enum.Enum):
    """Outcome of a cone check."""

    ALL_VANISH = "all_vanish"
    WITNESS = "witness"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True, slots=True)
class ConeProblem:
    """A polarized product surface with a boundary divisor class.

    The polarization must be ample and the divisor class effective;
    construction fails otherwise.
    """

    model: CurveModel
    polarization: SurfaceClass
    divisor: SurfaceClass

    def __post_init__(self) -> None:
        if not is_ample(self.polarization):
            raise ValueError(f"polarization {self.polarization} is not ample")
        if not is_effective_class(self.divisor):
            raise ValueError(f"divisor class {self.divisor} is not effective")


@dataclass(frozen=True, slots=True)
class Witness:
    """A nonvanishing h^i(m*L - D) obstructing rationality of the cone pair."""

    i: int
    m: int
    dim: DimValue

    def __post_init__(self) -> None:
        if self.i not in (1, 2):
            raise ValueError(f"witness degree must be 1 or 2, got {self.i}")
        if self.m < 0:
            raise ValueError(f"witness twist must be non-negative, got {self.m}")
        if not self.dim.is_nonzero:
            raise ValueError("witness dimension must be definitely nonzero")


@dataclass(frozen=True)
class Certificate:
    """Outcome of ``cone_check``, re-checkable from its recorded fields.

    ``indeterminate`` lists the (i, m) pairs whose dimension interval
    contains zero; it is diagnostic only (reproducible by re-running the
    scan), so it does not participate in equality or serialization.
    """

    problem: ConeProblem
    verdict: Verdict
    witness: Witness | None
    bound_m0: int
    assumptions: tuple[str, ...]
    indeterminate: tuple[tuple[int, int], ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if (self.verdict is Verdict.WITNESS) != (self.witness is not None):
            raise ValueError("witness data must accompany exactly the witness verdict")


def _assumptions(model: CurveModel) -> tuple[str, ...]:
    return (
        "rational pair hypothesis assumed, not verified",
        "snc representative exists",
        f"{model.point_mode.value} point mode",
    )


def _ceil_div(num: int, den: int) -> int:
    return -(-num // den)


def serre_bound(model: CurveModel, polarization: SurfaceClass, divisor: SurfaceClass) -> int:
    """Scan cutoff m0 for the twists m*L - D.

    For every m > m0 the twist has degree >= 0 along the line factor and
    degree >= 2g-1 along the curve factor, which forces h1 = h2 = 0.
    The bound is max(ceil(a_D / a_L), ceil((b_D + 2g - 1) / b_L), 0).
    """
    if not is_ample(polarization):
        raise ValueError(f"polarization {polarization} is not ample")
    g = model.genus
    return max(
        _ceil_div(divisor.a, polarization.a),
        _ceil_div(divisor.b + 2 * g - 1, polarization.b),
        0,
    )


def cone_check(problem: ConeProblem) -> Certificate:
    """Scan h^i(m*L - D) for i in {1, 2} and 0 <= m <= serre_bound.

    The first definitely nonzero value, ordered by ascending m and then
    by i, is returned as the witness, so reported witnesses are minimal
    in the twist degree.  If no definite witness exists the verdict is
    all-vanish, unless some value was only confined to an interval
    containing zero, in which case the verdict is indeterminate and the
    offending (i, m) pairs are recorded.
    """
    model = problem.model
    m0 = serre_bound(model, problem.polarization, problem.divisor)
    pending: list[tuple[int, int]] = []
    for m in range(m0 + 1):
        twist = m * problem.polarization - problem.divisor
        for i in (1, 2):
            value = kunneth_h(model, twist, i)
            if value.is_nonzero:
                return Certificate(
                    problem, Verdict.WITNESS, Witness(i, m, value), m0, _assumptions(model)
                )
            if value.is_indeterminate:
                pending.append((i, m))
    if pending:
        return Certificate(
            problem, Verdict.INDETERMINATE, None, m0, _assumptions(model), tuple(pending)
        )
    return Certificate(problem, Verdict.ALL_VANISH, None, m0, _assumptions(model))


def validate_certificate(cert: Certificate) -> bool:
    """Re-check a certificate against fresh cohomology evaluations.

    A witness certificate must reproduce its recorded dimension and that
    dimension must be definitely nonzero.  An all-vanish certificate
    must evaluate to an exact zero at every point of the scan window.
    An indeterminate certificate must contain no definite witness and at
    least one indeterminate value.
    """
    problem = cert.problem
    model = problem.model
    if cert.bound_m0 != serre_bound(model, problem.polarization, problem.divisor):
        return False
    if cert.verdict is Verdict.WITNESS:
        w = cert.witness
        twist = w.m * problem.polarization - problem.divisor
        value = kunneth_h(model, twist, w.i)
        return value == w.dim and value.is_nonzero and w.m <= cert.bound_m0
    saw_indeterminate = False
    for m in range(cert.bound_m0 + 1):
        twist = m * problem.polarization - problem.divisor
        for i in (1, 2):
            value = kunneth_h(model, twist, i)
            if value.is_nonzero:
                return False
            if value.is_indeterminate:
                saw_indeterminate = True
    if cert.verdict is Verdict.ALL_VANISH:
        return not saw_indeterminate
    return saw_indeterminate


@dataclass(frozen=True, slots=True)
class TopCohomologyResult:
    """Outcome of the top-degree necessary condition."""

    passed: bool
    bound_m0: int
    failing_m: int | None = None
    value: DimValue | None = None


def top_cohomology_check(model: CurveModel, polarization: SurfaceClass) -> TopCohomologyResult:
    """Necessary condition on the polarization alone.

    If any rationalizing divisor class exists, h2(X, m*L) must vanish
    for all m >= 0.  The scan stops at ``serre_bound`` for the zero
    divisor; passing means every value in the window is exactly zero.
    """
    m0 = serre_bound(model, polarization, SurfaceClass(0, 0))
    for m in range(m0 + 1):
        value = kunneth_h(model, m * polarization, 2)
        if not value.is_zero:
            return TopCohomologyResult(False, m0, m, value)
    return TopCohomologyResult(True, m0)


EMPTY_LOCUS = math.inf


def codim_precheck(codim: int | float) -> bool:
    """Screen on the codimension of the non-rational locus.

    A rationalizing divisor forces the non-rational locus into
    codimension at least 3, so codimension 1 or 2 fails the check.  An
    empty locus is encoded by ``EMPTY_LOCUS`` (infinity) and passes.
    Codimension 0 would mean the variety is nowhere rational and is
    rejected as an invalid input.
    """
    if isinstance(codim, float):
        if math.isinf(codim) and codim > 0:
            return True
        raise ValueError(f"codimension must be a positive integer or EMPTY_LOCUS, got {codim!r}")
    if not isinstance(codim, int) or isinstance(codim, bool):
        raise ValueError(f"codimension must be a positive integer or EMPTY_LOCUS, got {codim!r}")
    if codim == 0:
        raise ValueError("codimension 0 is not a meaningful non-rational locus")
    if codim < 0:
        raise ValueError(f"codimension must be positive, got {codim}")
    return codim >= 3
