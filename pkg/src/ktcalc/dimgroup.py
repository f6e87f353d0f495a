"""Stationary dimension groups: inductive limits of Z^k under one fixed
primitive matrix, with order, unit and an exact rational state.

An element is a vector at some level; the step matrix identifies level n
with level n+1, so equality, positivity and the state are all decided by
iterating the step.  Positivity can legitimately come back undetermined
at a finite depth (infinitesimal candidates); that is a first-class
outcome, not an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .fgab import FgAbGroup
from .zmatrix import IntMatrix, det

POSITIVE = "positive"
NEGATIVE = "negative"
ZERO = "zero"
UNDETERMINED = "undetermined"

DEFAULT_MAX_ITER = 25


class DimensionGroup:
    """Inductive limit of Z^k -> Z^k -> ... along a primitive step matrix.

    Primitivity (some power entrywise > 0) is certified at construction by
    powering up to ``primitivity_bound`` (default k^2 + 1); the witness
    power is cached for the state computation.  The unit is a nonzero
    nonnegative vector at level 0.
    """

    __slots__ = ("k", "step", "unit", "positive_power", "_positive_matrix")

    def __init__(self, k: int, step: IntMatrix, unit,
                 primitivity_bound: int | None = None) -> None:
        k = int(k)
        if k < 1:
            raise InputError("dimension group size k must be >= 1")
        if step.rows != k or step.cols != k:
            raise InputError(f"step matrix must be {k}x{k}")
        self.k = k
        self.step = step
        self.unit = tuple(int(x) for x in unit)
        if len(self.unit) != k:
            raise InputError(f"unit vector must have length {k}")
        if any(x < 0 for x in self.unit) or not any(self.unit):
            raise InputError("unit must be nonzero with nonnegative entries")
        bound = primitivity_bound if primitivity_bound is not None else k * k + 1
        power = IntMatrix.identity(k)
        witness = None
        for p in range(1, bound + 1):
            power = power @ step
            if all(x > 0 for row in power.entries for x in row):
                witness = p
                break
        if witness is None:
            raise InputError(
                f"step matrix is not primitive: no power up to {bound} is entrywise positive"
            )
        self.positive_power = witness
        self._positive_matrix = power

    def __eq__(self, other) -> bool:
        if not isinstance(other, DimensionGroup):
            return NotImplemented
        return (self.k, self.step, self.unit) == (other.k, other.step, other.unit)

    def __hash__(self) -> int:
        return hash((self.k, self.step, self.unit))

    def __repr__(self) -> str:
        return f"DimensionGroup(k={self.k}, step={self.step!r}, unit={self.unit!r})"

    def unit_element(self) -> "DgElement":
        return DgElement(0, self.unit)


@dataclass(frozen=True)
class DgElement:
    """Class of an integer vector at a given level of the limit."""

    level: int
    vector: tuple

    def __post_init__(self):
        if self.level < 0:
            raise InputError("level must be nonnegative")
        object.__setattr__(self, "vector", tuple(int(x) for x in self.vector))


def _check_element(g: DimensionGroup, x: DgElement) -> None:
    if len(x.vector) != g.k:
        raise InputError(f"element vector must have length {g.k}")


def elements_equal(g: DimensionGroup, a: DgElement, b: DgElement) -> bool:
    """Equality after pushing both representatives to a common level."""
    _check_element(g, a)
    _check_element(g, b)
    va, vb = list(a.vector), list(b.vector)
    la, lb = a.level, b.level
    while la < lb:
        va = g.step.apply(va)
        la += 1
    while lb < la:
        vb = g.step.apply(vb)
        lb += 1
    diff = [p - q for p, q in zip(va, vb)]
    # ker(step^m) stabilizes by m = k, so k extra pushes decide equality.
    for _ in range(g.k):
        if all(x == 0 for x in diff):
            return True
        diff = list(g.step.apply(diff))
    return all(x == 0 for x in diff)


def is_zero(g: DimensionGroup, x: DgElement) -> bool:
    return elements_equal(g, x, DgElement(x.level, (0,) * g.k))


def positivity(g: DimensionGroup, x: DgElement,
               max_iter: int = DEFAULT_MAX_ITER) -> str:
    """One of positive / negative / zero / undetermined.

    Positive means some step-iterate of the vector is entrywise > 0
    within max_iter applications (negative symmetrically).  Anything the
    iteration cannot decide at this depth is reported undetermined; for a
    nonzero infinitesimal no depth ever decides.
    """
    _check_element(g, x)
    if is_zero(g, x):
        return ZERO
    v = list(x.vector)
    for _ in range(max_iter + 1):
        if all(e > 0 for e in v):
            return POSITIVE
        if all(e < 0 for e in v):
            return NEGATIVE
        v = list(g.step.apply(v))
    return UNDETERMINED


@dataclass(frozen=True)
class UnderlyingGroup:
    """Underlying-group answer: canonical form when it is finitely generated."""

    finitely_generated: bool
    group: FgAbGroup | None
    step_determinant: int


def underlying(g: DimensionGroup) -> UnderlyingGroup:
    """Underlying abelian group of the limit.

    A unimodular step makes every bonding map an isomorphism, so the limit
    is Z^k.  Otherwise (|det| >= 2) the limit is not finitely generated
    (e.g. step [2] gives the dyadic rationals) and only level-wise data is
    exposed.  A step that is singular over Q is rejected.
    """
    d = det(g.step)
    if d == 0:
        raise InputError("underlying group needs a step matrix invertible over Q")
    if abs(d) == 1:
        return UnderlyingGroup(True, FgAbGroup.free(g.k), d)
    return UnderlyingGroup(False, None, d)


def state_value(g: DimensionGroup, x: DgElement, iterations: int = 20) -> tuple:
    """Exact rational interval [lo, hi] around the state of x, unit = 1.

    The unit is pushed to x's level, then both vectors are iterated under
    the step; entrywise min/max ratios bracket the limiting state value,
    and the brackets are nested as the depth grows.  ``iterations`` counts
    step applications for a nonnegative step, and applications of the
    cached positive power otherwise.
    """
    _check_element(g, x)
    if iterations < 1:
        raise InputError("state_value needs at least one iteration")
    v = list(x.vector)
    a = list(g.unit)
    for _ in range(x.level):
        a = list(g.step.apply(a))

    nonneg = all(e >= 0 for row in g.step.entries for e in row)
    mat = g.step if nonneg else g._positive_matrix
    bounds = None
    for _ in range(iterations):
        v = list(mat.apply(v))
        a = list(mat.apply(a))
        if all(e > 0 for e in a):
            ratios = [Fraction(p, q) for p, q in zip(v, a)]
            bounds = (min(ratios), max(ratios))
    if bounds is None:
        raise InputError(
            "state bounds unavailable: the unit image never became entrywise positive "
            f"within {iterations} iterations"
        )
    return bounds
