"""Elliott-invariant data: ordered K_0 with unit, K_1, trace data, pairing.

The positive cone is carried as a symbolic descriptor with an executable
membership predicate, never as a generator list (the cones are infinite).
Only the cone shapes that the computations in this package actually
produce are modeled; deciding isomorphism of arbitrary ordered groups is
out of scope, so comparison is field-by-field on canonical forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dimgroup import POSITIVE, UNDETERMINED, DgElement, DimensionGroup, positivity, state_value
from .errors import InputError
from .fgab import FgAbGroup


# --- positive-cone descriptors -------------------------------------------

@dataclass(frozen=True)
class SimpleCone:
    """{(n, z) : n > 0} plus the zero element, n the first coordinate."""

    tag = "SimpleCone"


@dataclass(frozen=True)
class FullPositiveFirstCoord:
    """Z_{>0} + Z^(d-1) + torsion, plus the zero element."""

    free_rank: int
    tag = "FullPositiveFirstCoord"


@dataclass(frozen=True)
class NonNegFree:
    """Product order on Z^d: every coordinate nonnegative."""

    free_rank: int
    tag = "NonNegFree"


@dataclass(frozen=True)
class OrderFromQuotient:
    """Order pulled back from a stationary dimension group.

    The first ``quotient_rank`` coordinates are the level-0 coordinates of
    the dimension-group quotient; the rest is an infinitesimal summand.
    Membership defers to the dimension group's positivity test and may be
    undetermined at the configured depth.
    """

    group: DimensionGroup
    quotient_rank: int
    max_iter: int = 25
    tag = "OrderFromQuotient"


@dataclass(frozen=True)
class UnknownCone:
    """No positive cone is asserted for this result."""

    tag = "Unknown"


ConeDescriptor = SimpleCone | FullPositiveFirstCoord | NonNegFree | OrderFromQuotient | UnknownCone


def cone_contains(cone, group: FgAbGroup, vec) -> bool | None:
    """Executable membership predicate; None means undetermined.

    >>> cone_contains(SimpleCone(), FgAbGroup(1, (3,)), (0, 3))
    True
    >>> cone_contains(SimpleCone(), FgAbGroup(1, (3,)), (0, 2))
    False
    """
    v = group.reduce_element(vec)
    if isinstance(cone, UnknownCone):
        raise InputError("cone membership is undefined for an unknown cone")
    if isinstance(cone, (SimpleCone, FullPositiveFirstCoord)):
        if all(x == 0 for x in v):
            return True
        return len(v) > 0 and v[0] > 0
    if isinstance(cone, NonNegFree):
        return all(x >= 0 for x in v)
    if isinstance(cone, OrderFromQuotient):
        if all(x == 0 for x in v):
            return True
        head = v[: cone.quotient_rank]
        verdict = positivity(cone.group, DgElement(0, head), cone.max_iter)
        if verdict == POSITIVE:
            return True
        if verdict == UNDETERMINED:
            return None
        # zero or negative quotient part: a nonzero infinitesimal is not positive
        return False
    raise InputError(f"unrecognized cone descriptor {cone!r}")


# --- trace pairing descriptors -------------------------------------------

@dataclass(frozen=True)
class FirstCoordinate:
    """Every trace pairs an element to its first coordinate."""

    kind = "FirstCoordinate"


@dataclass(frozen=True)
class FirstCoordOverK:
    """Every trace pairs (n, g) to n/k; the unit (k, 0) goes to 1."""

    k: int
    kind = "FirstCoordOverK"

    def __post_init__(self):
        if self.k < 1:
            raise InputError("pairing denominator k must be >= 1")


@dataclass(frozen=True)
class StateOfDimGroup:
    """Pairing through the Perron state of a dimension-group quotient."""

    group: DimensionGroup
    depth: int = 20
    kind = "StateOfDimGroup"


PairingDescriptor = FirstCoordinate | FirstCoordOverK | StateOfDimGroup


@dataclass(frozen=True)
class ElliottData:
    """The 6-tuple invariant: (K_0, cone, unit, K_1, traces, pairing).

    The trace simplex is recorded by its extreme-point count only.
    """

    k0: FgAbGroup
    cone: ConeDescriptor
    unit: tuple
    k1: FgAbGroup
    trace_extreme_points: int
    pairing: PairingDescriptor

    def __post_init__(self):
        object.__setattr__(self, "unit", self.k0.reduce_element(self.unit))
        if self.trace_extreme_points < 1:
            raise InputError("trace simplex needs at least one extreme point")
        if all(x == 0 for x in self.unit):
            raise InputError("unit class must be nonzero")
        if not isinstance(self.cone, UnknownCone):
            if cone_contains(self.cone, self.k0, self.unit) is not True:
                raise InputError("unit class must lie in the positive cone")


def build_pointlike_invariant(g0: FgAbGroup, g1: FgAbGroup, k: int,
                              extreme_points: int) -> ElliottData:
    """Invariant (Z + g0, simple cone, unit (k, 0), g1, simplex, n/k pairing).

    >>> inv = build_pointlike_invariant(FgAbGroup.trivial(), FgAbGroup.trivial(), 1, 1)
    >>> str(inv.k0), inv.unit
    ('Z', (1,))
    """
    if k < 1:
        raise InputError("unit multiplicity k must be >= 1")
    if extreme_points < 1:
        raise InputError("trace simplex needs at least one extreme point")
    from .fgab import direct_sum

    k0 = direct_sum(FgAbGroup.free(1), g0)
    unit = tuple(k if i == 0 else 0 for i in range(k0.element_length))
    return ElliottData(k0, SimpleCone(), unit, g1, extreme_points, FirstCoordOverK(k))


def pairing_eval(e: ElliottData, x) -> Fraction:
    """Value of the (unique up to the simplex) trace pairing on an element.

    >>> inv = build_pointlike_invariant(FgAbGroup.cyclic(3), FgAbGroup.trivial(), 2, 1)
    >>> pairing_eval(inv, (3, 1))
    Fraction(3, 2)
    """
    v = e.k0.reduce_element(x)
    if isinstance(e.pairing, FirstCoordinate):
        return Fraction(v[0]) if v else Fraction(0)
    if isinstance(e.pairing, FirstCoordOverK):
        return Fraction(v[0], e.pairing.k) if v else Fraction(0)
    if isinstance(e.pairing, StateOfDimGroup):
        head = v[: e.pairing.group.k]
        lo, hi = state_value(e.pairing.group, DgElement(0, head), e.pairing.depth)
        return (lo + hi) / 2
    raise InputError(f"unrecognized pairing descriptor {e.pairing!r}")


def projectionless_check(e: ElliottData) -> bool:
    """True iff no group element splits the unit inside the cone.

    For the first-coordinate cones this is decidable: a splitting element
    must have first coordinate strictly between 0 and the unit's, so the
    check reduces to unit[0] == 1.
    """
    if not isinstance(e.cone, (SimpleCone, FullPositiveFirstCoord)):
        raise InputError("projectionless check supports the first-coordinate cones only")
    return e.unit[0] == 1


def invariant_equal(a: ElliottData, b: ElliottData) -> bool:
    """Field-by-field equality of canonical forms.

    Rejects unknown cones: without a cone there is nothing to compare.
    """
    for e in (a, b):
        if isinstance(e.cone, UnknownCone):
            raise InputError("cannot compare invariants with an unknown cone")
    return (
        a.k0 == b.k0
        and a.cone == b.cone
        and a.unit == b.unit
        and a.k1 == b.k1
        and a.trace_extreme_points == b.trace_extreme_points
        and a.pairing == b.pairing
    )
