"""Solve the orbit-breaking six-term exact sequence in the regimes where
its structure is completely forced.

Breaking an orbit at a closed set Y yields a subalgebra A_Y of the
crossed product A, and a six-term exact sequence linking K^*(Y), K_*(A_Y)
and K_*(A).  A general six-term constraint engine would have to guess
extensions; instead each supported regime hard-codes exactly the
structural facts that hold there (which maps split, where the boundary is
an isomorphism) and logs every step it uses, so a result can be audited
against the exactness bookkeeping after the fact.

Regimes:

* ``point``     - Y a single point, ambient K_1 = Z: restriction is an
                  isomorphism on K_0 and kills K_1.
* ``pointlike`` - ambient K_0 = K_1 = Z (point-like base space): K_0(A_Y)
                  is Z + G0 with the strict-first-coordinate cone.
* ``rr0``       - real-rank-zero systems fibred over a Cantor base:
                  K_0(A_Y) extends the Cantor dimension group G0 by an
                  infinitesimal torsion summand T, splitting as T + G0
                  with the order pulled back from G0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dimgroup import DimensionGroup, underlying
from .elliott import (
    ConeDescriptor,
    ElliottData,
    FirstCoordOverK,
    OrderFromQuotient,
    StateOfDimGroup,
    UnknownCone,
)
from .errors import InputError
from .fgab import FgAbGroup, GroupHom, compose, direct_sum, is_well_defined, iso_check
from .pv import CrossedProductK

REGIME_POINT = "point"
REGIME_POINTLIKE = "pointlike"
REGIME_RR0 = "rr0"


@dataclass(frozen=True)
class DerivationStep:
    """One audited fact: a plain statement plus the group data behind it.

    ``kind`` is ``fact`` (free-form), ``six-term`` (groups = the six-term
    cycle in order K^0(Y), K_0(A_Y), K_0(A), K^1(Y), K_1(A_Y), K_1(A)) or
    ``ses`` (groups = sub, middle, quotient of a short exact sequence).
    """

    kind: str
    text: str
    groups: tuple = ()


@dataclass(frozen=True)
class OrbitBreakK:
    """K-theory of an orbit-breaking subalgebra with its derivation log."""

    k0: FgAbGroup
    cone: ConeDescriptor
    unit: tuple | None
    k1: FgAbGroup
    trace_extreme_points: int
    derivation: tuple

    def to_elliott(self) -> ElliottData:
        """Assemble the Elliott invariant; needs a known cone and unit."""
        if isinstance(self.cone, UnknownCone):
            raise InputError("no positive cone was established for this result")
        if self.unit is None:
            raise InputError("no unit class was established for this result")
        if isinstance(self.cone, OrderFromQuotient):
            pairing = StateOfDimGroup(self.cone.group)
        else:
            pairing = FirstCoordOverK(self.unit[0])
        return ElliottData(self.k0, self.cone, self.unit, self.k1,
                           self.trace_extreme_points, pairing)


def audit(result: OrbitBreakK) -> None:
    """Re-check the exactness bookkeeping recorded in the derivation.

    Raises InputError on the first violated check: the alternating sum of
    free ranks around any six-term cycle must vanish, and a short exact
    sequence must have additive free rank and multiplicative torsion order.
    """
    for step in result.derivation:
        if step.kind == "six-term":
            if len(step.groups) != 6:
                raise InputError("six-term record must carry six groups")
            alt = sum((-1) ** i * g.free_rank for i, g in enumerate(step.groups))
            if alt != 0:
                raise InputError(
                    f"six-term cycle has nonzero alternating rank sum {alt}"
                )
        elif step.kind == "ses":
            if len(step.groups) != 3:
                raise InputError("short-exact-sequence record must carry three groups")
            sub, mid, quot = step.groups
            if mid.free_rank != sub.free_rank + quot.free_rank:
                raise InputError("short exact sequence has non-additive free ranks")
            if sub.is_finite and quot.is_finite:
                if not mid.is_finite or mid.order() != sub.order() * quot.order():
                    raise InputError(
                        "short exact sequence of finite groups has non-multiplicative orders"
                    )
            elif mid.torsion_order() % sub.torsion_order():
                raise InputError("sub torsion does not divide middle torsion")


def solve_point(ambient: CrossedProductK, extreme_points: int = 1) -> OrbitBreakK:
    """Break at a single point, ambient K_1 = Z.

    The boundary Z = K_1(A) -> K^0({y}) = Z is an isomorphism, so
    restriction K_0(A_Y) -> K_0(A) is an isomorphism and K_1(A_Y) = 0.
    No positive cone is asserted in this generality.
    """
    z = FgAbGroup.free(1)
    if not iso_check(ambient.k1, z):
        raise InputError("point regime needs ambient K_1 isomorphic to Z")
    triv = FgAbGroup.trivial()
    derivation = (
        DerivationStep("fact", "boundary map Z = K_1(A) -> K^0({y}) = Z is an isomorphism"),
        DerivationStep("fact", "K^1({y}) = 0, so K_1(A_Y) -> K_1(A) is injective with zero image"),
        DerivationStep("fact", "restriction K_0(A_Y) -> K_0(A) is an isomorphism"),
        DerivationStep("six-term", "exact cycle of the broken orbit at a point",
                       (z, ambient.k0, ambient.k0, triv, triv, z)),
    )
    result = OrbitBreakK(ambient.k0, UnknownCone(), None, triv,
                         extreme_points, derivation)
    audit(result)
    return result


def solve_pointlike(g0: FgAbGroup, g1: FgAbGroup,
                    extreme_points: int = 1) -> OrbitBreakK:
    """Break a point-like system (ambient K_0 = K_1 = Z) at Y with reduced
    K^0(Y) = g0 and K^1(Y) = g1.

    K_0(A_Y) = Z + g0 with positive cone {(n, z) : n > 0} plus zero, unit
    (1, 0); K_1(A_Y) = g1.
    """
    z = FgAbGroup.free(1)
    k0 = direct_sum(z, g0)
    unit = tuple(1 if i == 0 else 0 for i in range(k0.element_length))
    derivation = (
        DerivationStep("fact", "restriction K_0(A_Y) -> K_0(A) = Z is onto and splits"),
        DerivationStep("fact", "the splitting sends n to L(n) = (n, 0)"),
        DerivationStep("fact", "restriction K^0(Y) -> K^0({y}) sends (n, y) -> n"),
        DerivationStep("fact", "boundary K_0(A) -> K^1(Y) is zero, so K_1(A_Y) = K^1(Y)"),
        DerivationStep("fact", "trace restriction is a bijection, extreme points preserved"),
        DerivationStep("ses", "0 -> g0 -> K_0(A_Y) -> Z -> 0 (split)",
                       (g0, k0, z)),
        DerivationStep("six-term", "exact cycle of the broken orbit through Y",
                       (k0, k0, z, g1, g1, z)),
    )
    from .elliott import SimpleCone

    result = OrbitBreakK(k0, SimpleCone(), unit, g1, extreme_points, derivation)
    audit(result)
    return result


def solve_rr0(t: FgAbGroup, g0: DimensionGroup, g1: FgAbGroup,
              extreme_points: int = 1) -> OrbitBreakK:
    """Real-rank-zero regime over a Cantor base with K_0 = the dimension
    group ``g0`` and K_1 = Z; Y contributes K^0(Y) = Z + t, K^1(Y) = g1.

    K_0(A_Y) sits in the split sequence 0 -> T -> K_0(A_Y) -> G0 -> 0, so
    the underlying group is t + underlying(g0) with elements ordered by
    their image in g0 (t is infinitesimal); the unit is g0's unit.
    """
    under = underlying(g0)
    if not under.finitely_generated:
        raise InputError(
            "rr0 regime needs a unimodular step: the underlying group of the "
            "dimension group must be finitely generated"
        )
    z = FgAbGroup.free(1)
    g0_group = under.group
    k0 = direct_sum(t, g0_group)
    # Element layout: g0 level-0 coordinates first, then t's coordinates.
    unit = tuple(g0.unit) + (0,) * t.element_length
    cone = OrderFromQuotient(g0, g0.k)
    derivation = (
        DerivationStep("fact", "boundary Z = K_1(B) -> K^0({y}) = Z is an isomorphism, "
                               "and Z -> Z + T is l -> (l, 0)"),
        DerivationStep("fact", "comparison with breaking at the fibre cube splits "
                               "K_0(B_Y) -> G0"),
        DerivationStep("fact", "T maps to infinitesimals: every state kills it"),
        DerivationStep("fact", "positive cone is pulled back from the dimension group G0"),
        DerivationStep("fact", "trace restriction is a bijection, extreme points preserved"),
        DerivationStep("ses", "0 -> T -> K_0(B_Y) -> G0 -> 0 (split)",
                       (t, k0, g0_group)),
        DerivationStep("six-term", "exact cycle of the broken orbit through Y",
                       (direct_sum(z, t), k0, g0_group, g1, g1, z)),
    )
    result = OrbitBreakK(k0, cone, unit, g1, extreme_points, derivation)
    audit(result)
    return result


def boundary_compat(d_pv: GroupHom, j_star: GroupHom) -> GroupHom:
    """Compose the crossed-product boundary with restriction to Y.

    The two boundary maps are compatible: the orbit-breaking boundary is
    the restriction j^* following the crossed-product boundary, so the
    composition populates the six-term boundary whenever both maps are
    given explicitly.
    """
    if d_pv.target != j_star.source:
        raise InputError("boundary and restriction are not composable: presentations differ")
    for name, h in (("d_pv", d_pv), ("j_star", j_star)):
        if not is_well_defined(h):
            raise InputError(f"{name} is not a well-defined homomorphism")
    return compose(j_star, d_pv)


@dataclass(frozen=True)
class OrbitBreakProblem:
    """Bundled input for the regime-dispatched solver (CLI-facing)."""

    regime: str
    ambient: CrossedProductK | None = None
    g0: FgAbGroup | None = None
    g1: FgAbGroup | None = None
    t: FgAbGroup | None = None
    dimension_group: DimensionGroup | None = None
    extreme_points: int = 1


def solve(problem: OrbitBreakProblem) -> OrbitBreakK:
    if problem.regime == REGIME_POINT:
        if problem.ambient is None:
            raise InputError("point regime needs the ambient crossed-product K-theory")
        return solve_point(problem.ambient, problem.extreme_points)
    if problem.regime == REGIME_POINTLIKE:
        if problem.g0 is None or problem.g1 is None:
            raise InputError("pointlike regime needs groups g0 and g1")
        return solve_pointlike(problem.g0, problem.g1, problem.extreme_points)
    if problem.regime == REGIME_RR0:
        if problem.t is None or problem.dimension_group is None or problem.g1 is None:
            raise InputError("rr0 regime needs t, a dimension group, and g1")
        return solve_rr0(problem.t, problem.dimension_group, problem.g1,
                         problem.extreme_points)
    raise InputError(f"unknown regime {problem.regime!r}")
