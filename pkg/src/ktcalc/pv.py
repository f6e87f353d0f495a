"""K-theory of a crossed product from the six-term sequence of the action.

Given the K-groups of the space with the automorphisms induced by the
homeomorphism, the two crossed-product K-groups each sit in a short exact
sequence

    0 -> coker(id - aut) -> K_j -> ker(id - aut') -> 0

with the roles of the degree-0 and degree-1 data swapped between j = 0
and j = 1.  The solver asserts the middle group only when the extension
is forced to split (free quotient end, or vanishing Ext of the ends);
otherwise it reports the ends and flags the result as ambiguous rather
than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .fgab import (
    FgAbGroup,
    GroupHom,
    PresentedGroup,
    direct_sum,
    ext1,
    hom_cokernel,
    hom_inverse,
    hom_kernel,
    is_well_defined,
    normalize,
)
from .zmatrix import IntMatrix

STATUS_SPLIT = "split-forced"
STATUS_AMBIGUOUS = "ambiguous"


@dataclass(frozen=True)
class SpaceKModel:
    """K-theory model of a space with homeomorphism: (K^0, K^1, both induced
    automorphisms, and the class of the unit in K^0)."""

    k0: PresentedGroup
    k1: PresentedGroup
    aut0: GroupHom
    aut1: GroupHom
    unit: tuple

    def __post_init__(self):
        object.__setattr__(self, "unit", tuple(int(x) for x in self.unit))
        if len(self.unit) != self.k0.generators:
            raise InputError(
                f"unit vector length {len(self.unit)} does not match {self.k0.generators} generators"
            )

    @classmethod
    def of(cls, k0: PresentedGroup, aut0: IntMatrix, k1: PresentedGroup,
           aut1: IntMatrix, unit) -> "SpaceKModel":
        return cls(k0, k1, GroupHom(k0, k0, aut0), GroupHom(k1, k1, aut1), tuple(unit))


def validate_model(m: SpaceKModel) -> None:
    """Check every model invariant; raise InputError naming the failure."""
    for name, aut, grp in (("aut0", m.aut0, m.k0), ("aut1", m.aut1, m.k1)):
        if aut.source != grp or aut.target != grp:
            raise InputError(f"{name} is not an endomorphism of its K-group presentation")
        if not is_well_defined(aut):
            raise InputError(f"{name} is not well-defined on the presented group")
        if hom_inverse(aut) is None:
            raise InputError(f"{name} is not an automorphism: no two-sided inverse exists")
    if not m.k0.elements_equal(m.aut0.apply(m.unit), m.unit):
        raise InputError("unit class is not fixed by aut0")
    grp, onto = normalize(m.k0)
    canon = onto.apply(m.unit)
    if not any(canon[: grp.free_rank]):
        raise InputError("unit class must have infinite order in K^0")


@dataclass(frozen=True)
class CrossedProductK:
    """Crossed-product K-theory with split/ambiguity bookkeeping.

    ``k0``/``k1`` are the asserted groups when the status is split-forced,
    and the split *candidates* (ends direct-summed) when ambiguous.  The
    extension ends are always reported.
    """

    k0: FgAbGroup
    k1: FgAbGroup
    k0_ext_status: str
    k1_ext_status: str
    k0_sub: FgAbGroup
    k0_quot: FgAbGroup
    k1_sub: FgAbGroup
    k1_quot: FgAbGroup

    @classmethod
    def from_groups(cls, k0: FgAbGroup, k1: FgAbGroup) -> "CrossedProductK":
        """Wrap already-known K-groups (e.g. a Cantor system's) as a result."""
        triv = FgAbGroup.trivial()
        return cls(k0, k1, STATUS_SPLIT, STATUS_SPLIT, k0, triv, k1, triv)

    @property
    def is_ambiguous(self) -> bool:
        return STATUS_AMBIGUOUS in (self.k0_ext_status, self.k1_ext_status)


def _extension(sub: FgAbGroup, quot: FgAbGroup) -> tuple:
    """Middle-group candidate and its status for 0 -> sub -> ? -> quot -> 0."""
    if not quot.torsion or ext1(quot, sub).is_trivial:
        return direct_sum(sub, quot), STATUS_SPLIT
    return direct_sum(sub, quot), STATUS_AMBIGUOUS


def pv_compute(m: SpaceKModel, validate: bool = True) -> CrossedProductK:
    """Crossed-product K-theory of a validated model.

    K_0 extends coker(id - aut0) by ker(id - aut1); K_1 extends
    coker(id - aut1) by ker(id - aut0).
    """
    if validate:
        validate_model(m)
    one_minus_0 = GroupHom(m.k0, m.k0,
                           IntMatrix.identity(m.k0.generators) - m.aut0.matrix)
    one_minus_1 = GroupHom(m.k1, m.k1,
                           IntMatrix.identity(m.k1.generators) - m.aut1.matrix)
    k0_sub = hom_cokernel(one_minus_0)
    k0_quot = hom_kernel(one_minus_1)
    k1_sub = hom_cokernel(one_minus_1)
    k1_quot = hom_kernel(one_minus_0)
    k0, status0 = _extension(k0_sub, k0_quot)
    k1, status1 = _extension(k1_sub, k1_quot)
    result = CrossedProductK(k0, k1, status0, status1,
                             k0_sub, k0_quot, k1_sub, k1_quot)
    if k1_quot.free_rank < 1:
        # The fixed unit class generates a copy of Z inside ker(id - aut0).
        raise AssertionError("ker(id - aut0) lost the unit's copy of Z")
    if k0.free_rank != k1.free_rank:
        # Kernel and cokernel of a square integer map share their rank, so
        # the two degrees must agree; a mismatch means a computation bug.
        raise AssertionError("free ranks of K_0 and K_1 disagree")
    return result


def rank_duality_check(r: CrossedProductK) -> bool:
    """Free ranks of K_0 and K_1 agree and K_1 has free rank >= 1.

    Only meaningful when both extensions are split-forced; anything else
    is rejected.
    """
    if r.is_ambiguous:
        raise InputError("rank duality requires both extensions split-forced")
    return r.k0.free_rank == r.k1.free_rank and r.k1.free_rank >= 1
