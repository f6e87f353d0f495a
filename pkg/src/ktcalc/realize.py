"""Build space-level K-theory models realizing prescribed crossed-product
K-theory.

The construction mirrors the geometric recipe at the group level: a free
block of rank d with the identity action contributes Z^d to both
crossed-product K-groups, one companion block per cyclic factor Z/n kills
the kernel in its own degree and contributes Z/n to the cokernel, and a
degree swap (suspension) moves torsion into K_1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .fgab import GroupHom, FgAbGroup, PresentedGroup
from .pv import SpaceKModel
from .zmatrix import IntMatrix, block_diag

DEGREE_0 = 0
DEGREE_1 = 1


@dataclass(frozen=True)
class Block:
    """A free K-group piece with a finite-order automorphism, in one degree."""

    group: PresentedGroup
    aut: GroupHom
    slot: int

    def __post_init__(self):
        if self.slot not in (DEGREE_0, DEGREE_1):
            raise InputError(f"slot must be {DEGREE_0} or {DEGREE_1}")
        if self.group.relations.cols != 0:
            raise InputError("block groups are free: relations must be empty")


def companion_matrix(n: int) -> IntMatrix:
    """(n-1)x(n-1) matrix with 1 on the first subdiagonal and -1 down the
    last column; it has order exactly n.

    >>> companion_matrix(3).entries
    ((0, -1), (1, -1))
    """
    if n < 2:
        raise InputError("companion matrix needs n >= 2")
    size = n - 1
    return IntMatrix(size, size,
                     [[1 if j == i - 1 else (-1 if j == size - 1 else 0)
                       for j in range(size)] for i in range(size)])


def companion_block(n: int) -> Block:
    """Degree-0 block on Z^(n-1): ker(id - B) = 0 and coker(id - B) = Z/n."""
    if n < 2:
        raise InputError("companion block needs n >= 2")
    grp = PresentedGroup.free(n - 1)
    return Block(grp, GroupHom(grp, grp, companion_matrix(n)), DEGREE_0)


def free_block(d: int) -> Block:
    """Degree-0 block Z^d with the identity action; coordinate 0 carries the unit."""
    if d < 1:
        raise InputError("free block needs d >= 1")
    grp = PresentedGroup.free(d)
    return Block(grp, GroupHom(grp, grp, IntMatrix.identity(d)), DEGREE_0)


def suspend(b: Block) -> Block:
    """Swap the K-degree of a block; group and automorphism are unchanged."""
    if b.slot != DEGREE_0:
        raise InputError("only degree-0 blocks can be suspended; there is no degree-2 slot")
    return Block(b.group, b.aut, DEGREE_1)


def matrix_order(m: IntMatrix, max_power: int) -> int | None:
    """Smallest k >= 1 with m^k == identity, or None if none up to max_power."""
    if m.rows != m.cols:
        raise InputError("order is defined for square matrices only")
    ident = IntMatrix.identity(m.rows)
    acc = m
    for k in range(1, max_power + 1):
        if acc == ident:
            return k
        acc = acc @ m
    return None


def _assemble(blocks: list) -> tuple:
    gens = sum(b.group.generators for b in blocks)
    grp = PresentedGroup.free(gens)
    aut = block_diag([b.aut.matrix for b in blocks]) if blocks else IntMatrix.zeros(0, 0)
    return grp, GroupHom(grp, grp, aut)


def realize(d: int, f0: FgAbGroup, f1: FgAbGroup) -> SpaceKModel:
    """Model whose crossed product has K_0 = Z^d + f0 and K_1 = Z^d + f1.

    K^0 is Z^d (identity action, unit in coordinate 0) plus one companion
    block per invariant factor of f0; K^1 is the companion blocks of f1.
    Requires d >= 1 (the unitary's class always contributes a Z) and
    finite f0, f1.
    """
    if d < 1:
        raise InputError("realize needs d >= 1: the unitary's class generates a copy of Z")
    for name, f in (("f0", f0), ("f1", f1)):
        if not f.is_finite:
            raise InputError(f"{name} must be finite (free rank 0)")
    deg0 = [free_block(d)] + [companion_block(n) for n in f0.torsion]
    deg1 = [suspend(companion_block(n)) for n in f1.torsion]
    k0, aut0 = _assemble(deg0)
    k1, aut1 = _assemble(deg1)
    unit = tuple(1 if i == 0 else 0 for i in range(k0.generators))
    return SpaceKModel(k0, k1, aut0, aut1, unit)


def pointlike_model() -> SpaceKModel:
    """K-theory of a point-like system: K^0 = Z with the unit, K^1 = 0."""
    return realize(1, FgAbGroup.trivial(), FgAbGroup.trivial())
