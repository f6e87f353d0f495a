"""Finitely generated abelian groups, presentations, and homomorphisms.

A group is stored in canonical form (free rank plus invariant-factor
chain), so structural equality coincides with isomorphism.  Presented
groups are quotients Z^n / column-span(relations); homomorphisms between
presentations are integer matrices checked for well-definedness.  A
brute-force element-order census doubles as an independent oracle for
small finite groups.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from itertools import product
from math import gcd, lcm, prod

from .errors import InputError
from .zmatrix import IntMatrix, RowSpan, hstack, hnf, kernel_basis, snf

DEFAULT_ENUM_BOUND = 10**6


def enumeration_bound() -> int:
    """Cap on brute-force element enumeration (env KTF_MAX_ENUM)."""
    raw = os.environ.get("KTF_MAX_ENUM")
    if raw is None:
        return DEFAULT_ENUM_BOUND
    try:
        bound = int(raw)
    except ValueError as exc:
        raise InputError(f"KTF_MAX_ENUM must be an integer, got {raw!r}") from exc
    if bound < 1:
        raise InputError("KTF_MAX_ENUM must be positive")
    return bound


@dataclass(frozen=True)
class FgAbGroup:
    """Canonical form of a finitely generated abelian group.

    ``free_rank`` copies of Z plus cyclic factors Z/d for the invariant
    factors d in ``torsion`` (each >= 2, each dividing the next).  Two
    values are equal exactly when the groups are isomorphic.

    Elements are integer tuples of length ``free_rank + len(torsion)``,
    free coordinates first, torsion residues after.

    >>> FgAbGroup.from_cyclic_factors(2, 3) == FgAbGroup.cyclic(6)
    True
    >>> str(FgAbGroup(2, (3,)))
    'Z^2 + Z/3'
    """

    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise InputError("free rank must be nonnegative")
        tor = tuple(int(d) for d in self.torsion)
        object.__setattr__(self, "torsion", tor)
        for d in tor:
            if d < 2:
                raise InputError(f"invariant factor {d} is < 2")
        for a, b in zip(tor, tor[1:]):
            if b % a:
                raise InputError(f"invariant factors {a}, {b} break the divisibility chain")

    @classmethod
    def trivial(cls) -> "FgAbGroup":
        return cls(0, ())

    @classmethod
    def free(cls, rank: int) -> "FgAbGroup":
        return cls(rank, ())

    @classmethod
    def cyclic(cls, n: int) -> "FgAbGroup":
        if n < 1:
            raise InputError("cyclic factor must be >= 1")
        return cls(0, ()) if n == 1 else cls(0, (n,))

    @classmethod
    def from_cyclic_factors(cls, *factors: int) -> "FgAbGroup":
        """Canonicalize an arbitrary list of cyclic orders (0 means Z)."""
        free = sum(1 for f in factors if f == 0)
        finite = [abs(f) for f in factors if f != 0]
        if any(f < 1 for f in finite):
            raise InputError("cyclic factors must be nonnegative")
        finite = [f for f in finite if f > 1]
        diag = snf(IntMatrix.diagonal(finite)).diagonal()
        return cls(free, tuple(d for d in diag if d > 1))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> int:
        if not self.is_finite:
            raise InputError("order is defined only for finite groups")
        return prod(self.torsion) if self.torsion else 1

    def torsion_order(self) -> int:
        return prod(self.torsion) if self.torsion else 1

    @property
    def element_length(self) -> int:
        return self.free_rank + len(self.torsion)

    def reduce_element(self, vec) -> tuple:
        """Canonical representative: torsion coordinates mod their factor."""
        v = [int(x) for x in vec]
        if len(v) != self.element_length:
            raise InputError(
                f"element length {len(v)} does not match group with {self.element_length} coordinates"
            )
        for i, d in enumerate(self.torsion):
            v[self.free_rank + i] %= d
        return tuple(v)

    def is_zero_element(self, vec) -> bool:
        return all(x == 0 for x in self.reduce_element(vec))

    def element_order(self, vec) -> int:
        """Order of an element; 0 means infinite."""
        v = self.reduce_element(vec)
        if any(v[: self.free_rank]):
            return 0
        orders = [d // gcd(d, x) for d, x in zip(self.torsion, v[self.free_rank:])]
        return lcm(*orders) if orders else 1

    def elements(self):
        """All elements of a finite group (free_rank must be 0)."""
        if not self.is_finite:
            raise InputError("cannot enumerate an infinite group")
        return product(*[range(d) for d in self.torsion])

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def direct_sum(a: FgAbGroup, b: FgAbGroup) -> FgAbGroup:
    """Canonical form of a (+) b, invariant factors re-normalized.

    >>> str(direct_sum(FgAbGroup.cyclic(2), FgAbGroup.cyclic(3)))
    'Z/6'
    """
    return FgAbGroup.from_cyclic_factors(
        *([0] * (a.free_rank + b.free_rank)), *a.torsion, *b.torsion
    )


def iso_check(a: FgAbGroup, b: FgAbGroup) -> bool:
    """True iff the canonical forms are identical (i.e. the groups are isomorphic)."""
    return a == b


def order_statistics(g: FgAbGroup, bound: int | None = None) -> dict:
    """Exact multiset {element order: count} by exhaustive enumeration.

    Independent of the normal-form machinery: rejects infinite groups and
    groups larger than the enumeration bound.

    >>> order_statistics(FgAbGroup.cyclic(4))
    {1: 1, 2: 1, 4: 2}
    """
    if not g.is_finite:
        raise InputError("order statistics require a finite group (free rank 0)")
    if bound is None:
        bound = enumeration_bound()
    if g.order() > bound:
        raise InputError(f"group order {g.order()} exceeds enumeration bound {bound}")
    stats = Counter()
    for el in g.elements():
        orders = [d // gcd(d, x) for d, x in zip(g.torsion, el)]
        stats[lcm(*orders) if orders else 1] += 1
    return dict(sorted(stats.items()))


@dataclass(frozen=True)
class PresentedGroup:
    """Generators-and-relations presentation: Z^generators / column-span(relations)."""

    generators: int
    relations: IntMatrix

    def __post_init__(self):
        if self.generators < 0:
            raise InputError("generator count must be nonnegative")
        if self.relations.rows != self.generators:
            raise InputError(
                f"relations matrix has {self.relations.rows} rows, expected {self.generators}"
            )

    @classmethod
    def free(cls, n: int) -> "PresentedGroup":
        return cls(n, IntMatrix.zeros(n, 0))

    def relation_span(self) -> RowSpan:
        return RowSpan(self.relations.transpose())

    def elements_equal(self, v, w) -> bool:
        diff = [int(a) - int(b) for a, b in zip(v, w, strict=True)]
        return self.relation_span().contains(diff)


def canonical_presentation(g: FgAbGroup) -> PresentedGroup:
    """Presentation with free generators first, then one generator per factor."""
    n = g.element_length
    rel = IntMatrix(n, len(g.torsion),
                    [[g.torsion[j] if i == g.free_rank + j else 0
                      for j in range(len(g.torsion))] for i in range(n)])
    return PresentedGroup(n, rel)


@dataclass(frozen=True)
class GroupHom:
    """Matrix-represented homomorphism between presented groups.

    ``matrix`` is target.generators x source.generators; columns are images
    of the source generators.  Well-definedness (relations map into
    relations) is checked by :func:`is_well_defined`, not at construction.
    """

    source: PresentedGroup
    target: PresentedGroup
    matrix: IntMatrix

    def __post_init__(self):
        if self.matrix.rows != self.target.generators or self.matrix.cols != self.source.generators:
            raise InputError(
                f"hom matrix is {self.matrix.rows}x{self.matrix.cols}, expected "
                f"{self.target.generators}x{self.source.generators}"
            )

    def apply(self, vec) -> tuple:
        return self.matrix.apply(vec)


def identity_hom(p: PresentedGroup) -> GroupHom:
    return GroupHom(p, p, IntMatrix.identity(p.generators))


def compose(outer: GroupHom, inner: GroupHom) -> GroupHom:
    if inner.target != outer.source:
        raise InputError("homomorphisms are not composable: target/source presentations differ")
    return GroupHom(inner.source, outer.target, outer.matrix @ inner.matrix)


def is_well_defined(h: GroupHom) -> bool:
    """True iff h maps every source relation into the target relation span."""
    span = h.target.relation_span()
    images = h.matrix @ h.source.relations
    return all(span.contains(images.column(j)) for j in range(images.cols))


def _require_well_defined(h: GroupHom) -> None:
    if not is_well_defined(h):
        raise InputError("homomorphism is not well-defined: a relation maps outside the target relations")


def _lattice_basis(generators: IntMatrix) -> IntMatrix:
    """Basis (as columns) of the lattice spanned by the given columns."""
    h, _ = hnf(generators.transpose())
    rows = [r for r in h.entries if any(x != 0 for x in r)]
    if not rows:
        return IntMatrix(generators.rows, 0, [[] for _ in range(generators.rows)])
    return IntMatrix.from_rows(rows).transpose()


def hom_kernel(h: GroupHom) -> FgAbGroup:
    """Kernel of h in canonical form.

    Computed as the preimage lattice {x : h(x) in im(target relations)}
    modulo the source relations, via the fiber-product presentation.
    """
    from .zmatrix import cokernel, solve

    _require_well_defined(h)
    n = h.source.generators
    big = hstack(h.matrix, h.target.relations)
    ker = kernel_basis(big)
    proj = IntMatrix(n, ker.cols, [ker.entries[i] for i in range(n)])
    basis = _lattice_basis(proj)
    if basis.cols == 0:
        return FgAbGroup.trivial()
    rel_cols = []
    for j in range(h.source.relations.cols):
        c = solve(basis, h.source.relations.column(j))
        if c is None:
            raise InputError("source relation escaped the kernel lattice; homomorphism is inconsistent")
        rel_cols.append(c)
    if rel_cols:
        rel = IntMatrix.from_rows(rel_cols).transpose()
    else:
        rel = IntMatrix.zeros(basis.cols, 0)
    return cokernel(rel)


def hom_cokernel(h: GroupHom) -> FgAbGroup:
    """Cokernel target / (im h + im target relations), in canonical form."""
    from .zmatrix import cokernel

    _require_well_defined(h)
    return cokernel(hstack(h.matrix, h.target.relations))


def hom_inverse(h: GroupHom) -> GroupHom | None:
    """Two-sided inverse exhibited by Hermite solving, or None.

    For each target generator e_i, solves h.matrix @ x + relations @ y = e_i
    over the integers; the solutions assemble the candidate inverse, which
    is then verified to be well-defined and two-sided.
    """
    _require_well_defined(h)
    ns, nt = h.source.generators, h.target.generators
    big = hstack(h.matrix, h.target.relations)
    span = RowSpan(big.transpose())
    cols = []
    for i in range(nt):
        e = [1 if j == i else 0 for j in range(nt)]
        sol = span.express(e)
        if sol is None:
            return None
        cols.append(sol[:ns])
    if cols:
        inv_matrix = IntMatrix.from_rows(cols).transpose()
    else:
        inv_matrix = IntMatrix.zeros(ns, 0)
    inv = GroupHom(h.target, h.source, inv_matrix)
    if not is_well_defined(inv):
        return None
    if not _is_identity_mod_relations(compose(inv, h)):
        return None
    if not _is_identity_mod_relations(compose(h, inv)):
        return None
    return inv


def _is_identity_mod_relations(h: GroupHom) -> bool:
    n = h.source.generators
    span = h.source.relation_span()
    delta = h.matrix - IntMatrix.identity(n)
    return all(span.contains(delta.column(j)) for j in range(n))


def normalize(g: PresentedGroup) -> tuple:
    """Canonical form of a presented group and the isomorphism onto it.

    Returns ``(group, onto)`` where ``onto`` maps ``g`` onto the canonical
    presentation of ``group`` (free coordinates first, then torsion).

    >>> gp = PresentedGroup(2, IntMatrix.diagonal([2, 3]))
    >>> normalize(gp)[0] == FgAbGroup.cyclic(6)
    True
    """
    res = snf(g.relations)
    diag = res.diagonal()
    tor_idx = [i for i, x in enumerate(diag) if x > 1]
    free_idx = [i for i in range(g.generators) if i >= len(diag) or diag[i] == 0]
    group = FgAbGroup(len(free_idx), tuple(diag[i] for i in tor_idx))
    rows = [res.u.entries[i] for i in free_idx] + [res.u.entries[i] for i in tor_idx]
    if rows:
        matrix = IntMatrix.from_rows(rows)
    else:
        matrix = IntMatrix.zeros(0, g.generators)
    return group, GroupHom(g, canonical_presentation(group), matrix)


def ext1(a: FgAbGroup, b: FgAbGroup) -> FgAbGroup:
    """Ext^1(a, b): direct sum over torsion factors d of a of coker(d: b -> b).

    >>> str(ext1(FgAbGroup.cyclic(2), FgAbGroup.free(1)))
    'Z/2'
    """
    pb = canonical_presentation(b)
    total = FgAbGroup.trivial()
    for d in a.torsion:
        mult = GroupHom(pb, pb, IntMatrix.diagonal([d] * pb.generators))
        total = direct_sum(total, hom_cokernel(mult))
    return total
