"""Verification sweeps: randomized certificate checks and exhaustive
small-case sweeps, shared by the command-line `verify` command and the
acceptance tests.

Each sweep returns a list of Case records so callers can render a
pass/fail table or assert on the outcome.  Randomized sweeps take a seed
and are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .fgab import FgAbGroup, GroupHom, PresentedGroup, iso_check
from .oracle import det_exact, oracle_cokernel
from .pv import STATUS_SPLIT, SpaceKModel, pv_compute, rank_duality_check
from .realize import companion_matrix, matrix_order, realize
from .zmatrix import IntMatrix, block_diag, cokernel, hnf, kernel_basis, snf

#: Small finite groups used by the realization and orbit-breaking sweeps.
SMALL_GROUP_CATALOG = (
    FgAbGroup.trivial(),
    FgAbGroup.cyclic(2),
    FgAbGroup.cyclic(3),
    FgAbGroup.cyclic(4),
    FgAbGroup.cyclic(6),
    FgAbGroup(0, (2, 2)),
    FgAbGroup(0, (2, 4)),
)


@dataclass(frozen=True)
class Case:
    name: str
    ok: bool
    detail: str = ""


def _poly_multiplicative_order(n: int) -> int | None:
    """Order of multiplication-by-x on Z[x]/(1 + x + ... + x^(n-1)).

    The companion automorphism is exactly this operator in the monomial
    basis, so its matrix order equals the smallest k with x^k = 1.
    Coefficient vectors have length n-1; one step shifts and reduces by
    x^(n-1) = -(1 + x + ... + x^(n-2)).
    """
    size = n - 1
    coeffs = [0] * size
    coeffs[0] = 1  # the polynomial 1
    one = list(coeffs)
    for k in range(1, 2 * n + 1):
        top = coeffs[-1]
        shifted = [0] + coeffs[:-1]
        if top:
            shifted = [c - top for c in shifted]
        coeffs = shifted
        if coeffs == one:
            return k
    return None


def companion_sweep(max_n: int = 64, cross_check_limit: int = 12) -> list:
    """Per-n checks of the companion construction for n in 2..max_n.

    Checks ker(id - B) = 0, coker(id - B) = Z/n, and that B has order
    exactly n.  The order is computed on the polynomial module the matrix
    acts by, and cross-checked against direct matrix powering for
    n <= cross_check_limit.
    """
    cases = []
    for n in range(2, max_n + 1):
        b = companion_matrix(n)
        one_minus = IntMatrix.identity(n - 1) - b
        problems = []
        if kernel_basis(one_minus).cols != 0:
            problems.append("ker(id - B) != 0")
        if not iso_check(cokernel(one_minus), FgAbGroup.cyclic(n)):
            problems.append(f"coker(id - B) != Z/{n}")
        order = _poly_multiplicative_order(n)
        if order != n:
            problems.append(f"operator order {order} != {n}")
        if n <= cross_check_limit and matrix_order(b, n + 1) != n:
            problems.append("matrix powering disagrees with the polynomial order")
        cases.append(Case(f"companion n={n}", not problems, "; ".join(problems)))
    return cases


def _random_matrix(rng: random.Random, rows: int, cols: int, bound: int) -> IntMatrix:
    return IntMatrix(rows, cols,
                     [[rng.randint(-bound, bound) for _ in range(cols)]
                      for _ in range(rows)])


def snf_certificates(count: int = 1000, max_dim: int = 8, entry_bound: int = 20,
                     seed: int = 20260809) -> list:
    """Random matrices: certify u @ m @ v == d, unimodularity, divisibility."""
    rng = random.Random(seed)
    cases = []
    for i in range(count):
        rows = rng.randint(1, max_dim)
        cols = rng.randint(1, max_dim)
        m = _random_matrix(rng, rows, cols, entry_bound)
        res = snf(m)
        problems = []
        if res.u @ m @ res.v != res.d:
            problems.append("u @ m @ v != d")
        if abs(det_exact(res.u)) != 1:
            problems.append("u is not unimodular")
        if abs(det_exact(res.v)) != 1:
            problems.append("v is not unimodular")
        diag = res.diagonal()
        if any(x < 0 for x in diag):
            problems.append("negative diagonal entry")
        for a, b in zip(diag, diag[1:]):
            if a == 0 and b != 0:
                problems.append("zero before nonzero on the diagonal")
            elif a != 0 and b % a:
                problems.append("divisibility chain broken")
        off = any(res.d[r, c] != 0
                  for r in range(res.d.rows) for c in range(res.d.cols) if r != c)
        if off:
            problems.append("off-diagonal entry in d")
        cases.append(Case(f"snf #{i} ({rows}x{cols})", not problems, "; ".join(problems)))
    return cases


def oracle_equivalence(count: int = 200, det_bound: int = 512, max_dim: int = 5,
                       entry_bound: int = 3, seed: int = 20260809) -> list:
    """Reduction path vs. enumeration oracle on random nonsingular matrices."""
    rng = random.Random(seed)
    cases = []
    for i in range(count):
        while True:
            dim = rng.randint(1, max_dim)
            m = _random_matrix(rng, dim, dim, entry_bound)
            d = abs(det_exact(m))
            if 1 <= d <= det_bound:
                break
        via_snf = cokernel(m)
        via_enum = oracle_cokernel(m, bound=det_bound)
        ok = iso_check(via_snf, via_enum)
        detail = "" if ok else f"snf path {via_snf} vs enumeration {via_enum} (|det|={d})"
        cases.append(Case(f"cokernel oracle #{i} ({dim}x{dim}, |det|={d})", ok, detail))
    return cases


def realization_roundtrip(dims=(1, 2, 3), catalog=SMALL_GROUP_CATALOG) -> list:
    """pv(realize(d, f0, f1)) must give exactly (Z^d + f0, Z^d + f1), split."""
    from .fgab import direct_sum

    cases = []
    for d in dims:
        for f0 in catalog:
            for f1 in catalog:
                result = pv_compute(realize(d, f0, f1))
                want0 = direct_sum(FgAbGroup.free(d), f0)
                want1 = direct_sum(FgAbGroup.free(d), f1)
                problems = []
                if not iso_check(result.k0, want0):
                    problems.append(f"K_0 = {result.k0}, wanted {want0}")
                if not iso_check(result.k1, want1):
                    problems.append(f"K_1 = {result.k1}, wanted {want1}")
                if result.k0_ext_status != STATUS_SPLIT or result.k1_ext_status != STATUS_SPLIT:
                    problems.append("extension not split-forced")
                cases.append(Case(f"roundtrip d={d}, f0={f0}, f1={f1}",
                                  not problems, "; ".join(problems)))
    return cases


def _random_permutation_matrix(rng: random.Random, size: int) -> IntMatrix:
    perm = list(range(size))
    rng.shuffle(perm)
    return IntMatrix(size, size,
                     [[1 if j == perm[i] else 0 for j in range(size)]
                      for i in range(size)])


def _random_finite_order_blocks(rng: random.Random, max_blocks: int) -> list:
    blocks = []
    for _ in range(rng.randint(0, max_blocks)):
        if rng.random() < 0.5:
            blocks.append(companion_matrix(rng.randint(2, 6)))
        else:
            blocks.append(_random_permutation_matrix(rng, rng.randint(1, 4)))
    return blocks


def random_model(rng: random.Random) -> SpaceKModel:
    """Random valid model: identity block carrying the unit plus random
    permutation/companion blocks in each degree."""
    d = rng.randint(1, 3)
    aut0 = block_diag([IntMatrix.identity(d)] + _random_finite_order_blocks(rng, 2))
    aut1 = block_diag(_random_finite_order_blocks(rng, 2))
    k0 = PresentedGroup.free(aut0.rows)
    k1 = PresentedGroup.free(aut1.rows)
    unit = tuple(1 if i == 0 else 0 for i in range(aut0.rows))
    return SpaceKModel(k0, k1, GroupHom(k0, k0, aut0), GroupHom(k1, k1, aut1), unit)


def rank_duality(count: int = 500, seed: int = 20260809) -> list:
    """Random finite-order models: split results satisfy rank duality."""
    rng = random.Random(seed)
    cases = []
    for i in range(count):
        model = random_model(rng)
        result = pv_compute(model)
        if result.is_ambiguous:
            cases.append(Case(f"duality #{i}", True, "skipped: ambiguous extension"))
            continue
        ok = rank_duality_check(result)
        detail = "" if ok else f"ranks {result.k0.free_rank} vs {result.k1.free_rank}"
        cases.append(Case(f"duality #{i} (K_0 = {result.k0}, K_1 = {result.k1})", ok, detail))
    return cases


SUITES = {
    "companion": companion_sweep,
    "snf": snf_certificates,
    "oracle": oracle_equivalence,
    "roundtrip": realization_roundtrip,
    "duality": rank_duality,
}


def hnf_certificates(count: int = 200, max_dim: int = 6, entry_bound: int = 12,
                     seed: int = 20260809) -> list:
    """Random matrices: h == u @ m, u unimodular, Hermite shape."""
    rng = random.Random(seed)
    cases = []
    for i in range(count):
        rows = rng.randint(1, max_dim)
        cols = rng.randint(1, max_dim)
        m = _random_matrix(rng, rows, cols, entry_bound)
        h, u = hnf(m)
        problems = []
        if u @ m != h:
            problems.append("h != u @ m")
        if abs(det_exact(u)) != 1:
            problems.append("u is not unimodular")
        last_pivot_col = -1
        seen_zero_row = False
        for r in range(h.rows):
            pc = next((j for j, x in enumerate(h.entries[r]) if x != 0), None)
            if pc is None:
                seen_zero_row = True
                continue
            if seen_zero_row:
                problems.append("nonzero row below a zero row")
            if pc <= last_pivot_col:
                problems.append("pivot columns not strictly increasing")
            if h[r, pc] <= 0:
                problems.append("non-positive pivot")
            if any(not 0 <= h[above, pc] < h[r, pc] for above in range(r)):
                problems.append("entry above pivot not reduced")
            last_pivot_col = pc
        cases.append(Case(f"hnf #{i} ({rows}x{cols})", not problems, "; ".join(problems)))
    return cases


SUITES["hnf"] = hnf_certificates


def run_suite(name: str, **kwargs) -> list:
    if name == "all":
        cases = []
        for suite_name, fn in SUITES.items():
            for case in fn():
                cases.append(Case(f"{suite_name}: {case.name}", case.ok, case.detail))
        return cases
    if name not in SUITES:
        from .errors import InputError
        raise InputError(f"unknown verify suite {name!r}; pick from "
                         f"{', '.join(sorted(SUITES))} or all")
    return SUITES[name](**kwargs)
