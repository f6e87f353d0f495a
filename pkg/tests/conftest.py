"""Shared test helpers: independent oracles and matrix generators.

The oracles here deliberately avoid every reduction routine in the
package: invariant factors come from minor gcds, Hermite forms from a
naive textbook elimination, kernels from box enumeration.  Expected
values in the tests were computed with these (or frozen from them), so
agreement with the package is evidence, not circularity.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product
from math import gcd

from ktcalc.zmatrix import IntMatrix


def minors_det(grid) -> int:
    """Determinant by cofactor expansion on plain lists (small inputs only)."""
    n = len(grid)
    if n == 0:
        return 1
    if n == 1:
        return grid[0][0]
    total = 0
    for j in range(n):
        if grid[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in grid[1:]]
        sign = -1 if j % 2 else 1
        total += sign * grid[0][j] * minors_det(minor)
    return total


def minor_gcd_invariant_factors(m: IntMatrix) -> list:
    """Invariant factors via gcds of k x k minors: d_k = g_k / g_(k-1).

    Independent of any elimination code; exponential, so keep inputs small.
    """
    grid = m.to_rows()
    factors = []
    prev = 1
    for k in range(1, min(m.rows, m.cols) + 1):
        g = 0
        for rows in combinations(range(m.rows), k):
            for cols in combinations(range(m.cols), k):
                sub = [[grid[i][j] for j in cols] for i in rows]
                g = gcd(g, minors_det(sub))
        if g == 0:
            break
        factors.append(g // prev)
        prev = g
    return factors


def naive_row_hermite(m: IntMatrix) -> list:
    """Textbook row Hermite form on plain lists (no transform tracked)."""
    a = m.to_rows()
    rows, cols = m.rows, m.cols
    pr = 0
    for col in range(cols):
        if pr == rows:
            break
        while True:
            nz = [i for i in range(pr, rows) if a[i][col] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(a[i][col]))
            a[pr], a[i0] = a[i0], a[pr]
            changed = False
            for i in range(pr + 1, rows):
                if a[i][col]:
                    q = a[i][col] // a[pr][col]
                    a[i] = [x - q * y for x, y in zip(a[i], a[pr])]
                    if a[i][col]:
                        changed = True
            if not changed:
                break
        if pr < rows and a[pr][col] != 0:
            if a[pr][col] < 0:
                a[pr] = [-x for x in a[pr]]
            for i in range(pr):
                q = a[i][col] // a[pr][col]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[pr])]
            pr += 1
    return a


def box_kernel_vectors(m: IntMatrix, radius: int) -> set:
    """All kernel vectors with coordinates in [-radius, radius], by search."""
    found = set()
    for vec in product(range(-radius, radius + 1), repeat=m.cols):
        if all(x == 0 for x in m.apply(vec)):
            found.add(vec)
    return found


def rational_rank(m: IntMatrix) -> int:
    """Rank over Q by plain fraction elimination (independent of the package)."""
    a = [[Fraction(x) for x in row] for row in m.entries]
    rank = 0
    for col in range(m.cols):
        pivot = next((i for i in range(rank, m.rows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        for i in range(rank + 1, m.rows):
            f = a[i][col] / a[rank][col]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def random_unimodular(rng: random.Random, n: int, steps: int = 12) -> IntMatrix:
    """Product of random elementary matrices (det +-1 by construction)."""
    a = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        kind = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if kind == 0 and i != j:
            a[i], a[j] = a[j], a[i]
        elif kind == 1:
            a[i] = [-x for x in a[i]]
        elif i != j:
            c = rng.randint(-3, 3)
            a[i] = [x + c * y for x, y in zip(a[i], a[j])]
    return IntMatrix(n, n, a)


def random_matrix(rng: random.Random, rows: int, cols: int, bound: int) -> IntMatrix:
    return IntMatrix(rows, cols,
                     [[rng.randint(-bound, bound) for _ in range(cols)]
                      for _ in range(rows)])
