"""Independent brute-force cokernel oracle.

Everything here is implemented from scratch on plain lists and fractions,
sharing no code with the reduction-based paths in :mod:`ktcalc.zmatrix`.
Agreement between the two is therefore evidence of correctness rather
than a tautology.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import InputError
from .fgab import FgAbGroup, enumeration_bound
from .zmatrix import IntMatrix


def det_exact(m: IntMatrix) -> int:
    """Determinant by exact rational Gaussian elimination."""
    if m.rows != m.cols:
        raise InputError("determinant requires a square matrix")
    n = m.rows
    a = [[Fraction(x) for x in row] for row in m.entries]
    result = Fraction(1)
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            result = -result
        pivot = a[k][k]
        result *= pivot
        for i in range(k + 1, n):
            factor = a[i][k] / pivot
            if factor:
                for j in range(k, n):
                    a[i][j] -= factor * a[k][j]
    if result.denominator != 1:
        raise AssertionError("integer determinant came out non-integral")
    return int(result)


def rank_rational(m: IntMatrix) -> int:
    """Rank over the rationals by exact Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in m.entries]
    rank = 0
    col = 0
    while rank < m.rows and col < m.cols:
        pivot_row = next((i for i in range(rank, m.rows) if a[i][col] != 0), None)
        if pivot_row is None:
            col += 1
            continue
        a[rank], a[pivot_row] = a[pivot_row], a[rank]
        pivot = a[rank][col]
        for i in range(rank + 1, m.rows):
            factor = a[i][col] / pivot
            if factor:
                for j in range(col, m.cols):
                    a[i][j] -= factor * a[rank][j]
        rank += 1
        col += 1
    return rank


def _adjugate(m: IntMatrix) -> list:
    """Adjugate by cofactor expansion; adj(m) @ m == det(m) * I."""
    n = m.rows
    if n == 0:
        return []
    if n == 1:
        return [[1]]
    grid = m.to_rows()
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(grid) if k != i]
            cof = det_exact(IntMatrix.from_rows(minor))
            if (i + j) % 2:
                cof = -cof
            adj[j][i] = cof  # transpose of the cofactor matrix
    return adj


def _factorize(n: int) -> dict:
    """Prime factorization by trial division (inputs stay below the enum bound)."""
    factors: dict = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def _invariant_factors_from_orders(orders: dict, total: int) -> list:
    """Rebuild the invariant-factor chain from an element-order census.

    For each prime p, the count of elements killed by p^j determines the
    partition of p-exponents; the chains are then merged largest-first.
    """
    exponents_by_prime = {}
    for p, emax in _factorize(total).items():
        counts = []
        for j in range(emax + 1):
            killed = sum(cnt for order, cnt in orders.items() if (p**j) % order == 0)
            a_j = 0
            while killed > 1:
                if killed % p:
                    raise AssertionError("order census is not a p-group filtration")
                killed //= p
                a_j += 1
            counts.append(a_j)
        # counts[j] - counts[j-1] = number of cyclic p-factors of exponent >= j,
        # so the exponent multiset is the conjugate partition of those gaps.
        ge = [counts[j] - counts[j - 1] for j in range(1, emax + 1)] + [0]
        exps = []
        for j in range(1, emax + 1):
            exps.extend([j] * (ge[j - 1] - ge[j]))
        exponents_by_prime[p] = sorted(exps, reverse=True)
    depth = max((len(v) for v in exponents_by_prime.values()), default=0)
    factors = []
    for t in range(depth):
        f = 1
        for p, exps in exponents_by_prime.items():
            if t < len(exps):
                f *= p ** exps[t]
        factors.append(f)
    return sorted(f for f in factors if f > 1)


def oracle_cokernel(m: IntMatrix, bound: int | None = None) -> FgAbGroup:
    """Cokernel of a nonsingular square matrix by exhaustive coset search.

    Each coset of the column lattice is keyed by the fractional part of
    the rational solve adj(m) @ x / det, so representatives live in one
    fundamental box.  Closing the generator set under addition enumerates
    every coset; invariant factors are then rebuilt from the element-order
    census.  No smith/hermite code is used anywhere on this path.

    >>> str(oracle_cokernel(IntMatrix.diagonal([2, 3])))
    'Z/6'
    """
    if bound is None:
        bound = enumeration_bound()
    if m.rows != m.cols:
        raise InputError("the enumeration oracle handles square matrices only")
    n = m.rows
    if n == 0:
        return FgAbGroup.trivial()
    d = abs(det_exact(m))
    if d == 0:
        raise InputError("cokernel is infinite: matrix is singular over the rationals")
    if d > bound:
        raise InputError(f"cokernel order {d} exceeds enumeration bound {bound}")
    adj = _adjugate(m)

    def key(vec):
        return tuple(sum(adj[i][j] * vec[j] for j in range(n)) % d for i in range(n))

    generators = [key([1 if j == i else 0 for j in range(n)]) for i in range(n)]
    zero = tuple([0] * n)
    seen = {zero}
    frontier = [zero]
    while frontier:
        current = frontier.pop()
        for g in generators:
            nxt = tuple((a + b) % d for a, b in zip(current, g))
            if nxt not in seen:
                if len(seen) >= bound:
                    raise InputError(f"coset enumeration exceeded bound {bound}")
                seen.add(nxt)
                frontier.append(nxt)
    if len(seen) != d:
        raise AssertionError(f"enumerated {len(seen)} cosets, expected {d}")

    orders: dict = {}
    for el in seen:
        o = lcm(*[d // gcd(d, x) for x in el]) if n else 1
        orders[o] = orders.get(o, 0) + 1
    factors = _invariant_factors_from_orders(orders, d)
    return FgAbGroup(0, tuple(factors))
