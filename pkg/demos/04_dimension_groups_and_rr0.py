"""Stationary dimension groups and the real-rank-zero regime.

A primitive integer matrix A presents the inductive limit
Z^k -A-> Z^k -A-> ... whose order and unique state are decided exactly by
iterating A.  The real-rank-zero orbit-breaking computation glues such a
group (from a Cantor base) to an infinitesimal torsion summand.
"""

from fractions import Fraction

from ktcalc import (
    DgElement,
    DimensionGroup,
    FgAbGroup,
    IntMatrix,
    pairing_eval,
    positivity,
    solve_rr0,
    state_value,
    underlying,
)
from ktcalc.elliott import cone_contains

# The golden-mean group: step [[1,1],[1,0]], order unit (1,1).
golden = DimensionGroup(2, IntMatrix.from_rows([[1, 1], [1, 0]]), (1, 1))
print("step is primitive; first positive power:", golden.positive_power)
print("underlying group:", underlying(golden).group)

# Positivity = eventual entrywise positivity of iterates.
for vec in [(1, 1), (1, -1), (-5, 8), (0, 0)]:
    print(f"positivity{vec}:", positivity(golden, DgElement(0, vec), 25))

# The state brackets are exact rationals (Fibonacci ratios here), nested
# as the depth grows, converging to an irrational limit.
x = DgElement(0, (1, 0))
for depth in (5, 10, 20):
    lo, hi = state_value(golden, x, depth)
    print(f"state((1,0)) depth {depth:2d}: [{lo}, {hi}]  width {float(hi - lo):.2e}")
print("limit is 1/phi = 0.6180339887...")
print()

# Contrast: a non-unimodular step gives a group that is not finitely
# generated (the dyadic rationals), and the library says so.
dyadic = DimensionGroup(1, IntMatrix.from_rows([[2]]), (1,))
print("step [2] finitely generated?", underlying(dyadic).finitely_generated)
print()

# --- the real-rank-zero orbit-breaking computation ----------------------------
result = solve_rr0(FgAbGroup.cyclic(2), golden, FgAbGroup.cyclic(3))
print("K_0 =", result.k0, " unit =", result.unit, " K_1 =", result.k1)
print("cone tag:", result.cone.tag)

# The Z/2 summand is infinitesimal: invisible to the state, outside the cone.
invariant = result.to_elliott()
print("pairing(unit)       =", pairing_eval(invariant, result.unit))
print("pairing(torsion)    =", pairing_eval(invariant, (0, 0, 1)))
print("torsion in cone?    ", cone_contains(result.cone, result.k0, (0, 0, 1)))
print("unit + torsion in cone?", cone_contains(result.cone, result.k0, (1, 1, 1)))
assert pairing_eval(invariant, result.unit) == Fraction(1)
