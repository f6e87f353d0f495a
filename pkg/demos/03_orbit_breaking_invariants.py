"""Orbit-breaking subalgebras and their Elliott invariants.

Breaking one orbit of a minimal system at a closed set Y produces a
subalgebra whose K-theory mixes the space data K^*(Y) into the crossed
product's.  Over a point-like base this realizes any finitely presented
pair (G0, G1) as (Z + G0, G1) with a completely explicit positive cone.
"""

from ktcalc import (
    FgAbGroup,
    build_pointlike_invariant,
    invariant_equal,
    pairing_eval,
    solve_point,
    solve_pointlike,
)
from ktcalc.elliott import cone_contains, projectionless_check
from ktcalc.fgab import iso_check
from ktcalc.pv import CrossedProductK

Z = FgAbGroup.free(1)

# --- breaking at a single point ----------------------------------------------
# Over a Cantor-like ambient (K_0 = G0, K_1 = Z), breaking at one point
# kills K_1 entirely: the result has the K-theory of an approximately
# finite-dimensional algebra.
ambient = CrossedProductK.from_groups(FgAbGroup(0, (2, 4)), Z)
broken = solve_point(ambient)
print("ambient K-theory: (", ambient.k0, ",", ambient.k1, ")")
print("after breaking:   (", broken.k0, ",", broken.k1, ")")
print("K_0 preserved:", iso_check(broken.k0, ambient.k0))
print()

# --- the point-like regime ---------------------------------------------------
result = solve_pointlike(FgAbGroup.cyclic(3), FgAbGroup.cyclic(5))
print("point-like regime with G0 = Z/3, G1 = Z/5:")
print("K_0 =", result.k0, " unit =", result.unit, " K_1 =", result.k1)
print("derivation:")
for step in result.derivation:
    print("   -", step.text)
print()

# The positive cone is executable: strictly positive first coordinate, or 0.
cone, group = result.cone, result.k0
for v in [(0, 0), (1, 2), (0, 1), (-1, 0), (0, 3)]:
    print(f"  {v} in cone: {cone_contains(cone, group, v)}")
print()

# --- two routes to the same invariant -----------------------------------------
# G0 = G1 = 0 gives the invariant of the Jiang-Su algebra; building it by
# hand must agree with the orbit-breaking computation.
via_orbit = solve_pointlike(FgAbGroup.trivial(), FgAbGroup.trivial()).to_elliott()
by_hand = build_pointlike_invariant(FgAbGroup.trivial(), FgAbGroup.trivial(), 1, 1)
print("two routes agree:", invariant_equal(via_orbit, by_hand))
print("projectionless:  ", projectionless_check(by_hand))

# Scaling the unit to (k, 0) rescales the pairing to n/k and creates
# projections as soon as k >= 2.
scaled = build_pointlike_invariant(FgAbGroup.cyclic(3), FgAbGroup.trivial(), 2, 1)
print("unit (2,0): pairing of (3, g) =", pairing_eval(scaled, (3, 1)),
      "| projectionless:", projectionless_check(scaled))
