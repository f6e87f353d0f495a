"""From a space's K-theory to its crossed product's, and back.

A homeomorphism of a space X induces automorphisms of K^0(X) and K^1(X);
the crossed-product K-groups are then extensions built from the kernels
and cokernels of (id - automorphism).  The realization direction runs the
other way: pick any target K-theory of the allowed shape (Z^d plus finite
torsion in each degree) and build a model that produces it.
"""

from ktcalc import (
    FgAbGroup,
    IntMatrix,
    PresentedGroup,
    SpaceKModel,
    companion_block,
    pointlike_model,
    pv_compute,
    rank_duality_check,
    realize,
)

# --- the simplest space: K-theory of a point --------------------------------
result = pv_compute(pointlike_model())
print("point-like system:   K_0 =", result.k0, "  K_1 =", result.k1)
# One Z from the functions, one Z from the unitary.

# --- prescribing torsion -----------------------------------------------------
# Target: K_0 = Z^2 + Z/3 and K_1 = Z^2 + Z/4.
model = realize(2, FgAbGroup.cyclic(3), FgAbGroup.cyclic(4))
print("\nrealized model acts on Z^%d (degree 0) and Z^%d (degree 1)"
      % (model.k0.generators, model.k1.generators))
result = pv_compute(model)
print("crossed product:     K_0 =", result.k0, "  K_1 =", result.k1)
print("status:             ", result.k0_ext_status, "/", result.k1_ext_status)
print("rank duality holds: ", rank_duality_check(result))

# The torsion comes from companion blocks: order-n integer matrices whose
# (id - B) has cyclic cokernel Z/n.
b = companion_block(5)
print("\norder-5 companion block on Z^4:")
for row in b.aut.matrix.to_rows():
    print("   ", row)

# --- honesty about extensions ------------------------------------------------
# When the degree-1 kernel has torsion and Ext does not vanish, the middle
# group of the K_0 extension is genuinely undetermined by the machinery;
# the solver says so instead of guessing.
k0 = PresentedGroup.free(1)
k1 = PresentedGroup(1, IntMatrix.from_rows([[2]]))  # K^1(X) = Z/2
tricky = SpaceKModel.of(k0, IntMatrix.identity(1), k1, IntMatrix.identity(1), (1,))
result = pv_compute(tricky)
print("\ntorsion fixed by the action in degree 1:")
print("K_0 status:", result.k0_ext_status,
      "| ends: 0 ->", result.k0_sub, "-> K_0 ->", result.k0_quot, "-> 0")
print("K_1 =", result.k1, "remains", result.k1_ext_status)
