"""Exact K-theory and Elliott-invariant computations for crossed products
by minimal homeomorphisms and their orbit-breaking subalgebras.

Everything is exact integer/rational arithmetic.  The layers, bottom up:

* :mod:`ktcalc.zmatrix`  - integer matrices, Smith/Hermite forms, kernels
* :mod:`ktcalc.fgab`     - finitely generated abelian groups and homs
* :mod:`ktcalc.pv`       - crossed-product K-theory from a space model
* :mod:`ktcalc.realize`  - models realizing prescribed K-theory
* :mod:`ktcalc.obk`      - the orbit-breaking six-term sequence
* :mod:`ktcalc.dimgroup` - stationary dimension groups
* :mod:`ktcalc.elliott`  - Elliott invariants: cones, units, pairings
* :mod:`ktcalc.oracle`   - independent brute-force cokernel oracle
* :mod:`ktcalc.verify`   - randomized and exhaustive verification sweeps
* :mod:`ktcalc.jsonio`   - JSON transport with decimal-string integers
* :mod:`ktcalc.cli`      - the ``ktcalc`` command
"""

from .errors import InputError
from .fgab import FgAbGroup, GroupHom, PresentedGroup, direct_sum, iso_check, normalize
from .pv import CrossedProductK, SpaceKModel, pv_compute, rank_duality_check
from .realize import companion_block, free_block, pointlike_model, realize, suspend
from .obk import OrbitBreakK, solve_point, solve_pointlike, solve_rr0
from .dimgroup import DgElement, DimensionGroup, positivity, state_value, underlying
from .elliott import ElliottData, build_pointlike_invariant, invariant_equal, pairing_eval
from .zmatrix import IntMatrix, SnfResult, cokernel, hnf, kernel_basis, rank, snf

__version__ = "0.1.0"

__all__ = [
    "InputError",
    "IntMatrix", "SnfResult", "snf", "hnf", "kernel_basis", "cokernel", "rank",
    "FgAbGroup", "PresentedGroup", "GroupHom", "normalize", "direct_sum", "iso_check",
    "SpaceKModel", "CrossedProductK", "pv_compute", "rank_duality_check",
    "companion_block", "free_block", "suspend", "realize", "pointlike_model",
    "OrbitBreakK", "solve_point", "solve_pointlike", "solve_rr0",
    "DimensionGroup", "DgElement", "positivity", "underlying", "state_value",
    "ElliottData", "build_pointlike_invariant", "pairing_eval", "invariant_equal",
    "__version__",
]
