"""Orbit-breaking six-term solver: the three regimes and the audit trail."""

import pytest

from ktcalc.dimgroup import DimensionGroup
from ktcalc.elliott import (
    OrderFromQuotient,
    SimpleCone,
    StateOfDimGroup,
    UnknownCone,
    cone_contains,
    pairing_eval,
)
from ktcalc.errors import InputError
from ktcalc.fgab import FgAbGroup, GroupHom, PresentedGroup, direct_sum, iso_check
from ktcalc.obk import (
    OrbitBreakProblem,
    audit,
    boundary_compat,
    solve,
    solve_point,
    solve_pointlike,
    solve_rr0,
)
from ktcalc.pv import CrossedProductK, pv_compute
from ktcalc.realize import pointlike_model
from ktcalc.verify import SMALL_GROUP_CATALOG
from ktcalc.zmatrix import IntMatrix

Z = FgAbGroup.free(1)
TRIVIAL = FgAbGroup.trivial()


def golden():
    return DimensionGroup(2, IntMatrix.from_rows([[1, 1], [1, 0]]), (1, 1))


class TestSolvePoint:
    def test_cantor_like_ambient(self):
        ambient = CrossedProductK.from_groups(FgAbGroup(2, (2,)), Z)
        result = solve_point(ambient)
        assert iso_check(result.k0, ambient.k0)
        assert result.k1 == TRIVIAL
        assert isinstance(result.cone, UnknownCone)

    def test_pointlike_ambient(self):
        ambient = CrossedProductK.from_groups(Z, Z)
        result = solve_point(ambient)
        assert result.k0 == Z and result.k1 == TRIVIAL

    def test_derivation_records_the_boundary_isomorphism(self):
        result = solve_point(CrossedProductK.from_groups(Z, Z))
        texts = [s.text for s in result.derivation]
        assert any("K^0({y})" in t and "isomorphism" in t for t in texts)

    def test_catalog(self):
        for g0 in SMALL_GROUP_CATALOG:
            ambient = CrossedProductK.from_groups(g0, Z)
            result = solve_point(ambient)
            assert iso_check(result.k0, g0)
            assert result.k1 == TRIVIAL

    def test_rejects_wrong_k1(self):
        with pytest.raises(InputError, match="K_1"):
            solve_point(CrossedProductK.from_groups(Z, FgAbGroup.free(2)))
        with pytest.raises(InputError, match="K_1"):
            solve_point(CrossedProductK.from_groups(Z, FgAbGroup(1, (2,))))

    def test_accepts_real_pv_output(self):
        result = solve_point(pv_compute(pointlike_model()))
        assert result.k0 == Z and result.k1 == TRIVIAL


class TestSolvePointlike:
    def test_jiang_su_case(self):
        result = solve_pointlike(TRIVIAL, TRIVIAL)
        assert result.k0 == Z
        assert result.cone == SimpleCone()
        assert result.unit == (1,)
        assert result.k1 == TRIVIAL

    def test_torsion_case(self):
        result = solve_pointlike(FgAbGroup.cyclic(3), FgAbGroup.cyclic(5))
        assert result.k0 == FgAbGroup(1, (3,))
        assert result.cone == SimpleCone()
        assert result.unit == (1, 0)
        assert result.k1 == FgAbGroup.cyclic(5)

    def test_derivation_mentions_projection_formula(self):
        result = solve_pointlike(FgAbGroup.cyclic(3), TRIVIAL)
        assert any("(n, y) -> n" in s.text for s in result.derivation)
        assert any("L(n) = (n, 0)" in s.text for s in result.derivation)

    def test_catalog_shapes(self):
        for g0 in SMALL_GROUP_CATALOG:
            for g1 in SMALL_GROUP_CATALOG:
                result = solve_pointlike(g0, g1)
                assert result.k0 == direct_sum(Z, g0)
                assert result.k1 == g1
                assert result.unit == tuple(1 if i == 0 else 0
                                            for i in range(result.k0.element_length))
                audit(result)

    def test_quotient_by_unit_and_torsion_reproduces_g0(self):
        # killing the unit's Z and keeping torsion gives g0 back
        for g0 in SMALL_GROUP_CATALOG:
            result = solve_pointlike(g0, TRIVIAL)
            stripped = FgAbGroup(result.k0.free_rank - 1, result.k0.torsion)
            assert stripped == g0

    def test_cone_membership_executable(self):
        result = solve_pointlike(FgAbGroup.cyclic(4), TRIVIAL)
        assert cone_contains(result.cone, result.k0, (1, 3)) is True
        assert cone_contains(result.cone, result.k0, (0, 1)) is False
        assert cone_contains(result.cone, result.k0, (0, 4)) is True

    def test_free_g0(self):
        result = solve_pointlike(FgAbGroup.free(2), FgAbGroup.free(1))
        assert result.k0 == FgAbGroup.free(3)
        assert result.unit == (1, 0, 0)
        audit(result)

    def test_extreme_points_carried(self):
        result = solve_pointlike(TRIVIAL, TRIVIAL, extreme_points=4)
        assert result.trace_extreme_points == 4
        assert result.to_elliott().trace_extreme_points == 4


class TestSolveRr0:
    def test_golden_mean_case(self):
        result = solve_rr0(FgAbGroup.cyclic(2), golden(), FgAbGroup.cyclic(3))
        assert result.k0 == FgAbGroup(2, (2,))
        assert isinstance(result.cone, OrderFromQuotient)
        assert result.unit == (1, 1, 0)
        assert result.k1 == FgAbGroup.cyclic(3)

    def test_trivial_torsion(self):
        result = solve_rr0(TRIVIAL, golden(), TRIVIAL)
        assert result.k0 == FgAbGroup.free(2)
        assert result.k1 == TRIVIAL
        assert result.unit == (1, 1)

    def test_unit_maps_to_dimension_group_unit(self):
        g0 = golden()
        result = solve_rr0(FgAbGroup.cyclic(2), g0, TRIVIAL)
        assert result.unit[: g0.k] == g0.unit
        assert all(x == 0 for x in result.unit[g0.k:])

    def test_torsion_is_infinitesimal(self):
        result = solve_rr0(FgAbGroup.cyclic(2), golden(), FgAbGroup.cyclic(3))
        inv = result.to_elliott()
        assert isinstance(inv.pairing, StateOfDimGroup)
        assert pairing_eval(inv, (0, 0, 1)) == 0
        assert pairing_eval(inv, result.unit) == 1
        assert cone_contains(result.cone, result.k0, (0, 0, 1)) is False

    def test_ses_recorded(self):
        result = solve_rr0(FgAbGroup.cyclic(2), golden(), TRIVIAL)
        ses = [s for s in result.derivation if s.kind == "ses"]
        assert len(ses) == 1
        sub, mid, quot = ses[0].groups
        assert sub == FgAbGroup.cyclic(2)
        assert mid == result.k0
        assert quot == FgAbGroup.free(2)

    def test_free_torsion_summand(self):
        # T = Z is allowed: it lands in the infinitesimals.
        result = solve_rr0(Z, golden(), TRIVIAL)
        assert result.k0 == FgAbGroup.free(3)
        assert cone_contains(result.cone, result.k0, (0, 0, 5)) is False
        assert cone_contains(result.cone, result.k0, (1, 1, -7)) is True

    def test_rejects_non_unimodular_step(self):
        dyadic = DimensionGroup(1, IntMatrix.from_rows([[2]]), (1,))
        with pytest.raises(InputError, match="unimodular"):
            solve_rr0(TRIVIAL, dyadic, TRIVIAL)


class TestBoundaryCompat:
    def test_identity_restriction(self):
        p = PresentedGroup.free(1)
        d_pv = GroupHom(p, p, IntMatrix.from_rows([[-1]]))
        j_star = GroupHom(p, p, IntMatrix.identity(1))
        combined = boundary_compat(d_pv, j_star)
        assert combined.matrix == d_pv.matrix

    def test_zero_boundary(self):
        p = PresentedGroup.free(2)
        d_pv = GroupHom(p, p, IntMatrix.zeros(2, 2))
        j_star = GroupHom(p, p, IntMatrix.from_rows([[1, 2], [0, 1]]))
        assert boundary_compat(d_pv, j_star).matrix.is_zero()

    def test_pointlike_unitary_class(self):
        # boundary sends the unitary's class to -[1]; restriction is unital.
        z = PresentedGroup.free(1)
        d_pv = GroupHom(z, z, IntMatrix.from_rows([[-1]]))
        j_star = GroupHom(z, z, IntMatrix.identity(1))
        assert boundary_compat(d_pv, j_star).apply((1,)) == (-1,)

    def test_rejects_non_composable(self):
        a = PresentedGroup.free(1)
        b = PresentedGroup.free(2)
        d_pv = GroupHom(a, a, IntMatrix.identity(1))
        j_star = GroupHom(b, b, IntMatrix.identity(2))
        with pytest.raises(InputError, match="composable"):
            boundary_compat(d_pv, j_star)


class TestAudit:
    def test_solver_outputs_pass(self):
        audit(solve_pointlike(FgAbGroup.cyclic(6), FgAbGroup.cyclic(2)))
        audit(solve_point(CrossedProductK.from_groups(FgAbGroup(1, (4,)), Z)))
        audit(solve_rr0(FgAbGroup.cyclic(2), golden(), FgAbGroup.cyclic(3)))

    def test_detects_broken_six_term(self):
        from ktcalc.obk import DerivationStep, OrbitBreakK

        bad = OrbitBreakK(Z, UnknownCone(), None, TRIVIAL, 1, (
            DerivationStep("six-term", "broken",
                           (Z, TRIVIAL, TRIVIAL, TRIVIAL, TRIVIAL, TRIVIAL)),
        ))
        with pytest.raises(InputError, match="alternating"):
            audit(bad)

    def test_detects_broken_ses(self):
        from ktcalc.obk import DerivationStep, OrbitBreakK

        bad = OrbitBreakK(Z, UnknownCone(), None, TRIVIAL, 1, (
            DerivationStep("ses", "broken",
                           (FgAbGroup.cyclic(2), FgAbGroup.cyclic(2), FgAbGroup.cyclic(2))),
        ))
        with pytest.raises(InputError):
            audit(bad)


class TestProblemDispatch:
    def test_point(self):
        problem = OrbitBreakProblem(regime="point",
                                    ambient=CrossedProductK.from_groups(Z, Z))
        assert solve(problem).k0 == Z

    def test_pointlike(self):
        problem = OrbitBreakProblem(regime="pointlike", g0=TRIVIAL, g1=TRIVIAL)
        assert solve(problem).k0 == Z

    def test_rr0(self):
        problem = OrbitBreakProblem(regime="rr0", t=TRIVIAL,
                                    dimension_group=golden(), g1=TRIVIAL)
        assert solve(problem).k0 == FgAbGroup.free(2)

    def test_missing_fields(self):
        with pytest.raises(InputError):
            solve(OrbitBreakProblem(regime="pointlike"))
        with pytest.raises(InputError):
            solve(OrbitBreakProblem(regime="bogus"))
