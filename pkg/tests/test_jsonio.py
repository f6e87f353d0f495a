"""Transport: decimal-string integers, round trips, schema rejection."""

import pytest

from ktcalc import jsonio
from ktcalc.dimgroup import DimensionGroup
from ktcalc.elliott import (
    FirstCoordOverK,
    OrderFromQuotient,
    SimpleCone,
    StateOfDimGroup,
    build_pointlike_invariant,
)
from ktcalc.errors import InputError
from ktcalc.fgab import FgAbGroup, GroupHom, PresentedGroup
from ktcalc.obk import solve_pointlike, solve_rr0
from ktcalc.pv import pv_compute
from ktcalc.realize import realize
from ktcalc.zmatrix import IntMatrix, snf

TRIVIAL = FgAbGroup.trivial()


class TestMatrix:
    def test_round_trip(self):
        m = IntMatrix.from_rows([[1, -2], [3, 4]])
        assert jsonio.decode_matrix(jsonio.encode_matrix(m)) == m

    def test_entries_are_strings(self):
        doc = jsonio.encode_matrix(IntMatrix.from_rows([[10**30]]))
        assert doc["entries"][0][0] == str(10**30)
        assert isinstance(doc["rows"], int)

    def test_huge_integers_survive(self):
        big = 7**120
        m = IntMatrix.from_rows([[big, -big]])
        again = jsonio.decode_matrix(jsonio.loads(jsonio.dumps(jsonio.encode_matrix(m))))
        assert again == m

    def test_accepts_plain_ints(self):
        m = jsonio.decode_matrix({"rows": 1, "cols": 2, "entries": [[1, "2"]]})
        assert m == IntMatrix.from_rows([[1, 2]])

    def test_rejects_malformed(self):
        with pytest.raises(InputError):
            jsonio.decode_matrix({"rows": 2, "cols": 1, "entries": [["1"]]})
        with pytest.raises(InputError):
            jsonio.decode_matrix({"rows": 1, "cols": 1, "entries": [["x"]]})
        with pytest.raises(InputError):
            jsonio.decode_matrix([1, 2])
        with pytest.raises(InputError):
            jsonio.decode_matrix({"rows": 1, "cols": 1, "entries": [[True]]})


class TestGroups:
    def test_round_trip(self):
        g = FgAbGroup(2, (2, 6))
        assert jsonio.decode_group(jsonio.encode_group(g)) == g

    def test_rejects_bad_chain(self):
        with pytest.raises(InputError):
            jsonio.decode_group({"free_rank": 0, "torsion": ["4", "2"]})

    def test_presentation_and_hom(self):
        p = PresentedGroup(2, IntMatrix.diagonal([2, 3]))
        h = GroupHom(p, p, IntMatrix.identity(2))
        assert jsonio.decode_presentation(jsonio.encode_presentation(p)) == p
        assert jsonio.decode_hom(jsonio.encode_hom(h)) == h


class TestModelAndResults:
    def test_model_round_trip(self):
        model = realize(2, FgAbGroup.cyclic(3), FgAbGroup.cyclic(2))
        again = jsonio.decode_model(jsonio.encode_model(model))
        assert again == model

    def test_crossed_product_round_trip(self):
        result = pv_compute(realize(1, FgAbGroup.cyclic(4), TRIVIAL))
        doc = jsonio.encode_crossed_product(result)
        assert jsonio.decode_crossed_product(doc) == result

    def test_minimal_ambient_accepted(self):
        r = jsonio.decode_crossed_product({
            "k0": {"free_rank": 0, "torsion": ["2"]},
            "k1": {"free_rank": 1, "torsion": []},
        })
        assert r.k0 == FgAbGroup.cyclic(2)
        assert r.k1 == FgAbGroup.free(1)

    def test_rejects_bad_status(self):
        with pytest.raises(InputError):
            jsonio.decode_crossed_product({
                "k0": {"free_rank": 0, "torsion": []},
                "k1": {"free_rank": 1, "torsion": []},
                "k0_ext_status": "maybe",
                "k1_ext_status": "split-forced",
                "k0_sub": {"free_rank": 0, "torsion": []},
                "k0_quot": {"free_rank": 0, "torsion": []},
                "k1_sub": {"free_rank": 0, "torsion": []},
                "k1_quot": {"free_rank": 0, "torsion": []},
            })


class TestDimensionGroupAndInvariants:
    def test_dimension_group_round_trip(self):
        g = DimensionGroup(2, IntMatrix.from_rows([[1, 1], [1, 0]]), (1, 1))
        assert jsonio.decode_dimension_group(jsonio.encode_dimension_group(g)) == g

    def test_invariant_round_trip(self):
        inv = build_pointlike_invariant(FgAbGroup.cyclic(3), FgAbGroup.cyclic(5), 2, 3)
        again = jsonio.decode_invariant(jsonio.loads(jsonio.dumps(jsonio.encode_invariant(inv))))
        assert again == inv

    def test_orbit_break_round_trip_pointlike(self):
        result = solve_pointlike(FgAbGroup.cyclic(3), FgAbGroup.cyclic(5))
        again = jsonio.decode_orbit_break(jsonio.encode_orbit_break(result))
        assert again == result

    def test_orbit_break_round_trip_rr0(self):
        g0 = DimensionGroup(2, IntMatrix.from_rows([[1, 1], [1, 0]]), (1, 1))
        result = solve_rr0(FgAbGroup.cyclic(2), g0, FgAbGroup.cyclic(3))
        again = jsonio.decode_orbit_break(jsonio.encode_orbit_break(result))
        assert again == result
        assert isinstance(again.cone, OrderFromQuotient)

    def test_cone_and_pairing_round_trips(self):
        g0 = DimensionGroup(2, IntMatrix.from_rows([[1, 1], [1, 0]]), (1, 1))
        for cone in (SimpleCone(), OrderFromQuotient(g0, 2)):
            assert jsonio.decode_cone(jsonio.encode_cone(cone)) == cone
        for pairing in (FirstCoordOverK(3), StateOfDimGroup(g0, 12)):
            assert jsonio.decode_pairing(jsonio.encode_pairing(pairing)) == pairing


class TestDeterminism:
    def test_snf_document_is_stable(self):
        m = IntMatrix.from_rows([[2, 4], [6, 8]])
        a = jsonio.dumps(jsonio.encode_snf(snf(m)))
        b = jsonio.dumps(jsonio.encode_snf(snf(m)))
        assert a == b

    def test_sorted_keys(self):
        doc = jsonio.dumps({"b": 1, "a": 2})
        assert doc.index('"a"') < doc.index('"b"')
