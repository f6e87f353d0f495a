"""JSON encoding and decoding for every transported value.

Arbitrary-precision payload integers (matrix entries, vectors, invariant
factors) travel as decimal strings so no JSON layer can silently round
them; structural counts (rows, generators, free rank) stay plain numbers.
Decoders accept either form.  Encoders are deterministic: equal values
produce byte-identical documents.
"""

from __future__ import annotations

import json

from .dimgroup import DimensionGroup
from .elliott import (
    ElliottData,
    FirstCoordOverK,
    FirstCoordinate,
    FullPositiveFirstCoord,
    NonNegFree,
    OrderFromQuotient,
    SimpleCone,
    StateOfDimGroup,
    UnknownCone,
)
from .errors import InputError
from .fgab import FgAbGroup, GroupHom, PresentedGroup
from .obk import DerivationStep, OrbitBreakK
from .pv import STATUS_AMBIGUOUS, STATUS_SPLIT, CrossedProductK, SpaceKModel
from .zmatrix import IntMatrix, SnfResult


def _as_int(value, what: str) -> int:
    if isinstance(value, bool):
        raise InputError(f"{what} must be an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError as exc:
            raise InputError(f"{what} is not a decimal integer: {value!r}") from exc
    raise InputError(f"{what} must be an integer or decimal string, got {type(value).__name__}")


def _as_count(value, what: str) -> int:
    n = _as_int(value, what)
    if n < 0:
        raise InputError(f"{what} must be nonnegative")
    return n


def _expect_object(doc, what: str) -> dict:
    if not isinstance(doc, dict):
        raise InputError(f"{what} must be a JSON object")
    return doc


def _expect_list(doc, what: str) -> list:
    if not isinstance(doc, list):
        raise InputError(f"{what} must be a JSON array")
    return doc


def _int_list(doc, what: str) -> list:
    return [_as_int(x, what) for x in _expect_list(doc, what)]


# --- matrices --------------------------------------------------------------

def encode_matrix(m: IntMatrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[str(x) for x in row] for row in m.entries],
    }


def decode_matrix(doc) -> IntMatrix:
    doc = _expect_object(doc, "matrix")
    rows = _as_count(doc.get("rows"), "matrix rows")
    cols = _as_count(doc.get("cols"), "matrix cols")
    grid = _expect_list(doc.get("entries"), "matrix entries")
    if len(grid) != rows:
        raise InputError(f"matrix declared {rows} rows but has {len(grid)}")
    return IntMatrix(rows, cols, [_int_list(row, "matrix entry row") for row in grid])


def encode_snf(result: SnfResult) -> dict:
    return {"u": encode_matrix(result.u), "d": encode_matrix(result.d), "v": encode_matrix(result.v)}


# --- groups and presentations ----------------------------------------------

def encode_group(g: FgAbGroup) -> dict:
    return {"free_rank": g.free_rank, "torsion": [str(d) for d in g.torsion]}


def decode_group(doc) -> FgAbGroup:
    doc = _expect_object(doc, "group")
    free = _as_count(doc.get("free_rank"), "free_rank")
    torsion = _int_list(doc.get("torsion", []), "torsion factor")
    return FgAbGroup(free, tuple(torsion))


def encode_presentation(p: PresentedGroup) -> dict:
    return {"generators": p.generators, "relations": encode_matrix(p.relations)}


def decode_presentation(doc) -> PresentedGroup:
    doc = _expect_object(doc, "presentation")
    gens = _as_count(doc.get("generators"), "generators")
    return PresentedGroup(gens, decode_matrix(doc.get("relations")))


def encode_hom(h: GroupHom) -> dict:
    return {
        "source": encode_presentation(h.source),
        "target": encode_presentation(h.target),
        "matrix": encode_matrix(h.matrix),
    }


def decode_hom(doc) -> GroupHom:
    doc = _expect_object(doc, "homomorphism")
    return GroupHom(
        decode_presentation(doc.get("source")),
        decode_presentation(doc.get("target")),
        decode_matrix(doc.get("matrix")),
    )


# --- space models and crossed-product results -------------------------------

def encode_model(m: SpaceKModel) -> dict:
    return {
        "k0": encode_presentation(m.k0),
        "k1": encode_presentation(m.k1),
        "aut0": encode_matrix(m.aut0.matrix),
        "aut1": encode_matrix(m.aut1.matrix),
        "unit": [str(x) for x in m.unit],
    }


def decode_model(doc) -> SpaceKModel:
    doc = _expect_object(doc, "space K-model")
    k0 = decode_presentation(doc.get("k0"))
    k1 = decode_presentation(doc.get("k1"))
    return SpaceKModel.of(
        k0,
        decode_matrix(doc.get("aut0")),
        k1,
        decode_matrix(doc.get("aut1")),
        _int_list(doc.get("unit"), "unit entry"),
    )


def encode_crossed_product(r: CrossedProductK) -> dict:
    return {
        "k0": encode_group(r.k0),
        "k1": encode_group(r.k1),
        "k0_ext_status": r.k0_ext_status,
        "k1_ext_status": r.k1_ext_status,
        "k0_sub": encode_group(r.k0_sub),
        "k0_quot": encode_group(r.k0_quot),
        "k1_sub": encode_group(r.k1_sub),
        "k1_quot": encode_group(r.k1_quot),
    }


def decode_crossed_product(doc) -> CrossedProductK:
    doc = _expect_object(doc, "crossed-product K-theory")
    k0 = decode_group(doc.get("k0"))
    k1 = decode_group(doc.get("k1"))
    if "k0_sub" not in doc:
        return CrossedProductK.from_groups(k0, k1)
    statuses = (doc.get("k0_ext_status"), doc.get("k1_ext_status"))
    for s in statuses:
        if s not in (STATUS_SPLIT, STATUS_AMBIGUOUS):
            raise InputError(f"extension status must be {STATUS_SPLIT!r} or {STATUS_AMBIGUOUS!r}")
    return CrossedProductK(
        k0, k1, statuses[0], statuses[1],
        decode_group(doc.get("k0_sub")),
        decode_group(doc.get("k0_quot")),
        decode_group(doc.get("k1_sub")),
        decode_group(doc.get("k1_quot")),
    )


# --- dimension groups --------------------------------------------------------

def encode_dimension_group(g: DimensionGroup) -> dict:
    return {
        "k": g.k,
        "step": encode_matrix(g.step),
        "unit": [str(x) for x in g.unit],
    }


def decode_dimension_group(doc) -> DimensionGroup:
    doc = _expect_object(doc, "dimension group")
    k = _as_count(doc.get("k"), "dimension group size k")
    return DimensionGroup(k, decode_matrix(doc.get("step")),
                          _int_list(doc.get("unit"), "unit entry"))


# --- cones, pairings, invariants ---------------------------------------------

def encode_cone(cone) -> dict:
    if isinstance(cone, SimpleCone):
        return {"tag": cone.tag}
    if isinstance(cone, (FullPositiveFirstCoord, NonNegFree)):
        return {"tag": cone.tag, "free_rank": cone.free_rank}
    if isinstance(cone, OrderFromQuotient):
        return {
            "tag": cone.tag,
            "dimension_group": encode_dimension_group(cone.group),
            "quotient_rank": cone.quotient_rank,
            "max_iter": cone.max_iter,
        }
    if isinstance(cone, UnknownCone):
        return {"tag": cone.tag}
    raise InputError(f"unrecognized cone {cone!r}")


def decode_cone(doc):
    doc = _expect_object(doc, "cone descriptor")
    tag = doc.get("tag")
    if tag == "SimpleCone":
        return SimpleCone()
    if tag == "FullPositiveFirstCoord":
        return FullPositiveFirstCoord(_as_count(doc.get("free_rank"), "cone free_rank"))
    if tag == "NonNegFree":
        return NonNegFree(_as_count(doc.get("free_rank"), "cone free_rank"))
    if tag == "OrderFromQuotient":
        return OrderFromQuotient(
            decode_dimension_group(doc.get("dimension_group")),
            _as_count(doc.get("quotient_rank"), "quotient_rank"),
            _as_count(doc.get("max_iter", 25), "max_iter"),
        )
    if tag == "Unknown":
        return UnknownCone()
    raise InputError(f"unrecognized cone tag {tag!r}")


def encode_pairing(p) -> dict:
    if isinstance(p, FirstCoordinate):
        return {"kind": p.kind}
    if isinstance(p, FirstCoordOverK):
        return {"kind": p.kind, "k": p.k}
    if isinstance(p, StateOfDimGroup):
        return {
            "kind": p.kind,
            "dimension_group": encode_dimension_group(p.group),
            "depth": p.depth,
        }
    raise InputError(f"unrecognized pairing {p!r}")


def decode_pairing(doc):
    doc = _expect_object(doc, "pairing descriptor")
    kind = doc.get("kind")
    if kind == "FirstCoordinate":
        return FirstCoordinate()
    if kind == "FirstCoordOverK":
        return FirstCoordOverK(_as_count(doc.get("k"), "pairing k"))
    if kind == "StateOfDimGroup":
        return StateOfDimGroup(
            decode_dimension_group(doc.get("dimension_group")),
            _as_count(doc.get("depth", 20), "pairing depth"),
        )
    raise InputError(f"unrecognized pairing kind {kind!r}")


def encode_invariant(e: ElliottData) -> dict:
    return {
        "k0": encode_group(e.k0),
        "cone": encode_cone(e.cone),
        "unit": [str(x) for x in e.unit],
        "k1": encode_group(e.k1),
        "trace_extreme_points": e.trace_extreme_points,
        "pairing": encode_pairing(e.pairing),
    }


def decode_invariant(doc) -> ElliottData:
    doc = _expect_object(doc, "Elliott invariant")
    return ElliottData(
        decode_group(doc.get("k0")),
        decode_cone(doc.get("cone")),
        tuple(_int_list(doc.get("unit"), "unit entry")),
        decode_group(doc.get("k1")),
        _as_count(doc.get("trace_extreme_points", 1), "trace_extreme_points"),
        decode_pairing(doc.get("pairing")),
    )


# --- orbit-breaking results ---------------------------------------------------

def encode_orbit_break(r: OrbitBreakK) -> dict:
    return {
        "k0": encode_group(r.k0),
        "cone": encode_cone(r.cone),
        "unit": None if r.unit is None else [str(x) for x in r.unit],
        "k1": encode_group(r.k1),
        "trace_extreme_points": r.trace_extreme_points,
        "derivation": [
            {"kind": s.kind, "text": s.text, "groups": [encode_group(g) for g in s.groups]}
            for s in r.derivation
        ],
    }


def decode_orbit_break(doc) -> OrbitBreakK:
    doc = _expect_object(doc, "orbit-breaking result")
    unit_doc = doc.get("unit")
    steps = []
    for raw in _expect_list(doc.get("derivation", []), "derivation"):
        raw = _expect_object(raw, "derivation step")
        steps.append(DerivationStep(
            str(raw.get("kind")), str(raw.get("text")),
            tuple(decode_group(g) for g in _expect_list(raw.get("groups", []), "step groups")),
        ))
    return OrbitBreakK(
        decode_group(doc.get("k0")),
        decode_cone(doc.get("cone")),
        None if unit_doc is None else tuple(_int_list(unit_doc, "unit entry")),
        decode_group(doc.get("k1")),
        _as_count(doc.get("trace_extreme_points", 1), "trace_extreme_points"),
        tuple(steps),
    )


def dumps(doc) -> str:
    """Deterministic serialization: sorted keys, fixed layout, one trailing newline."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc
