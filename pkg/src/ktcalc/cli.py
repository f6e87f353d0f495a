"""Command-line front end.

Subcommands: snf, group, pv, realize, orbit-break, dimgroup, elliott,
verify.  All payloads are the JSON documents described in
:mod:`ktcalc.jsonio`; output is deterministic (byte-identical for equal
inputs).

Exit codes: 0 success, 1 input error (including unknown flags), 2 an
extension problem came back ambiguous, 3 a positivity query came back
undetermined.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import jsonio, obk, verify
from .dimgroup import (
    DEFAULT_MAX_ITER,
    UNDETERMINED,
    DgElement,
    positivity,
    state_value,
    underlying,
)
from .elliott import build_pointlike_invariant, invariant_equal
from .errors import InputError
from .fgab import normalize
from .realize import realize
from .pv import pv_compute
from .zmatrix import snf

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_AMBIGUOUS = 2
EXIT_UNDETERMINED = 3


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as InputError (exit code 1)."""

    def error(self, message):
        raise InputError(message)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _read_doc(path: str):
    return jsonio.loads(_read_text(path))


def _inline_doc(text: str, what: str):
    """Parse an argument that is inline JSON, @file, or a file path."""
    if text.startswith("@"):
        return _read_doc(text[1:])
    try:
        return jsonio.loads(text)
    except InputError:
        if os.path.exists(text):
            return _read_doc(text)
        raise InputError(f"{what} is neither valid JSON nor an existing file: {text!r}")


def _emit(args, payload: str) -> None:
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _vector_arg(text: str, what: str) -> tuple:
    doc = _inline_doc(text, what)
    if not isinstance(doc, list):
        raise InputError(f"{what} must be a JSON array of integers")
    return tuple(jsonio._as_int(x, what) for x in doc)


def _group_arg(text: str, what: str):
    """Accept a canonical group document or a presentation (normalized)."""
    doc = _inline_doc(text, what)
    if isinstance(doc, dict) and "generators" in doc:
        group, _ = normalize(jsonio.decode_presentation(doc))
        return group
    return jsonio.decode_group(doc)


# --- subcommand handlers -----------------------------------------------------

def _cmd_snf(args) -> int:
    m = jsonio.decode_matrix(_read_doc(args.input))
    result = snf(m)
    if args.format == "table":
        lines = ["diagonal: " + " ".join(str(x) for x in result.diagonal())]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, jsonio.dumps(jsonio.encode_snf(result)))
    return EXIT_OK


def _cmd_group(args) -> int:
    p = jsonio.decode_presentation(_read_doc(args.input))
    group, onto = normalize(p)
    if args.format == "table":
        _emit(args, f"{group}\n")
    else:
        _emit(args, jsonio.dumps({
            "group": jsonio.encode_group(group),
            "onto_canonical": jsonio.encode_matrix(onto.matrix),
        }))
    return EXIT_OK


def _cmd_pv(args) -> int:
    model = jsonio.decode_model(_read_doc(args.input))
    result = pv_compute(model)
    if args.format == "table":
        lines = [
            f"K_0 = {result.k0}  [{result.k0_ext_status}]",
            f"K_1 = {result.k1}  [{result.k1_ext_status}]",
        ]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, jsonio.dumps(jsonio.encode_crossed_product(result)))
    return EXIT_AMBIGUOUS if result.is_ambiguous else EXIT_OK


def _cmd_realize(args) -> int:
    f0 = _group_arg(args.f0, "--f0")
    f1 = _group_arg(args.f1, "--f1")
    model = realize(args.d, f0, f1)
    _emit(args, jsonio.dumps(jsonio.encode_model(model)))
    return EXIT_OK


def _cmd_orbit_break(args) -> int:
    problem = obk.OrbitBreakProblem(
        regime=args.regime,
        ambient=(jsonio.decode_crossed_product(_read_doc(args.ambient))
                 if args.ambient else None),
        g0=_group_arg(args.g0, "--g0") if args.g0 else None,
        g1=_group_arg(args.g1, "--g1") if args.g1 else None,
        t=_group_arg(args.t, "--t") if args.t else None,
        dimension_group=(jsonio.decode_dimension_group(_read_doc(args.dimension_group))
                         if args.dimension_group else None),
        extreme_points=args.extreme_points,
    )
    result = obk.solve(problem)
    if args.format == "table":
        lines = [f"K_0 = {result.k0}", f"cone: {result.cone.tag}"]
        if result.unit is not None:
            lines.append("unit: (" + ", ".join(str(x) for x in result.unit) + ")")
        lines.append(f"K_1 = {result.k1}")
        lines.append(f"trace extreme points: {result.trace_extreme_points}")
        lines.append("derivation:")
        lines.extend(f"  - {step.text}" for step in result.derivation)
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, jsonio.dumps(jsonio.encode_orbit_break(result)))
    return EXIT_OK


def _cmd_dimgroup(args) -> int:
    g = jsonio.decode_dimension_group(_read_doc(args.input))
    if args.op == "underlying":
        res = underlying(g)
        doc = {
            "finitely_generated": res.finitely_generated,
            "group": jsonio.encode_group(res.group) if res.group is not None else None,
            "step_determinant": str(res.step_determinant),
        }
        _emit(args, jsonio.dumps(doc))
        return EXIT_OK
    if args.element is None:
        raise InputError(f"--element is required for op {args.op!r}")
    x = DgElement(args.level, _vector_arg(args.element, "--element"))
    if args.op == "positivity":
        verdict = positivity(g, x, args.max_iter)
        _emit(args, jsonio.dumps({"positivity": verdict}))
        return EXIT_UNDETERMINED if verdict == UNDETERMINED else EXIT_OK
    if args.op == "state":
        lo, hi = state_value(g, x, args.depth)
        _emit(args, jsonio.dumps({"lo": str(lo), "hi": str(hi)}))
        return EXIT_OK
    raise InputError(f"unknown dimgroup op {args.op!r}")


def _decode_invariant_or_result(doc):
    if isinstance(doc, dict) and "derivation" in doc:
        return jsonio.decode_orbit_break(doc).to_elliott()
    return jsonio.decode_invariant(doc)


def _cmd_elliott(args) -> int:
    if args.elliott_cmd == "build-pointlike":
        inv = build_pointlike_invariant(
            _group_arg(args.g0, "--g0"),
            _group_arg(args.g1, "--g1"),
            args.k, args.extreme_points,
        )
        _emit(args, jsonio.dumps(jsonio.encode_invariant(inv)))
        return EXIT_OK
    if args.elliott_cmd == "compare":
        a = _decode_invariant_or_result(_read_doc(args.a))
        b = _decode_invariant_or_result(_read_doc(args.b))
        equal = invariant_equal(a, b)
        _emit(args, jsonio.dumps({"equal": equal}))
        return EXIT_OK if equal else EXIT_INPUT_ERROR
    raise InputError(f"unknown elliott subcommand {args.elliott_cmd!r}")


def _cmd_verify(args) -> int:
    kwargs = {}
    if args.suite == "companion" and args.max_n is not None:
        kwargs["max_n"] = args.max_n
    if args.suite in ("snf", "oracle", "duality", "hnf") and args.count is not None:
        kwargs["count"] = args.count
    if args.suite in ("snf", "oracle", "duality", "hnf") and args.seed is not None:
        kwargs["seed"] = args.seed
    if args.suite == "oracle" and args.det_bound is not None:
        kwargs["det_bound"] = args.det_bound
    cases = verify.run_suite(args.suite, **kwargs)
    failures = sum(1 for c in cases if not c.ok)
    if args.format == "json":
        doc = {
            "suite": args.suite,
            "total": len(cases),
            "failures": failures,
            "cases": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in cases],
        }
        _emit(args, jsonio.dumps(doc))
    else:
        lines = []
        for c in cases:
            mark = "PASS" if c.ok else "FAIL"
            lines.append(f"{mark}  {c.name}" + (f"  [{c.detail}]" if c.detail else ""))
        lines.append(f"{len(cases) - failures}/{len(cases)} passed")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if failures == 0 else EXIT_INPUT_ERROR


# --- parser ------------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="ktcalc",
                     description="Exact K-theory computations for crossed products "
                                 "and orbit-breaking subalgebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, default_format="json"):
        p.add_argument("--format", choices=("json", "table"), default=default_format)
        p.add_argument("-o", "--output", default=None,
                       help="write output to a file instead of stdout")

    p = sub.add_parser("snf", help="Smith normal form with certificates")
    p.add_argument("input", help="matrix JSON file, or - for stdin")
    add_common(p)
    p.set_defaults(fn=_cmd_snf)

    p = sub.add_parser("group", help="canonical form of a presented group")
    p.add_argument("input", help="presentation JSON file, or - for stdin")
    add_common(p)
    p.set_defaults(fn=_cmd_group)

    p = sub.add_parser("pv", help="crossed-product K-theory of a space model")
    p.add_argument("input", help="model JSON file, or - for stdin")
    add_common(p)
    p.set_defaults(fn=_cmd_pv)

    p = sub.add_parser("realize", help="build a model with prescribed crossed-product K-theory")
    p.add_argument("--d", type=int, required=True, help="free rank (>= 1)")
    p.add_argument("--f0", required=True, help="finite group JSON (inline, @file, or path)")
    p.add_argument("--f1", required=True, help="finite group JSON (inline, @file, or path)")
    add_common(p)
    p.set_defaults(fn=_cmd_realize)

    p = sub.add_parser("orbit-break", help="K-theory of an orbit-breaking subalgebra")
    p.add_argument("--regime", choices=(obk.REGIME_POINT, obk.REGIME_POINTLIKE, obk.REGIME_RR0),
                   required=True)
    p.add_argument("--ambient", help="crossed-product K-theory JSON file (point regime)")
    p.add_argument("--g0", help="group JSON (pointlike regime)")
    p.add_argument("--g1", help="group JSON (pointlike and rr0 regimes)")
    p.add_argument("--t", help="infinitesimal summand group JSON (rr0 regime)")
    p.add_argument("--dimension-group", dest="dimension_group",
                   help="dimension group JSON file (rr0 regime)")
    p.add_argument("--extreme-points", dest="extreme_points", type=int, default=1)
    add_common(p)
    p.set_defaults(fn=_cmd_orbit_break)

    p = sub.add_parser("dimgroup", help="stationary dimension group queries")
    p.add_argument("input", help="dimension group JSON file, or - for stdin")
    p.add_argument("--op", choices=("positivity", "state", "underlying"), required=True)
    p.add_argument("--element", help="integer vector JSON, e.g. '[1, -1]'")
    p.add_argument("--level", type=int, default=0)
    p.add_argument("--max-iter", dest="max_iter", type=int, default=DEFAULT_MAX_ITER)
    p.add_argument("--depth", type=int, default=20)
    add_common(p)
    p.set_defaults(fn=_cmd_dimgroup)

    p = sub.add_parser("elliott", help="Elliott invariants")
    esub = p.add_subparsers(dest="elliott_cmd", required=True)
    pb = esub.add_parser("build-pointlike", help="invariant of a point-like orbit-breaking algebra")
    pb.add_argument("--g0", required=True)
    pb.add_argument("--g1", required=True)
    pb.add_argument("--k", type=int, default=1)
    pb.add_argument("--extreme-points", dest="extreme_points", type=int, default=1)
    add_common(pb)
    pb.set_defaults(fn=_cmd_elliott)
    pc = esub.add_parser("compare", help="exit 0 iff two invariants are equal")
    pc.add_argument("a")
    pc.add_argument("b")
    add_common(pc)
    pc.set_defaults(fn=_cmd_elliott)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("suite", choices=sorted(verify.SUITES) + ["all"])
    p.add_argument("--max-n", dest="max_n", type=int, default=None)
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--det-bound", dest="det_bound", type=int, default=None)
    add_common(p, default_format="table")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def entrypoint() -> None:
    sys.exit(main())
