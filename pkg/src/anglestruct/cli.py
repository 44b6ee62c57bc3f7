"""Command-line front end.

Subcommands: check, construct, invariants, gen, verify.  All output is
JSON on stdout with fixed key order; exit codes are 0 for feasible or
consistent, 1 for infeasible or mismatching, 2 for invalid input.  The
enumeration cap comes from --cap, then the ANGLESTRUCT_CAP environment
variable, then the default of 20.
"""

from __future__ import annotations

import argparse
import os
import random
import sys

from . import feasibility, lp
from .angles import (
    GeometryClass,
    InvariantKind,
    classify_structure,
    delaunay_invariant,
    edge_invariant,
    euclidean_relation_holds,
)
from .errors import AngleStructError
from .feasibility import FeasibilityReport, QuantifierRange, Verdict
from .ratpi import RatPi
from .sampling import random_structure, random_triangulation
from .serialize import (
    InvalidInstance,
    dumps,
    edge_function_to_json,
    load_instance,
    report_to_json,
    structure_to_json,
)
from .surface import DEFAULT_ENUMERATION_CAP

AUTO_ENUMERATE_LIMIT = 12

_ENUM_CHECKERS = {
    (GeometryClass.SPHERICAL, InvariantKind.EDGE): feasibility.check_spherical_edge,
    (GeometryClass.HYPERBOLIC, InvariantKind.EDGE): feasibility.check_hyperbolic_edge,
    (GeometryClass.SPHERICAL, InvariantKind.DELAUNAY): feasibility.check_spherical_delaunay,
    (GeometryClass.HYPERBOLIC, InvariantKind.DELAUNAY): feasibility.check_hyperbolic_delaunay,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anglestruct",
        description="Decide and construct spherical/hyperbolic angle structures "
        "with prescribed edge or Delaunay invariants.",
    )
    parser.add_argument("--cap", type=int, default=None, help="subset-enumeration cap")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="feasibility verdict with certificate")
    p_check.add_argument("path")
    p_check.add_argument("--geometry", choices=["spherical", "hyperbolic"], required=True)
    p_check.add_argument("--invariant", choices=["edge", "delaunay"], required=True)
    p_check.add_argument("--method", choices=["enumerate", "lp", "auto"], default="auto")
    p_check.add_argument("--cross-check", action="store_true", help="run both methods, require agreement")
    p_check.add_argument("--dump-lp", action="store_true", help="dump construction programs to stderr")
    p_check.set_defaults(func=cmd_check)

    p_con = sub.add_parser("construct", help="explicit witness structure or certificate")
    p_con.add_argument("path")
    p_con.add_argument("--geometry", choices=["spherical", "hyperbolic"], required=True)
    p_con.add_argument("--dump-lp", action="store_true")
    p_con.set_defaults(func=cmd_construct)

    p_inv = sub.add_parser("invariants", help="both invariants and the geometry class")
    p_inv.add_argument("path")
    p_inv.set_defaults(func=cmd_invariants)

    p_gen = sub.add_parser("gen", help="random connected instance")
    p_gen.add_argument("--faces", type=int, required=True)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--geometry", choices=["euclidean", "spherical", "hyperbolic"])
    p_gen.set_defaults(func=cmd_gen)

    p_ver = sub.add_parser("verify", help="recompute invariants, compare to stated data")
    p_ver.add_argument("path")
    p_ver.set_defaults(func=cmd_verify)
    return parser


def _resolve_cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get("ANGLESTRUCT_CAP")
    if env is not None:
        return int(env)
    return DEFAULT_ENUMERATION_CAP


def _require_invariant(invariant, expected_kind=None):
    if invariant is None:
        raise InvalidInstance("instance carries no invariant payload")
    if expected_kind is not None and invariant.kind is not expected_kind:
        raise InvalidInstance(
            f"invariant kind {invariant.kind.value} does not match flag {expected_kind.value}"
        )
    return invariant


def cmd_check(args) -> int:
    t, invariant, _, _ = load_instance(args.path)
    kind = InvariantKind(args.invariant)
    geometry = GeometryClass(args.geometry)
    invariant = _require_invariant(invariant, kind)
    cap = _resolve_cap(args)

    method = args.method
    if method == "auto":
        method = "enumerate" if t.n_faces <= min(AUTO_ENUMERATE_LIMIT, cap) else "lp"
    if args.dump_lp and invariant.kind is InvariantKind.EDGE:
        print(lp.render_problem(lp.build_construction_lp(t, invariant, geometry)), file=sys.stderr)

    if method == "enumerate" or args.cross_check:
        report = _ENUM_CHECKERS[(geometry, kind)](t, invariant, cap)
    if method == "lp" or args.cross_check:
        lp_report = lp.check_via_lp(t, invariant, geometry)
        if method == "lp" and not args.cross_check:
            report = lp_report
        elif report.verdict is not lp_report.verdict:
            raise AngleStructError(
                f"cross-check disagreement: enumerate={report.verdict.value} lp={lp_report.verdict.value}"
            )
    print(dumps(report_to_json(report)))
    return 0 if report.verdict is not Verdict.INFEASIBLE else 1


def _certificate_report(cert: lp.InfeasibleCertificate) -> FeasibilityReport:
    quantifier = (
        QuantifierRange.NONEMPTY_SUBSETS
        if cert.theorem in ("T1", "T4")
        else QuantifierRange.PROPER_SUBSETS_INCL_EMPTY
    )
    return FeasibilityReport(Verdict.INFEASIBLE, cert.theorem, quantifier, cert.subset, cert.slack)


def cmd_construct(args) -> int:
    t, invariant, _, _ = load_instance(args.path)
    geometry = GeometryClass(args.geometry)
    invariant = _require_invariant(invariant)
    if args.dump_lp and invariant.kind is InvariantKind.EDGE:
        print(lp.render_problem(lp.build_construction_lp(t, invariant, geometry)), file=sys.stderr)

    if invariant.kind is InvariantKind.EDGE:
        result = lp.construct_structure(t, invariant, geometry)
    elif geometry is GeometryClass.HYPERBOLIC:
        result = lp.construct_hyperbolic_with_delaunay(t, invariant)
    else:
        result = lp.construct_spherical_with_delaunay(t, invariant)

    if isinstance(result, lp.InfeasibleCertificate):
        print(dumps(report_to_json(_certificate_report(result))))
        return 1

    # re-validate before printing: class and recomputed invariant must match
    if classify_structure(t, result) is not geometry:
        raise AngleStructError("constructed structure failed class re-validation")
    recomputed = (
        edge_invariant(t, result)
        if invariant.kind is InvariantKind.EDGE
        else delaunay_invariant(t, result)
    )
    if any(recomputed.value(e) != invariant.value(e) for e in range(t.n_edges)):
        raise AngleStructError("constructed structure failed invariant re-validation")
    print(dumps(structure_to_json(t, result)))
    return 0


def cmd_invariants(args) -> int:
    t, _, structure, _ = load_instance(args.path)
    if structure is None:
        raise InvalidInstance("instance carries no structure payload")
    cls = classify_structure(t, structure)
    out = {
        "class": cls.value,
        "edge": edge_function_to_json(t, edge_invariant(t, structure)),
        "delaunay": edge_function_to_json(t, delaunay_invariant(t, structure)),
        "euclidean_relation": euclidean_relation_holds(t, structure),
    }
    print(dumps(out))
    return 0


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    t = random_triangulation(args.faces, rng)
    out = {"faces": [list(t.faces[f]) for f in range(t.n_faces)]}
    if args.geometry:
        geometry = GeometryClass(args.geometry)
        structure = random_structure(t, geometry, rng)
        out["structure"] = structure_to_json(t, structure)
        out["invariant"] = edge_function_to_json(t, edge_invariant(t, structure))
        out["class"] = geometry.value
    print(dumps(out))
    return 0


def cmd_verify(args) -> int:
    t, invariant, structure, stated_class = load_instance(args.path)
    if structure is None or invariant is None:
        raise InvalidInstance("verify needs both a structure and an invariant")
    structure.check_complete(t)
    recomputed = (
        edge_invariant(t, structure)
        if invariant.kind is InvariantKind.EDGE
        else delaunay_invariant(t, structure)
    )
    mismatched = [
        e for e in range(t.n_edges) if recomputed.value(e) != invariant.value(e)
    ]
    class_ok = True
    if stated_class is not None:
        class_ok = classify_structure(t, structure) is stated_class
    ok = not mismatched and class_ok
    print(dumps({"ok": ok, "mismatched_edges": mismatched, "class_ok": class_ok}))
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AngleStructError as exc:
        print(dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        return 2
    except FileNotFoundError as exc:
        print(dumps({"error": {"type": "FileNotFound", "message": str(exc)}}))
        return 2


if __name__ == "__main__":
    sys.exit(main())
