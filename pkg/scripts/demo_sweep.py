#!/usr/bin/env python3
"""Seeded sweep comparing the enumeration and LP deciders side by side.

Generates random connected surfaces and random invariants, runs both
paths for all four checks, and prints one row per instance.  Useful as a
quick end-to-end exercise and as a template for larger experiments.

Usage: python scripts/demo_sweep.py [--trials N] [--seed S] [--faces F]
"""

import argparse
import random
import time
from fractions import Fraction

from anglestruct import (
    GeometryClass,
    InvariantKind,
    Verdict,
    check_hyperbolic_delaunay,
    check_hyperbolic_edge,
    check_spherical_delaunay,
    check_spherical_edge,
)
from anglestruct.lp import check_via_lp
from anglestruct.sampling import random_edge_values, random_triangulation

CHECKS = [
    ("T1", GeometryClass.SPHERICAL, InvariantKind.EDGE, Fraction(0), Fraction(1), check_spherical_edge),
    ("T2", GeometryClass.HYPERBOLIC, InvariantKind.EDGE, Fraction(0), Fraction(2), check_hyperbolic_edge),
    ("T3", GeometryClass.SPHERICAL, InvariantKind.DELAUNAY, Fraction(-2), Fraction(2), check_spherical_delaunay),
    ("T4", GeometryClass.HYPERBOLIC, InvariantKind.DELAUNAY, Fraction(0), Fraction(2), check_hyperbolic_delaunay),
]


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--trials", type=int, default=25)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--faces", type=int, default=None, help="fixed face count (default: random even 2..10)")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    started = time.time()
    disagreements = 0
    print(f"{'trial':>5} {'|F|':>4}  " + "  ".join(f"{name:>10}" for name, *_ in CHECKS))
    for trial in range(args.trials):
        n = args.faces or rng.choice([2, 4, 6, 8, 10])
        t = random_triangulation(n, rng)
        cells = []
        for name, geometry, kind, lo, hi, checker in CHECKS:
            fn = random_edge_values(t, rng, lo, hi, kind)
            enum_verdict = checker(t, fn).verdict
            lp_verdict = check_via_lp(t, fn, geometry).verdict
            mark = "" if enum_verdict == lp_verdict else "  <-- DISAGREE"
            if enum_verdict != lp_verdict:
                disagreements += 1
            label = "feas" if enum_verdict is Verdict.FEASIBLE else "infeas"
            cells.append(f"{label:>10}{mark}")
        print(f"{trial:>5} {t.n_faces:>4}  " + "  ".join(cells))
    elapsed = time.time() - started
    print(f"\n{args.trials} instances x 4 checks in {elapsed:.1f}s, {disagreements} disagreements")
    return 0 if disagreements == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
