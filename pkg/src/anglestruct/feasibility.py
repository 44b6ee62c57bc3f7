"""Brute-force subset checkers for the four feasibility theorems.

Each characterization quantifies a linear inequality over face subsets:

* spherical edge invariant (T1) and hyperbolic Delaunay invariant (T4):
  over every nonempty subset X, pi*|X| must stay below the weight of the
  edges E(X) touched by X;
* hyperbolic edge invariant (T2), spherical Delaunay invariant (T3, by
  substitution into T2) and the closure variant (L7): over every proper
  subset X including the empty one, pi*(|F|-|X|) must stay above the
  weight of the edges outside E(X), strictly for T2/T3 and weakly for L7.

The scan walks subsets in Gray-code order, maintaining per-edge incidence
counts so each step costs O(1) exact-rational updates.  Verdicts report
the minimum slack over all checked subsets and, when infeasible, the
violating subset with minimal slack (ties: smaller size, then smaller
membership bitmask).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .angles import EdgeFunction, InvariantKind
from .errors import RangeViolation, TooLarge
from .ratpi import RatPi
from .surface import DEFAULT_ENUMERATION_CAP, FaceSubset, Triangulation, edge_set

HALF = Fraction(1, 2)


class Verdict(Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    CLOSURE_ONLY = "closure-only"


class QuantifierRange(Enum):
    NONEMPTY_SUBSETS = "nonempty-subsets"
    PROPER_SUBSETS_INCL_EMPTY = "proper-subsets-incl-empty"


@dataclass(frozen=True)
class FeasibilityReport:
    verdict: Verdict
    theorem: str
    quantifier_range: QuantifierRange
    certificate: FaceSubset | None
    slack: RatPi | None

    def is_feasible(self) -> bool:
        return self.verdict is not Verdict.INFEASIBLE


def _require_kind(fn: EdgeFunction, kind: InvariantKind, theorem: str) -> None:
    if fn.kind is not kind:
        raise RangeViolation(f"{theorem} needs a {kind.value} invariant, got {fn.kind.value}")


def _require_range(fn, t, lo, hi, strict, theorem):
    """Domain check in pi-units; strict means open interval."""
    for e in range(t.n_edges):
        c = fn.value(e).coeff
        bad = not (lo < c < hi) if strict else not (lo <= c <= hi)
        if bad:
            raise RangeViolation(
                f"{theorem}: value {fn.value(e).render()} at edge {e} outside domain"
            )


def _scan(
    t: Triangulation,
    weights: list[Fraction],
    grow_form: bool,
    include_empty: bool,
    include_full: bool,
    cap: int,
):
    """Minimum slack and argmin subset over the quantifier range.

    grow_form evaluates W(E(X)) - pi|X| (T1/T4); otherwise
    pi(|F|-|X|) - W(E - E(X)) (T2/T3/L7).  All values in pi-units.
    """
    n = t.n_faces
    if n > cap:
        raise TooLarge(f"{n} faces exceeds enumeration cap {cap}")
    total = sum(weights, Fraction(0))
    counts = [0] * t.n_edges
    covered = Fraction(0)
    size = 0
    mask = 0
    full = (1 << n) - 1
    best: tuple[Fraction, int, int] | None = None

    def current_slack() -> Fraction:
        if grow_form:
            return covered - size
        return (n - size) - (total - covered)

    def consider():
        nonlocal best
        if mask == 0 and not include_empty:
            return
        if mask == full and not include_full:
            return
        key = (current_slack(), size, mask)
        if best is None or key < best:
            best = key

    consider()
    for k in range(1, 1 << n):
        face = (k & -k).bit_length() - 1
        bit = 1 << face
        if mask & bit:
            mask ^= bit
            size -= 1
            for e in t.faces[face]:
                counts[e] -= 1
                if counts[e] == 0:
                    covered -= weights[e]
        else:
            mask ^= bit
            size += 1
            for e in t.faces[face]:
                if counts[e] == 0:
                    covered += weights[e]
                counts[e] += 1
        consider()

    slack, size, mask = best
    subset = frozenset(f for f in range(n) if mask >> f & 1)
    return slack, subset


def _report(theorem, quantifier, feasible_verdict, slack, subset, violated):
    return FeasibilityReport(
        verdict=Verdict.INFEASIBLE if violated else feasible_verdict,
        theorem=theorem,
        quantifier_range=quantifier,
        certificate=subset if violated else None,
        slack=RatPi(slack),
    )


def check_spherical_edge(
    t: Triangulation, d: EdgeFunction, cap: int = DEFAULT_ENUMERATION_CAP
) -> FeasibilityReport:
    """Spherical structures with edge invariant d exist iff every nonempty
    subset X satisfies pi|X| < sum of d over E(X)."""
    _require_kind(d, InvariantKind.EDGE, "T1")
    _require_range(d, t, Fraction(0), Fraction(1), True, "T1")
    weights = [d.value(e).coeff for e in range(t.n_edges)]
    slack, subset = _scan(t, weights, True, False, True, cap)
    return _report("T1", QuantifierRange.NONEMPTY_SUBSETS, Verdict.FEASIBLE, slack, subset, slack <= 0)


def check_hyperbolic_edge(
    t: Triangulation, d: EdgeFunction, cap: int = DEFAULT_ENUMERATION_CAP
) -> FeasibilityReport:
    """Hyperbolic structures with edge invariant d exist iff every proper
    subset X (including the empty one) satisfies
    pi(|F|-|X|) > sum of d outside E(X)."""
    _require_kind(d, InvariantKind.EDGE, "T2")
    _require_range(d, t, Fraction(0), Fraction(2), True, "T2")
    weights = [d.value(e).coeff for e in range(t.n_edges)]
    slack, subset = _scan(t, weights, False, True, False, cap)
    return _report(
        "T2", QuantifierRange.PROPER_SUBSETS_INCL_EMPTY, Verdict.FEASIBLE, slack, subset, slack <= 0
    )


def check_spherical_delaunay(
    t: Triangulation, dd: EdgeFunction, cap: int = DEFAULT_ENUMERATION_CAP
) -> FeasibilityReport:
    """Spherical structures with Delaunay invariant dd exist iff the
    hyperbolic edge-invariant conditions hold for pi - dd/2."""
    _require_kind(dd, InvariantKind.DELAUNAY, "T3")
    _require_range(dd, t, Fraction(-2), Fraction(2), True, "T3")
    reduced = reduce_delaunay_to_edge(dd, t)
    inner = check_hyperbolic_edge(t, reduced, cap)
    return FeasibilityReport(
        verdict=inner.verdict,
        theorem="T3",
        quantifier_range=inner.quantifier_range,
        certificate=inner.certificate,
        slack=inner.slack,
    )


def check_hyperbolic_delaunay(
    t: Triangulation, dd: EdgeFunction, cap: int = DEFAULT_ENUMERATION_CAP
) -> FeasibilityReport:
    """Hyperbolic structures with Delaunay invariant dd exist iff every
    nonempty subset X satisfies pi|X| < sum of (pi - dd/2) over E(X)."""
    _require_kind(dd, InvariantKind.DELAUNAY, "T4")
    _require_range(dd, t, Fraction(0), Fraction(2), True, "T4")
    weights = [1 - dd.value(e).coeff * HALF for e in range(t.n_edges)]
    slack, subset = _scan(t, weights, True, False, True, cap)
    return _report("T4", QuantifierRange.NONEMPTY_SUBSETS, Verdict.FEASIBLE, slack, subset, slack <= 0)


def check_closure(
    t: Triangulation, d: EdgeFunction, cap: int = DEFAULT_ENUMERATION_CAP
) -> FeasibilityReport:
    """The closure of the hyperbolic solution set is nonempty iff every
    proper subset satisfies the T2 inequality weakly."""
    _require_kind(d, InvariantKind.EDGE, "L7")
    _require_range(d, t, Fraction(0), Fraction(2), False, "L7")
    weights = [d.value(e).coeff for e in range(t.n_edges)]
    slack, subset = _scan(t, weights, False, True, False, cap)
    return _report(
        "L7", QuantifierRange.PROPER_SUBSETS_INCL_EMPTY, Verdict.CLOSURE_ONLY, slack, subset, slack < 0
    )


def reduce_delaunay_to_edge(dd: EdgeFunction, t: Triangulation) -> EdgeFunction:
    """The substitution D(e) = pi - dd(e)/2 behind the T3/T2 equivalence."""
    values = {e: RatPi(1 - dd.value(e).coeff * HALF) for e in range(t.n_edges)}
    return EdgeFunction(values, InvariantKind.EDGE)


def subset_slack(t: Triangulation, fn: EdgeFunction, theorem: str, subset: FaceSubset) -> RatPi:
    """Exact slack of one subset under the named theorem's inequality.

    Negative or zero means the subset certifies infeasibility (for L7,
    only strictly negative does).  Used to re-verify certificates.
    """
    if theorem in ("T3", "T4"):
        weights = [1 - fn.value(e).coeff * HALF for e in range(t.n_edges)]
    else:
        weights = [fn.value(e).coeff for e in range(t.n_edges)]
    covered = sum((weights[e] for e in edge_set(t, subset)), Fraction(0))
    if theorem in ("T1", "T4"):
        return RatPi(covered - len(subset))
    total = sum(weights, Fraction(0))
    return RatPi((t.n_faces - len(subset)) - (total - covered))
