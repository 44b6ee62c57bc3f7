"""JSON forms for instances, structures, invariants and reports.

All rationals are canonical ``p/q`` strings in pi-units.  Key order is
fixed so identical inputs always serialize to identical bytes; see
docs/format.md for the bit-exact layout.
"""

from __future__ import annotations

import json
from typing import Any

from .angles import AngleStructure, EdgeFunction, GeometryClass, InvariantKind
from .errors import AngleStructError, MissingCorner
from .feasibility import FeasibilityReport
from .ratpi import parse as parse_ratpi
from .surface import Corner, Triangulation, validate


class InvalidInstance(AngleStructError):
    """Instance file violates the documented JSON schema."""


def edge_function_to_json(t: Triangulation, fn: EdgeFunction) -> dict:
    return {
        "kind": fn.kind.value,
        "values": {str(e): fn.value(e).render() for e in range(t.n_edges)},
    }


def edge_function_from_json(t: Triangulation, obj: Any, kind: InvariantKind | None = None) -> EdgeFunction:
    if not isinstance(obj, dict) or "values" not in obj:
        raise InvalidInstance("invariant must be an object with a 'values' map")
    if kind is None:
        try:
            kind = InvariantKind(obj.get("kind", "edge"))
        except ValueError:
            raise InvalidInstance(f"unknown invariant kind {obj.get('kind')!r}") from None
    values = {}
    for key, text in obj["values"].items():
        try:
            e = int(key)
        except ValueError:
            raise InvalidInstance(f"invariant key {key!r} is not an edge index") from None
        if not 0 <= e < t.n_edges:
            raise InvalidInstance(f"invariant names unknown edge {e}")
        values[e] = parse_ratpi(text)
    missing = [e for e in range(t.n_edges) if e not in values]
    if missing:
        raise InvalidInstance(f"invariant missing edges {missing}")
    return EdgeFunction(values, kind)


def structure_to_json(t: Triangulation, x: AngleStructure) -> dict:
    corners = []
    for f in range(t.n_faces):
        for k in range(3):
            corners.append([f"{f}/{k}", x.angle(Corner(f, k)).render()])
    return {"corners": corners}


def structure_from_json(t: Triangulation, obj: Any) -> AngleStructure:
    if not isinstance(obj, dict) or "corners" not in obj:
        raise InvalidInstance("structure must be an object with a 'corners' list")
    values = {}
    for entry in obj["corners"]:
        if not (isinstance(entry, (list, tuple)) and len(entry) == 2):
            raise InvalidInstance(f"bad corner entry {entry!r}")
        key, text = entry
        try:
            face_text, slot_text = key.split("/")
            corner = Corner(int(face_text), int(slot_text))
        except (ValueError, AttributeError):
            raise InvalidInstance(f"bad corner key {key!r}") from None
        if not (0 <= corner.face < t.n_faces and 0 <= corner.slot < 3):
            raise InvalidInstance(f"corner {key} outside the triangulation")
        values[corner] = parse_ratpi(text)
    structure = AngleStructure(values)
    try:
        structure.check_complete(t)
    except MissingCorner as exc:
        raise MissingCorner(str(exc)) from None
    return structure


def report_to_json(report: FeasibilityReport) -> dict:
    out = {
        "verdict": report.verdict.value,
        "theorem": report.theorem,
        "quantifier_range": report.quantifier_range.value,
    }
    if report.certificate is not None:
        out["certificate"] = sorted(report.certificate)
    if report.slack is not None:
        out["slack"] = report.slack.render()
    return out


def load_instance(path: str):
    """Parse an instance file: triangulation plus optional payloads.

    Returns (triangulation, invariant, structure, stated_class).  The CLI
    requires dense 0-based edge identifiers so file indices and report
    indices coincide.
    """
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidInstance(f"not valid JSON: {exc}") from None
    if not isinstance(obj, dict) or "faces" not in obj:
        raise InvalidInstance("instance must be an object with a 'faces' list")
    t = validate(obj["faces"])
    if tuple(t.edge_ids) != tuple(range(t.n_edges)):
        raise InvalidInstance("edge identifiers must be dense 0-based indices")

    invariant = None
    if "D" in obj and "invariant" in obj:
        raise InvalidInstance("give either 'D' or 'invariant', not both")
    if "D" in obj:
        invariant = edge_function_from_json(t, {"values": obj["D"]}, InvariantKind.EDGE)
    elif "invariant" in obj:
        invariant = edge_function_from_json(t, obj["invariant"])

    structure = None
    if "structure" in obj:
        structure = structure_from_json(t, obj["structure"])

    stated_class = None
    if "class" in obj:
        try:
            stated_class = GeometryClass(obj["class"])
        except ValueError:
            raise InvalidInstance(f"unknown geometry class {obj['class']!r}") from None
    return t, invariant, structure, stated_class


def dumps(obj: dict) -> str:
    return json.dumps(obj)
