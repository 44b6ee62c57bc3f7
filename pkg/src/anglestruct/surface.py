"""Combinatorial model of a triangulated closed surface.

A surface is a finite collection of triangular faces whose 3|F| edge
slots are identified in pairs.  Slot k of a face holds the edge opposite
corner k, so a corner is addressed by (face, slot) and faces the edge
stored in that slot.  Only face-edge incidence is represented; vertices
play no role in any feasibility condition handled here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import Disconnected, EdgeDegree, EmptyTriangulation, TooLarge, UnknownEdge

DEFAULT_ENUMERATION_CAP = 20

FaceSubset = frozenset[int]


class Corner(NamedTuple):
    face: int
    slot: int


@dataclass(frozen=True)
class Triangulation:
    """Validated gluing: ``faces[f][k]`` is the dense edge index opposite corner k.

    ``edge_ids`` preserves the identifiers used in the raw incidence list,
    in order of first appearance; all other fields use dense indices.
    ``edge_corners[e]`` holds the two corners facing edge e (both may lie
    in the same face when the edge is self-glued).
    """

    faces: tuple[tuple[int, int, int], ...]
    edge_ids: tuple[int, ...]
    edge_corners: tuple[tuple[Corner, Corner], ...]

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    @property
    def n_edges(self) -> int:
        return len(self.edge_ids)

    def corners(self) -> Iterator[Corner]:
        for f in range(self.n_faces):
            for k in range(3):
                yield Corner(f, k)

    def face_edge_mask(self, face: int) -> int:
        mask = 0
        for e in self.faces[face]:
            mask |= 1 << e
        return mask


def validate(raw_incidence: Iterable[Iterable[int]]) -> Triangulation:
    """Build a Triangulation from an incidence list, checking the gluing.

    Edge identifiers may be arbitrary integers; they are reindexed densely
    by first appearance.  Raises EdgeDegree unless every identifier occurs
    exactly twice, Disconnected unless faces form one component under
    shared edges, Empty on an empty list.
    """
    rows = [tuple(row) for row in raw_incidence]
    if not rows:
        raise EmptyTriangulation("no faces")
    for f, row in enumerate(rows):
        if len(row) != 3:
            raise EdgeDegree(f"face {f} has {len(row)} edge slots, expected 3")

    index: dict[int, int] = {}
    edge_ids: list[int] = []
    faces: list[tuple[int, int, int]] = []
    occurrences: dict[int, list[Corner]] = {}
    for f, row in enumerate(rows):
        dense_row = []
        for k, ident in enumerate(row):
            if ident not in index:
                index[ident] = len(edge_ids)
                edge_ids.append(ident)
                occurrences[index[ident]] = []
            e = index[ident]
            dense_row.append(e)
            occurrences[e].append(Corner(f, k))
        faces.append(tuple(dense_row))

    for e, corners in occurrences.items():
        if len(corners) != 2:
            raise EdgeDegree(
                f"edge {edge_ids[e]} appears {len(corners)} times, expected 2"
            )

    _check_connected(faces, len(edge_ids))
    edge_corners = tuple(tuple(occurrences[e]) for e in range(len(edge_ids)))
    return Triangulation(tuple(faces), tuple(edge_ids), edge_corners)


def _check_connected(faces, n_edges):
    by_edge: list[list[int]] = [[] for _ in range(n_edges)]
    for f, row in enumerate(faces):
        for e in row:
            by_edge[e].append(f)
    seen = {0}
    stack = [0]
    while stack:
        f = stack.pop()
        for e in faces[f]:
            for g in by_edge[e]:
                if g not in seen:
                    seen.add(g)
                    stack.append(g)
    if len(seen) != len(faces):
        raise Disconnected(f"{len(faces) - len(seen)} faces unreachable from face 0")


def corners_facing(t: Triangulation, edge: int) -> tuple[Corner, Corner]:
    """The two corners opposite the given dense edge index."""
    if not 0 <= edge < t.n_edges:
        raise UnknownEdge(str(edge))
    return t.edge_corners[edge]


def other_corners(t: Triangulation, corner: Corner) -> tuple[Corner, Corner]:
    """The remaining two corners of the corner's face."""
    f, k = corner
    return Corner(f, (k + 1) % 3), Corner(f, (k + 2) % 3)


def edge_set(t: Triangulation, subset: FaceSubset) -> frozenset[int]:
    """All edges belonging to at least one face of the subset (no multiplicity)."""
    out: set[int] = set()
    for f in subset:
        out.update(t.faces[f])
    return frozenset(out)


def enumerate_subsets(
    t: Triangulation,
    include_empty: bool,
    include_full: bool,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Iterator[FaceSubset]:
    """Yield face subsets once each, filtered by the empty/full flags.

    Refuses instances above the enumeration cap; callers with more faces
    must take the LP path instead.
    """
    n = t.n_faces
    if n > cap:
        raise TooLarge(f"{n} faces exceeds enumeration cap {cap}")
    full = (1 << n) - 1
    for mask in range(1 << n):
        if mask == 0 and not include_empty:
            continue
        if mask == full and not include_full:
            continue
        yield frozenset(f for f in range(n) if mask >> f & 1)
