"""Seeded random instances: gluings, angle structures, invariant values.

Gluings are sampled by shuffling the 3N face slots and pairing them
consecutively, rejecting pairings that glue a face to itself or leave the
surface disconnected.  Structures are sampled face by face and rescaled
or rejected until the requested geometry class holds.  Everything is
driven by a caller-supplied ``random.Random`` so runs are reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .angles import AngleStructure, EdgeFunction, GeometryClass, InvariantKind
from .errors import Disconnected, OddFaceCount
from .ratpi import RatPi
from .surface import Corner, Triangulation, validate


def random_triangulation(n_faces: int, rng: random.Random) -> Triangulation:
    """Connected gluing of n_faces triangles without self-glued edges."""
    if n_faces < 2 or n_faces % 2:
        raise OddFaceCount(f"need an even face count >= 2, got {n_faces}")
    for _ in range(10_000):
        slots = [(f, k) for f in range(n_faces) for k in range(3)]
        rng.shuffle(slots)
        pairs = [(slots[i], slots[i + 1]) for i in range(0, len(slots), 2)]
        if any(p[0][0] == p[1][0] for p in pairs):
            continue
        incidence = [[-1, -1, -1] for _ in range(n_faces)]
        for e, (s1, s2) in enumerate(pairs):
            incidence[s1[0]][s1[1]] = e
            incidence[s2[0]][s2[1]] = e
        try:
            return validate(incidence)
        except Disconnected:
            continue
    raise RuntimeError("rejection sampling failed to find a connected gluing")


def _euclidean_triple(rng):
    p, q, r = (rng.randint(1, 12) for _ in range(3))
    total = p + q + r
    return [Fraction(p, total), Fraction(q, total), Fraction(r, total)]


def _hyperbolic_triple(rng):
    scale_den = rng.randint(2, 40)
    scale = Fraction(rng.randint(1, scale_den - 1), scale_den)
    return [v * scale for v in _euclidean_triple(rng)]


def _spherical_triple(rng):
    while True:
        den = rng.randint(3, 40)
        triple = [Fraction(rng.randint(1, den - 1), den) for _ in range(3)]
        a, b, c = triple
        if a + b + c > 1 and b + c - a < 1 and a + c - b < 1 and a + b - c < 1:
            return triple


def random_structure(
    t: Triangulation, geometry: GeometryClass, rng: random.Random
) -> AngleStructure:
    """Structure whose every face carries the requested geometry class."""
    samplers = {
        GeometryClass.EUCLIDEAN: _euclidean_triple,
        GeometryClass.HYPERBOLIC: _hyperbolic_triple,
        GeometryClass.SPHERICAL: _spherical_triple,
    }
    sampler = samplers[geometry]
    values = {}
    for f in range(t.n_faces):
        triple = sampler(rng)
        for k in range(3):
            values[Corner(f, k)] = RatPi(triple[k])
    return AngleStructure(values)


def random_hyperbolic_delaunay_domain(t: Triangulation, rng: random.Random) -> AngleStructure:
    """Hyperbolic structure whose Delaunay invariant is guaranteed positive.

    Near-equilateral triples keep every x_j + x_k - x_i strictly positive,
    so each edge's invariant sums two positive terms.
    """
    values = {}
    for f in range(t.n_faces):
        p, q, r = (rng.randint(8, 12) for _ in range(3))
        scale_den = rng.randint(2, 40)
        scale = Fraction(rng.randint(1, scale_den - 1), scale_den)
        total = p + q + r
        triple = [Fraction(p, total) * scale, Fraction(q, total) * scale, Fraction(r, total) * scale]
        for k in range(3):
            values[Corner(f, k)] = RatPi(triple[k])
    return AngleStructure(values)


def random_spherical_edge_domain(t: Triangulation, rng: random.Random) -> AngleStructure:
    """Spherical structure whose edge invariant stays below pi.

    Angles in (pi/3, pi/2) force the face sum above pi, every pairwise
    deficit below pi, and every facing pair below pi.
    """
    values = {}
    for f in range(t.n_faces):
        for k in range(3):
            values[Corner(f, k)] = RatPi(rng.randint(41, 59), 120)
    return AngleStructure(values)


def random_edge_values(
    t: Triangulation,
    rng: random.Random,
    lo: Fraction,
    hi: Fraction,
    kind: InvariantKind,
    max_denominator: int = 40,
) -> EdgeFunction:
    """Independent per-edge rationals strictly inside (lo, hi), in pi-units."""
    values = {}
    for e in range(t.n_edges):
        while True:
            den = rng.randint(1, max_denominator)
            low = lo * den
            high = hi * den
            num_min = low.numerator // low.denominator + 1
            num_max = -((-high.numerator) // high.denominator) - 1
            if num_min > num_max:
                continue
            num = rng.randint(num_min, num_max)
            value = Fraction(num, den)
            if lo < value < hi:
                values[e] = RatPi(value)
                break
    return EdgeFunction(values, kind)
