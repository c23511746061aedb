"""Surface generators: grid tori, polygon-schema surfaces and small fixtures."""
from __future__ import annotations

import math
import random

from .errors import TooSmall
from .surface import Surface, build_from_faces


def _random_weights(faces, seed, lo, hi):
    rng = random.Random(seed)
    weights = {}
    for f in faces:
        for i, u in enumerate(f):
            v = f[(i + 1) % len(f)]
            key = (min(u, v), max(u, v))
            if key not in weights:
                weights[key] = rng.randint(lo, hi)
    return weights


def grid_torus(rows: int, cols: int, weights: str = "unit", seed: int = 0,
               lo: int = 1, hi: int = 9) -> Surface:
    """Quad mesh of the torus; vertex ``r * cols + c`` sits at ``(c, r)``."""
    if rows < 3 or cols < 3:
        raise TooSmall("grid torus needs at least 3 rows and 3 columns")
    vid = lambda r, c: (r % rows) * cols + (c % cols)
    faces = [[vid(r, c), vid(r, c + 1), vid(r + 1, c + 1), vid(r + 1, c)]
             for r in range(rows) for c in range(cols)]
    w = _random_weights(faces, seed, lo, hi) if weights == "random" else None
    layout = {vid(r, c): (float(c), float(r)) for r in range(rows) for c in range(cols)}
    return build_from_faces(faces, w, rows * cols, layout)


def grid_cylinder_faces(rows: int, cols: int) -> list[list[int]]:
    """Faces of an annulus: ``cols`` vertices around, ``rows`` rings."""
    vid = lambda r, c: r * cols + (c % cols)
    return [[vid(r, c), vid(r, c + 1), vid(r + 1, c + 1), vid(r + 1, c)]
            for r in range(rows - 1) for c in range(cols)]


def grid_cylinder(rows: int, cols: int, weights: str = "unit", seed: int = 0,
                  lo: int = 1, hi: int = 9, diagonals: bool = False) -> Surface:
    if cols < 3 or rows < 2:
        raise TooSmall("cylinder needs at least 3 columns and 2 rings")
    faces = grid_cylinder_faces(rows, cols)
    if diagonals:
        rng = random.Random(seed + 7919)
        tri = []
        for a, b, c, d in faces:
            if rng.random() < 0.5:
                tri += [[a, b, c], [a, c, d]]
            else:
                tri += [[a, b, d], [b, c, d]]
        faces = tri
    w = _random_weights(faces, seed, lo, hi) if weights == "random" else None
    layout = {r * cols + c: (float(c), float(r)) for r in range(rows) for c in range(cols)}
    return build_from_faces(faces, w, rows * cols, layout)


def dumbbell(size: int, neck: int = 1, weights: str = "unit", seed: int = 0,
             lo: int = 1, hi: int = 9) -> Surface:
    """Two ``size x size`` grid tori joined by a square tube of ``neck`` bands.

    Genus 2; the tube's waist is a separating non-contractible 4-cycle.
    """
    if size < 3 or neck < 1:
        raise TooSmall("dumbbell needs size >= 3 and neck >= 1")
    per = size * size
    vid = lambda t, r, c: t * per + (r % size) * size + (c % size)
    faces = []
    for t in range(2):
        faces += [[vid(t, r, c), vid(t, r, c + 1), vid(t, r + 1, c + 1), vid(t, r + 1, c)]
                  for r in range(size) for c in range(size) if (r, c) != (0, 0)]
    hole_a = [vid(0, 0, 0), vid(0, 0, 1), vid(0, 1, 1), vid(0, 1, 0)]
    hole_b = [vid(1, 0, 0), vid(1, 0, 1), vid(1, 1, 1), vid(1, 1, 0)]
    rings = [hole_a]
    n = 2 * per
    for _ in range(neck - 1):
        rings.append(list(range(n, n + 4)))
        n += 4
    rings.append([hole_b[0], hole_b[3], hole_b[2], hole_b[1]])
    for k in range(neck):
        a, b = rings[k], rings[k + 1]
        faces += [[a[c], a[(c + 1) % 4], b[(c + 1) % 4], b[c]] for c in range(4)]
    w = _random_weights(faces, seed, lo, hi) if weights == "random" else None
    return build_from_faces(faces, w, n)


def cube() -> Surface:
    faces = [[0, 3, 2, 1], [4, 5, 6, 7], [0, 1, 5, 4],
             [1, 2, 6, 5], [2, 3, 7, 6], [3, 0, 4, 7]]
    return build_from_faces(faces)


def triangle() -> Surface:
    return build_from_faces([[0, 1, 2]])


def schema_faces(genus: int, subdiv: int):
    """Triangulated 4g-gon with sides a1 b1 a1^-1 b1^-1 ... identified.

    Each polygon side gets ``subdiv`` subdivision points.  Inside the boundary
    ring sit concentric rings and a centre vertex: one ring of ``4g`` vertices
    when ``subdiv == 2`` (the smallest simple mesh), otherwise ``subdiv - 1``
    rings of half the boundary length.  Returns ``(faces, n_vertices, layout)``.
    """
    if genus < 1:
        raise TooSmall("schema surfaces need genus >= 1")
    if subdiv < 2:
        raise TooSmall("schema surfaces need at least 2 subdivision points")
    g, m = genus, subdiv + 1           # m segments per side
    n_sides = 4 * g
    big = n_sides * m
    ids: dict[tuple, int] = {}

    def new(key):
        return ids.setdefault(key, len(ids))

    corner = new(("corner",))
    pos_vertex = [0] * big
    for side in range(n_sides):
        block, kind = divmod(side, 4)   # kind: 0=a, 1=b, 2=a^-1, 3=b^-1
        for t in range(m):
            p = side * m + t
            if t == 0:
                pos_vertex[p] = corner
            elif kind < 2:
                pos_vertex[p] = new(("side", block, kind, t))
            else:
                pos_vertex[p] = new(("side", block, kind - 2, m - t))
    if subdiv == 2:
        step, n_rings = m, 1
    else:
        step, n_rings = 2, subdiv - 1
    size = big // step
    rings = [[new(("ring", r, i)) for i in range(size)] for r in range(n_rings)]
    centre = new(("centre",))

    faces = []
    outer = rings[0]
    # inner vertex j sees boundary positions j*step+1 .. j*step+step+1, which
    # contain exactly one polygon corner, so the mesh stays simple
    for j in range(size):
        u, u_next = outer[j], outer[(j + 1) % size]
        base = j * step + 1
        for t in range(step):
            a, b = pos_vertex[(base + t) % big], pos_vertex[(base + t + 1) % big]
            faces.append([a, b, u])
        faces.append([pos_vertex[(base + step) % big], u_next, u])
    for r in range(n_rings - 1):
        A, B = rings[r], rings[r + 1]
        for j in range(size):
            a, a2 = A[j], A[(j + 1) % size]
            b, b2 = B[j], B[(j + 1) % size]
            faces.append([a, a2, b2])
            faces.append([a, b2, b])
    last = rings[-1]
    for j in range(size):
        faces.append([last[j], last[(j + 1) % size], centre])

    layout = {}
    for p in range(big):
        ang = 2 * math.pi * p / big
        layout.setdefault(pos_vertex[p], (math.cos(ang), math.sin(ang)))
    for r, ring in enumerate(rings):
        rad = 1 - (r + 1) / (n_rings + 1)
        for j, v in enumerate(ring):
            ang = 2 * math.pi * (j * step + 1 + step / 2) / big
            layout[v] = (rad * math.cos(ang), rad * math.sin(ang))
    layout[centre] = (0.0, 0.0)
    return faces, len(ids), layout


def schema_surface(genus: int, subdiv: int, weights: str = "unit", seed: int = 0,
                   lo: int = 1, hi: int = 9) -> Surface:
    faces, n, layout = schema_faces(genus, subdiv)
    w = _random_weights(faces, seed, lo, hi) if weights == "random" else None
    return build_from_faces(faces, w, n, layout)


def remove_face(surface: Surface, face: int) -> Surface:
    """Same surface with one real face turned into a hole."""
    faces = [surface.face_vertices(f) for f in surface.real_faces() if f != face]
    weights = {surface.endpoints(e): surface.weights[e] for e in range(surface.n_edges)}
    from fractions import Fraction
    scaled = {k: Fraction(w, surface.scale) for k, w in weights.items()}
    return build_from_faces(faces, scaled, surface.n_vertices, surface.layout)
