"""Half-edge representation of a weighted combinatorial surface.

Half-edges come in pairs: edge ``e`` owns half-edges ``2e`` and ``2e + 1`` and
``twin(h) == h ^ 1``.  Every half-edge belongs to exactly one face; faces are
counterclockwise, so the face containing a half-edge lies to its left.  Holes
are explicit faces flagged as boundary faces.

The rotation at a vertex walks its outgoing half-edges with
``rotate(h) = next(twin(h))``.  The corner of ``face(h)`` at ``origin(h)`` sits
between ``rotate^-1(h)`` and ``h``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    CycleNotInGraph,
    Disconnected,
    NegativeWeight,
    NonManifold,
    NonOrientable,
    NotSimple,
    OddGenusFormula,
    ParseError,
    SurfaceError,
)

Dart = tuple[int, int, int]  # (tail, head, edge id)

LEFT, NONE, RIGHT = 1, 0, -1


@dataclass
class HalfEdgeArrays:
    """Flat numpy view of a half-edge structure.

    Unlike :class:`Surface`, ``twin`` is stored explicitly so glued spaces can
    reuse the same layout.
    """

    n_vertices: int
    origin: np.ndarray
    twin: np.ndarray
    next: np.ndarray
    face: np.ndarray
    face_boundary: np.ndarray
    edge: np.ndarray
    weight: np.ndarray

    @property
    def n_edges(self) -> int:
        return len(self.weight)

    def head(self, h):
        return self.origin[self.twin[h]]

    def rotate(self, h):
        return self.next[self.twin[h]]


class Surface:
    """Immutable weighted combinatorial surface.

    Build instances with :meth:`from_darts` (internal, allows parallel edges)
    or :func:`build_from_faces` (validated public input).
    """

    def __init__(self, n_vertices, origin, nxt, face, face_he, face_boundary,
                 weights, scale=1, layout=None):
        self.n_vertices: int = n_vertices
        self.origin: list[int] = origin
        self.next: list[int] = nxt
        self.face: list[int] = face
        self.face_he: list[int] = face_he
        self.face_boundary: list[bool] = face_boundary
        self.weights: list[int] = weights
        self.scale: int = scale
        self.layout: dict[int, tuple[float, float]] | None = layout
        self._cache: dict = {}

    # ------------------------------------------------------------------ build
    @classmethod
    def from_darts(cls, n_vertices: int, faces: Sequence[Sequence[Dart]],
                   weights: Sequence[int], *, scale: int = 1, layout=None,
                   check_connected: bool = True) -> "Surface":
        """Build from the darts of the real faces.

        Edge ids must be dense ``0..len(weights)-1``.  An edge used by one face
        only becomes a boundary edge; boundary faces are traced automatically.
        """
        n_edges = len(weights)
        origin = [-1] * (2 * n_edges)
        nxt = [-1] * (2 * n_edges)
        face = [-1] * (2 * n_edges)
        uses = [0] * n_edges
        face_he: list[int] = []
        face_boundary: list[bool] = []
        for fi, darts in enumerate(faces):
            if len(darts) < 1:
                raise NonManifold(f"face {fi} is empty")
            hs = []
            for t, hd, e in darts:
                if t == hd:
                    raise NonManifold(f"self-loop at vertex {t} (edge {e})")
                if not 0 <= e < n_edges:
                    raise SurfaceError(f"edge id {e} out of range")
                u = uses[e]
                if u == 0:
                    h = 2 * e
                    origin[h] = t
                    origin[h + 1] = hd
                elif u == 1:
                    h = 2 * e + 1
                    if origin[h] != t or origin[h - 1] != hd:
                        if origin[h - 1] == t and origin[h] == hd:
                            raise NonOrientable(
                                f"edge {{{t},{hd}}} is used twice in the same direction")
                        raise NonManifold(f"edge {e} used with mismatched endpoints")
                else:
                    raise NonManifold(f"edge {e} lies on more than two faces")
                uses[e] = u + 1
                face[h] = fi
                hs.append(h)
            for i, h in enumerate(hs):
                h2 = hs[(i + 1) % len(hs)]
                if origin[h ^ 1] != origin[h2]:
                    raise SurfaceError(f"face {fi} is not a closed walk")
                nxt[h] = h2
            face_he.append(hs[0])
            face_boundary.append(False)

        for e in range(n_edges):
            if uses[e] == 0:
                raise SurfaceError(f"edge {e} is not used by any face")

        # boundary half-edges: twins of edges used once
        out_boundary: dict[int, int] = {}
        bhs = []
        for e in range(n_edges):
            if uses[e] == 1:
                h = 2 * e + 1
                v = origin[h]
                if v in out_boundary:
                    raise NonManifold(f"vertex {v} is pinched (two boundary passes)")
                out_boundary[v] = h
                bhs.append(h)
        for h in bhs:
            nxt[h] = out_boundary[origin[h ^ 1]]
        for h in bhs:
            if face[h] != -1:
                continue
            fi = len(face_he)
            face_he.append(h)
            face_boundary.append(True)
            g = h
            while face[g] == -1:
                face[g] = fi
                g = nxt[g]

        surf = cls(n_vertices, origin, nxt, face, face_he, face_boundary,
                   list(weights), scale, layout)
        surf._check_rotations()
        if check_connected:
            count, _ = surf.connected_components()
            if count != 1:
                raise Disconnected(f"surface has {count} components")
        return surf

    def _check_rotations(self) -> None:
        start = [-1] * self.n_vertices
        degree = [0] * self.n_vertices
        origin = self.origin
        for h, v in enumerate(origin):
            if v < 0 or v >= self.n_vertices:
                raise SurfaceError(f"half-edge {h} has invalid origin {v}")
            degree[v] += 1
            if start[v] < 0:
                start[v] = h
        nxt = self.next
        for v in range(self.n_vertices):
            h0 = start[v]
            if h0 < 0:
                raise Disconnected(f"vertex {v} is isolated")
            count = 1
            h = nxt[h0 ^ 1]
            while h != h0:
                count += 1
                if count > degree[v]:
                    raise SurfaceError("rotation walk does not close")
                h = nxt[h ^ 1]
            if count != degree[v]:
                raise NonManifold(
                    f"corners at vertex {v} do not form a single rotation cycle")
        self._cache["vertex_he"] = start

    # -------------------------------------------------------------- basics
    @property
    def n_edges(self) -> int:
        return len(self.weights)

    @property
    def n_faces(self) -> int:
        return len(self.face_he)

    @property
    def n_real_faces(self) -> int:
        return sum(1 for b in self.face_boundary if not b)

    @property
    def boundary_count(self) -> int:
        return sum(1 for b in self.face_boundary if b)

    @property
    def is_closed(self) -> bool:
        return self.boundary_count == 0

    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_real_faces

    @property
    def genus(self) -> int:
        return genus(self)

    def head(self, h: int) -> int:
        return self.origin[h ^ 1]

    def rotate(self, h: int) -> int:
        return self.next[h ^ 1]

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.origin[2 * e], self.origin[2 * e + 1]

    def is_boundary_edge(self, e: int) -> bool:
        fb = self.face_boundary
        return fb[self.face[2 * e]] or fb[self.face[2 * e + 1]]

    @property
    def vertex_he(self) -> list[int]:
        return self._cache["vertex_he"]

    def rotation(self, v: int) -> list[int]:
        """Outgoing half-edges of ``v`` in rotation order."""
        h0 = self.vertex_he[v]
        out = [h0]
        nxt = self.next
        h = nxt[h0 ^ 1]
        while h != h0:
            out.append(h)
            h = nxt[h ^ 1]
        return out

    def degree(self, v: int) -> int:
        return len(self.rotation(v))

    def face_half_edges(self, f: int) -> list[int]:
        h0 = self.face_he[f]
        out = [h0]
        h = self.next[h0]
        while h != h0:
            out.append(h)
            h = self.next[h]
        return out

    def face_vertices(self, f: int) -> list[int]:
        return [self.origin[h] for h in self.face_half_edges(f)]

    def face_darts(self, f: int) -> list[Dart]:
        o = self.origin
        return [(o[h], o[h ^ 1], h >> 1) for h in self.face_half_edges(f)]

    def real_faces(self) -> list[int]:
        return [f for f, b in enumerate(self.face_boundary) if not b]

    def boundary_faces(self) -> list[int]:
        return [f for f, b in enumerate(self.face_boundary) if b]

    def total_weight(self) -> int:
        return sum(self.weights)

    def adjacency(self) -> list[list[tuple[int, int, int]]]:
        """Per vertex: ``(neighbour, weight, half-edge)`` for outgoing half-edges."""
        adj = self._cache.get("adj")
        if adj is None:
            adj = [[] for _ in range(self.n_vertices)]
            o, w = self.origin, self.weights
            for h, v in enumerate(o):
                adj[v].append((o[h ^ 1], w[h >> 1], h))
            self._cache["adj"] = adj
        return adj

    def half_edge_between(self, u: int, v: int) -> int | None:
        """Lowest-id half-edge from ``u`` to ``v``, or None."""
        table = self._cache.get("pairs")
        if table is None:
            table = {}
            o = self.origin
            for h in range(len(o) - 1, -1, -1):
                table[(o[h], o[h ^ 1])] = h
            self._cache["pairs"] = table
        return table.get((u, v))

    def arrays(self) -> HalfEdgeArrays:
        arr = self._cache.get("arrays")
        if arr is None:
            m = len(self.origin)
            idx = np.arange(m, dtype=np.int64)
            arr = HalfEdgeArrays(
                n_vertices=self.n_vertices,
                origin=np.asarray(self.origin, dtype=np.int64),
                twin=idx ^ 1,
                next=np.asarray(self.next, dtype=np.int64),
                face=np.asarray(self.face, dtype=np.int64),
                face_boundary=np.asarray(self.face_boundary, dtype=bool),
                edge=idx >> 1,
                weight=np.asarray(self.weights, dtype=np.int64),
            )
            self._cache["arrays"] = arr
        return arr

    def connected_components(self) -> tuple[int, list[int]]:
        label = [-1] * self.n_vertices
        adj = self.adjacency()
        count = 0
        for s in range(self.n_vertices):
            if label[s] >= 0:
                continue
            label[s] = count
            stack = [s]
            while stack:
                v = stack.pop()
                for u, _, _ in adj[v]:
                    if label[u] < 0:
                        label[u] = count
                        stack.append(u)
            count += 1
        return count, label

    def boundary_walks(self) -> list[list[int]]:
        """Half-edge cycles of the boundary faces."""
        return [self.face_half_edges(f) for f in self.boundary_faces()]

    def walk_length(self, half_edges: Iterable[int]) -> int:
        w = self.weights
        return sum(w[h >> 1] for h in half_edges)

    def half_edges_from_vertices(self, vertices: Sequence[int]) -> list[int]:
        """Closed vertex sequence to half-edges (lightest edge between each pair)."""
        out = []
        k = len(vertices)
        for i in range(k):
            u, v = vertices[i], vertices[(i + 1) % k]
            h = self.lightest_half_edge(u, v)
            if h is None:
                raise CycleNotInGraph(f"no edge between {u} and {v}")
            out.append(h)
        return out

    def lightest_half_edge(self, u: int, v: int) -> int | None:
        best = None
        for nb, w, h in self.adjacency()[u] if 0 <= u < self.n_vertices else ():
            if nb == v and (best is None or (w, h) < best[0]):
                best = ((w, h), h)
        return None if best is None else best[1]

    # ------------------------------------------------------------- surgery
    def cut_edges(self, cut: Iterable[int]) -> "CutResult":
        return cut_edges(self, cut)

    def delete_vertices(self, doomed: Iterable[int]) -> "SubSurface":
        return delete_vertices(self, doomed)


def genus(surface: Surface) -> int:
    """Genus from Euler's formula; raises OddGenusFormula on corruption."""
    num = 2 - surface.euler_characteristic() - surface.boundary_count
    if num % 2:
        raise OddGenusFormula(
            f"2 - chi - b = {num} is odd (chi={surface.euler_characteristic()}, "
            f"b={surface.boundary_count})")
    return num // 2


def euler_characteristic(surface: Surface) -> int:
    return surface.euler_characteristic()


# --------------------------------------------------------------------- input
def parse_weight(token) -> Fraction:
    try:
        value = Fraction(Decimal(str(token)))
    except (InvalidOperation, ValueError) as exc:
        raise ParseError(f"bad weight {token!r}") from exc
    return value


def scale_weights(values: Iterable[Fraction]) -> int:
    den = 1
    for v in values:
        den = lcm(den, v.denominator)
    return den


def build_from_faces(face_vertex_lists: Sequence[Sequence[int]],
                     weights: Mapping[tuple[int, int], object] | None = None,
                     n_vertices: int | None = None,
                     layout: Mapping[int, tuple[float, float]] | None = None) -> Surface:
    """Validated construction from counterclockwise vertex lists.

    Weights are keyed by vertex pair (either order) and may be ints, decimals
    or decimal strings; they are scaled to integers by their least common
    denominator.  Missing weights default to 1.
    """
    if n_vertices is None:
        n_vertices = 1 + max((v for f in face_vertex_lists for v in f), default=-1)
    pair_id: dict[frozenset, int] = {}
    faces: list[list[Dart]] = []
    for fi, verts in enumerate(face_vertex_lists):
        if len(verts) < 3:
            raise NonManifold(f"face {fi} has fewer than 3 vertices")
        if len(set(verts)) != len(verts):
            raise NonManifold(f"face {fi} repeats a vertex")
        darts = []
        for i, u in enumerate(verts):
            v = verts[(i + 1) % len(verts)]
            if not (0 <= u < n_vertices):
                raise SurfaceError(f"vertex {u} out of range")
            key = frozenset((u, v))
            e = pair_id.setdefault(key, len(pair_id))
            darts.append((u, v, e))
        faces.append(darts)

    raw = [Fraction(1)] * len(pair_id)
    for (u, v), value in (weights or {}).items():
        e = pair_id.get(frozenset((u, v)))
        if e is None:
            raise CycleNotInGraph(f"weight given for non-edge {{{u},{v}}}")
        w = value if isinstance(value, Fraction) else parse_weight(value)
        if w < 0:
            raise NegativeWeight(f"edge {{{u},{v}}} has negative weight {value}")
        raw[e] = w
    scale = scale_weights(raw)
    ints = [int(w * scale) for w in raw]
    # a vertex appearing in no face is isolated
    seen = {v for f in face_vertex_lists for v in f}
    if len(seen) != n_vertices:
        missing = min(set(range(n_vertices)) - seen)
        raise Disconnected(f"vertex {missing} lies on no face")
    return Surface.from_darts(n_vertices, faces, ints, scale=scale,
                              layout=dict(layout) if layout else None)


def parse_surf(text: str) -> Surface:
    """Parse the ``.surf`` text format."""
    n_vertices = None
    faces: list[list[int]] = []
    weights: dict[tuple[int, int], Fraction] = {}
    weight_lines: dict[tuple[int, int], int] = {}
    layout: dict[int, tuple[float, float]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind, args = parts[0], parts[1:]
        try:
            if kind == "v":
                if len(args) != 1:
                    raise ParseError("expected 'v <count>'", lineno)
                n_vertices = int(args[0])
                if n_vertices < 1:
                    raise ParseError("vertex count must be positive", lineno)
            elif kind == "f":
                if len(args) < 3:
                    raise ParseError("a face needs at least 3 vertices", lineno)
                faces.append([int(a) for a in args])
            elif kind == "w":
                if len(args) != 3:
                    raise ParseError("expected 'w <u> <v> <weight>'", lineno)
                u, v = int(args[0]), int(args[1])
                w = parse_weight(args[2])
                if w < 0:
                    raise NegativeWeight(f"line {lineno}: negative weight {args[2]}")
                weights[(u, v)] = w
                weight_lines[(u, v)] = lineno
            elif kind == "layout":
                if len(args) != 3:
                    raise ParseError("expected 'layout <v> <x> <y>'", lineno)
                layout[int(args[0])] = (float(args[1]), float(args[2]))
            else:
                raise ParseError(f"unknown directive {kind!r}", lineno)
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from exc
        except ParseError as exc:
            if exc.line is None:
                raise ParseError(str(exc), lineno) from exc
            raise
    if n_vertices is None:
        raise ParseError("missing 'v <count>' line")
    for f in faces:
        for v in f:
            if not 0 <= v < n_vertices:
                raise ParseError(f"vertex {v} out of range 0..{n_vertices - 1}")
    edges = {frozenset((f[i], f[(i + 1) % len(f)])) for f in faces for i in range(len(f))}
    for pair, lineno in weight_lines.items():
        if frozenset(pair) not in edges:
            raise ParseError(f"weight for non-edge {pair}", lineno)
    return build_from_faces(faces, weights, n_vertices, layout or None)


def load_surf(path) -> Surface:
    with open(path, encoding="utf-8") as fh:
        return parse_surf(fh.read())


def format_decimal(value: Fraction) -> str:
    """Exact decimal rendering of a fraction with a terminating expansion."""
    for digits in range(40):
        scaled = value * 10 ** digits
        if scaled.denominator == 1:
            break
    else:
        return str(float(value))
    n = int(scaled)
    if digits == 0:
        return str(n)
    sign = "-" if n < 0 else ""
    s = str(abs(n)).rjust(digits + 1, "0")
    return f"{sign}{s[:-digits]}.{s[-digits:]}".rstrip("0").rstrip(".")


def serialize(surface: Surface, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines += [f"# {c}" for c in comment.splitlines()]
    lines.append(f"v {surface.n_vertices}")
    for f in surface.real_faces():
        lines.append("f " + " ".join(map(str, surface.face_vertices(f))))
    for e, w in enumerate(surface.weights):
        if w != surface.scale:
            u, v = surface.endpoints(e)
            lines.append(f"w {u} {v} {format_decimal(Fraction(w, surface.scale))}")
    if surface.layout:
        for v in sorted(surface.layout):
            x, y = surface.layout[v]
            lines.append(f"layout {v} {x:g} {y:g}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------- dual
@dataclass
class DualGraph:
    """One vertex per real face, plus one per boundary edge."""

    n_vertices: int
    edges: list[tuple[int, int]]
    face_vertex: dict[int, int]
    boundary_edge_vertex: dict[int, int] = field(default_factory=dict)


def dual(surface: Surface) -> DualGraph:
    face_vertex = {f: i for i, f in enumerate(surface.real_faces())}
    n = len(face_vertex)
    bvert: dict[int, int] = {}
    edges = []
    fb = surface.face_boundary
    for e in range(surface.n_edges):
        ends = []
        for h in (2 * e, 2 * e + 1):
            f = surface.face[h]
            if fb[f]:
                if e not in bvert:
                    bvert[e] = n
                    n += 1
                ends.append(bvert[e])
            else:
                ends.append(face_vertex[f])
        edges.append((ends[0], ends[1]))
    return DualGraph(n, edges, face_vertex, bvert)


def graph_components(n: int, edges: Iterable[tuple[int, int]]) -> tuple[int, list[int]]:
    """Components of an abstract graph on vertices ``0..n-1``."""
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    roots: dict[int, int] = {}
    labels = [roots.setdefault(find(v), len(roots)) for v in range(n)]
    return len(roots), labels


def connected_components(obj) -> tuple[int, list[int]]:
    if isinstance(obj, Surface):
        return obj.connected_components()
    n, edges = obj
    return graph_components(n, edges)


# --------------------------------------------------------------------- cutting
@dataclass
class CutResult:
    surface: Surface
    vertex_map: list[int]          # new vertex -> old vertex
    edge_map: list[int]            # new edge -> old edge
    corner_vertex: list[int]       # old half-edge -> new vertex at its corner (-1 on holes)
    side_edge: dict[int, int]      # old half-edge of a cut edge -> new edge on its side


def cut_edges(surface: Surface, cut: Iterable[int]) -> CutResult:
    """Cut the surface open along a set of edges.

    Around each vertex, the corners of real faces are grouped into wedges;
    consecutive corners are separated by cut half-edges and by hole corners.
    Each wedge becomes its own vertex and each interior cut edge becomes two
    edges, one per side.
    """
    cut_set = set(cut)
    s = surface
    fb, face, nxt, origin = s.face_boundary, s.face, s.next, s.origin
    corner_vertex = [-1] * len(origin)
    vertex_map: list[int] = []
    touched = set()
    for e in cut_set:
        touched.add(origin[2 * e])
        touched.add(origin[2 * e + 1])
    for v in range(s.n_vertices):
        rot = s.rotation(v)
        if v not in touched:
            nid = len(vertex_map)
            vertex_map.append(v)
            for h in rot:
                if not fb[face[h]]:
                    corner_vertex[h] = nid
            continue
        d = len(rot)
        # a split sits before rot[i] when rot[i-1] is cut or corner(rot[i]) is a hole
        def split_before(i):
            hp = rot[i - 1]
            return (hp >> 1) in cut_set or fb[face[rot[i]]] or fb[face[hp]]
        start = next(i for i in range(d) if split_before(i))
        current = -1
        for k in range(d):
            i = (start + k) % d
            h = rot[i]
            if fb[face[h]]:
                current = -1
                continue
            if current < 0 or split_before(i):
                current = len(vertex_map)
                vertex_map.append(v)
            corner_vertex[h] = current

    edge_map: list[int] = []
    side_edge: dict[int, int] = {}
    new_id = [-1] * s.n_edges
    for e in range(s.n_edges):
        if e in cut_set and not s.is_boundary_edge(e):
            side_edge[2 * e] = len(edge_map)
            edge_map.append(e)
            side_edge[2 * e + 1] = len(edge_map)
            edge_map.append(e)
        else:
            new_id[e] = len(edge_map)
            edge_map.append(e)
            if e in cut_set:
                for h in (2 * e, 2 * e + 1):
                    side_edge[h] = new_id[e]
    faces = []
    for f in s.real_faces():
        darts = []
        for h in s.face_half_edges(f):
            e = h >> 1
            ne = side_edge[h] if new_id[e] < 0 else new_id[e]
            darts.append((corner_vertex[h], corner_vertex[nxt[h]], ne))
        faces.append(darts)
    weights = [s.weights[e] for e in edge_map]
    new = Surface.from_darts(len(vertex_map), faces, weights, scale=s.scale,
                             check_connected=False)
    return CutResult(new, vertex_map, edge_map, corner_vertex, side_edge)


@dataclass
class SubSurface:
    surface: Surface
    vertex_map: list[int]   # new -> old
    edge_map: list[int]     # new -> old
    old_to_new_vertex: dict[int, int]


def delete_vertices(surface: Surface, doomed: Iterable[int]) -> SubSurface:
    """Remove vertices together with every face incident to them."""
    doomed = set(doomed)
    keep_faces = []
    for f in surface.real_faces():
        darts = surface.face_darts(f)
        if any(t in doomed for t, _, _ in darts):
            continue
        keep_faces.append(darts)
    vmap: dict[int, int] = {}
    emap: dict[int, int] = {}
    faces = []
    for darts in keep_faces:
        nd = []
        for t, hd, e in darts:
            for v in (t, hd):
                if v not in vmap:
                    vmap[v] = len(vmap)
            if e not in emap:
                emap[e] = len(emap)
            nd.append((vmap[t], vmap[hd], emap[e]))
        faces.append(nd)
    vertex_map = [0] * len(vmap)
    for old, new in vmap.items():
        vertex_map[new] = old
    edge_map = [0] * len(emap)
    for old, new in emap.items():
        edge_map[new] = old
    weights = [surface.weights[e] for e in edge_map]
    new = Surface.from_darts(len(vmap), faces, weights, scale=surface.scale,
                             check_connected=False)
    return SubSurface(new, vertex_map, edge_map, vmap)


# -------------------------------------------------------------------- cycles
@dataclass(frozen=True)
class SidedCycle:
    """Closed walk given as half-edges; ``sides`` tags loop edges LEFT/RIGHT."""

    half_edges: tuple[int, ...]
    sides: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.sides is None:
            object.__setattr__(self, "sides", (NONE,) * len(self.half_edges))
        if len(self.sides) != len(self.half_edges):
            raise ValueError("sides and half_edges differ in length")

    def __len__(self):
        return len(self.half_edges)

    def vertices(self, surface: Surface) -> list[int]:
        return [surface.origin[h] for h in self.half_edges]

    def edges(self) -> list[int]:
        return [h >> 1 for h in self.half_edges]

    def length(self, surface: Surface) -> int:
        return surface.walk_length(self.half_edges)

    def validate(self, surface: Surface) -> None:
        hs = self.half_edges
        if not hs:
            raise CycleNotInGraph("empty cycle")
        m = len(surface.origin)
        for i, h in enumerate(hs):
            if not 0 <= h < m:
                raise CycleNotInGraph(f"half-edge {h} not in graph")
            if surface.head(h) != surface.origin[hs[(i + 1) % len(hs)]]:
                raise CycleNotInGraph("consecutive edges do not share a vertex")

    @classmethod
    def from_vertices(cls, surface: Surface, vertices: Sequence[int]) -> "SidedCycle":
        return cls(tuple(surface.half_edges_from_vertices(vertices)))


def cut_along_simple_cycle(surface: Surface, cycle: SidedCycle) -> CutResult:
    cycle.validate(surface)
    verts = cycle.vertices(surface)
    if len(set(verts)) != len(verts) or len(set(cycle.edges())) != len(verts):
        raise NotSimple("cycle repeats a vertex")
    if all(surface.is_boundary_edge(e) for e in cycle.edges()):
        faces = {surface.face[h] for h in cycle.half_edges} | {
            surface.face[h ^ 1] for h in cycle.half_edges}
        if any(surface.face_boundary[f] for f in faces) and len(cycle) == len(
                [h for f in faces if surface.face_boundary[f]
                 for h in surface.face_half_edges(f)]):
            raise NotSimple("cycle is a boundary walk")
    return cut_edges(surface, cycle.edges())
