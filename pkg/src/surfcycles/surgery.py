"""Surface surgeries used before unrolling the universal cover.

* :func:`split_loops` makes the loops of a tree-cotree system pairwise
  disjoint away from the basepoint by duplicating shared tree paths and
  joining the duplicates with zero-weight edges.
* :func:`blow_up_basepoint` replaces the basepoint by a small disk: heavy
  spokes, a zero-weight ring, outer halves with the original weights.
* :func:`close_boundaries` caps every hole with a one-holed torus whose
  interior edges are heavy.

Each surgery returns a :class:`StageMap` that projects closed walks back to
the input surface.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import DegreeTooSmall, UsesHeavyEdge
from .loops import Loop, ShortestPathTree, SystemOfLoops
from .surface import Surface

COLLAPSE = -1   # zero-weight helper edge: both ends map to one source vertex
HEAVY = -2      # spoke or capping edge: never part of a projected answer
SYNTHETIC = -1  # vertex without a source vertex (capping gadgets)


@dataclass
class StageMap:
    source: Surface
    target: Surface
    vertex_map: list[int]
    edge_map: list[int]
    big_weight: int = 0
    kind: str = ""

    def project_walk(self, half_edges, strict: bool = True) -> list[int]:
        """Map a closed walk of the target to a closed walk of the source.

        Collapsing edges vanish; heavy edges raise UsesHeavyEdge (or are
        reported as ``None`` entries when ``strict`` is false).
        """
        out = []
        t, s = self.target, self.source
        for h in half_edges:
            e = h >> 1
            m = self.edge_map[e]
            if m == COLLAPSE:
                continue
            if m == HEAVY:
                if strict:
                    raise UsesHeavyEdge(f"walk uses heavy {self.kind} edge {e}")
                out.append(None)
                continue
            a = self.vertex_map[t.origin[h]]
            out.append(2 * m if s.origin[2 * m] == a else 2 * m + 1)
        return out


def project_chain(half_edges, stages: list[StageMap]) -> list[int]:
    """Project through stages given in application order (last applied last)."""
    walk = list(half_edges)
    for st in reversed(stages):
        walk = st.project_walk(walk)
    return walk


# ------------------------------------------------------------------ splitting
@dataclass
class SplitResult:
    surface: Surface
    loops: SystemOfLoops
    stage: StageMap
    new_vertices: int
    new_edges: int
    copies: dict[int, list[int]]          # original vertex -> its copies in order
    rungs: dict[tuple[int, int], int]     # (vertex, k) -> edge joining copies k, k+1

    def zero_path(self, a: int, b: int) -> list[int]:
        """Half-edges along rungs from copy ``a`` to copy ``b`` of one vertex."""
        w = self.stage.vertex_map[a]
        if a == b:
            return []
        ids = self.copies[w]
        ka, kb = ids.index(a), ids.index(b)
        step = 1 if kb > ka else -1
        out = []
        for k in range(ka, kb, step):
            e = self.rungs[(w, min(k, k + step))]
            h = 2 * e
            out.append(h if self.surface.origin[h] == ids[k] else h ^ 1)
        return out


def split_loops(surface: Surface, loops: SystemOfLoops, tree: ShortestPathTree) -> SplitResult:
    """Duplicate the tree paths shared by several loops.

    Every loop edge endpoint of the leftover set starts a *strand* at the
    basepoint.  A tree vertex carrying ``s`` strands becomes ``s`` copies
    joined by ``s - 1`` zero-weight edges, a tree edge carrying ``m`` strands
    becomes ``m`` parallel copies with zero-weight quads (triangles at the
    basepoint) between them.  Other edges attach to the nearest copy.
    """
    root = loops.root
    s = surface
    origin = s.origin
    parent_he = tree.parent_he

    # strands: (loop index, 0) ends at origin of the leftover half-edge, (i, 1) at its head
    strand_end_he: dict[int, list[tuple[int, tuple[int, int]]]] = {}
    tree_part: set[int] = set()
    for lp in loops:
        e = lp.edge
        for side, h in ((0, 2 * e), (1, 2 * e + 1)):
            strand_end_he.setdefault(origin[h], []).append((h, (lp.index, side)))
        for h in lp.half_edges:
            if (h >> 1) != e:
                tree_part.add(h >> 1)
    x_half = {h: t for hs in strand_end_he.values() for h, t in hs}

    # children in the shared tree, via parent pointers
    def is_child_edge(w, h):
        c = origin[h ^ 1]
        return (h >> 1) in tree_part and parent_he[c] == (h ^ 1) and c != root

    vertices = {root}
    for e in tree_part:
        vertices.update(s.endpoints(e))
    # depth in the shared tree, for a bottom-up pass
    depth = {root: 0}
    queue = deque([root])
    while queue:
        w = queue.popleft()
        for h in s.rotation(w):
            if is_child_edge(w, h):
                c = origin[h ^ 1]
                depth[c] = depth[w] + 1
                queue.append(c)

    rot_after_parent: dict[int, list[int]] = {}
    for w in vertices:
        rot = s.rotation(w)
        if w != root:
            i = rot.index(parent_he[w])
            rot = rot[i + 1:] + rot[:i]
        rot_after_parent[w] = rot

    order: dict[int, list[tuple[int, int]]] = {}
    block: dict[int, tuple[int, int]] = {}   # outgoing half-edge -> (first strand pos, count)
    for w in sorted(vertices, key=lambda v: -depth[v]):
        seq: list[tuple[int, int]] = []
        for h in rot_after_parent[w]:
            if is_child_edge(w, h):
                sub = order[origin[h ^ 1]]
                block[h] = (len(seq), len(sub))
                seq.extend(sub)
            elif h in x_half:
                block[h] = (len(seq), 1)
                seq.append(x_half[h])
        order[w] = seq

    n = s.n_vertices
    vertex_map = list(range(n))
    copies: dict[int, list[int]] = {}
    pos: dict[int, dict[tuple[int, int], int]] = {}
    for w in sorted(vertices):
        cnt = len(order[w])
        if w == root:
            continue
        ids = [w]
        for _ in range(cnt - 1):
            ids.append(len(vertex_map))
            vertex_map.append(w)
        copies[w] = ids
        pos[w] = {t: i for i, t in enumerate(order[w])}

    def copy_at(w: int, k: int) -> int:
        return root if w == root else copies[w][k]

    weights = list(s.weights)
    edge_map = list(range(s.n_edges))
    edge_copies: dict[int, list[int]] = {}
    for e in sorted(tree_part):
        a, b = s.endpoints(e)
        child = a if parent_he[a] >> 1 == e and a != root and parent_he[a] >= 0 else b
        m = len(order[child])
        ids = [e]
        for _ in range(m - 1):
            ids.append(len(weights))
            weights.append(s.weights[e])
            edge_map.append(e)
        edge_copies[e] = ids
    rung: dict[tuple[int, int], int] = {}
    for w in sorted(copies):
        for k in range(len(copies[w]) - 1):
            rung[(w, k)] = len(weights)
            weights.append(0)
            edge_map.append(COLLAPSE)

    def strands_before(w: int) -> dict[int, int]:
        counts, k = {}, 0
        for h in rot_after_parent[w]:
            counts[h] = k
            if h in block:
                k += block[h][1]
        return counts

    before = {w: strands_before(w) for w in copies}

    def depart(w: int, h: int) -> int:
        if w == root or w not in copies:
            return w
        cnt = len(copies[w])
        if h == parent_he[w]:
            return copies[w][cnt - 1]
        if h in block:
            return copies[w][block[h][0]]
        return copies[w][max(0, before[w][h] - 1)]

    def arrive(w: int, h_out: int) -> int:
        """Copy of ``w`` reached when entering along twin(h_out)."""
        if w == root or w not in copies:
            return w
        if h_out == parent_he[w]:
            return copies[w][0]
        if h_out in block:
            first, cnt = block[h_out]
            return copies[w][first + cnt - 1]
        return copies[w][max(0, before[w][h_out] - 1)]

    def dart_edge(h: int) -> int:
        e = h >> 1
        ids = edge_copies.get(e)
        if ids is None:
            return e
        # down half-edges (away from the root) use copy 0, up half-edges the last
        down = parent_he[origin[h ^ 1]] == (h ^ 1)
        return ids[0] if down else ids[-1]

    faces = []
    nxt = s.next
    for f in s.real_faces():
        darts = []
        for h in s.face_half_edges(f):
            a, b = origin[h], origin[h ^ 1]
            darts.append((depart(a, h), arrive(b, h ^ 1), dart_edge(h)))
            # corner at b between twin(h) and next(h)
            ca, cb = arrive(b, h ^ 1), depart(b, nxt[h])
            if ca != cb:
                ka, kb = copies[b].index(ca), copies[b].index(cb)
                for k in range(ka, kb):
                    darts.append((copies[b][k], copies[b][k + 1], rung[(b, k)]))
        faces.append(darts)
    # quads (triangles at the root) between parallel copies of shared tree edges
    for e, ids in edge_copies.items():
        if len(ids) < 2:
            continue
        a, b = s.endpoints(e)
        w = a if parent_he[a] >= 0 and parent_he[a] >> 1 == e else b
        p = origin[parent_he[w] ^ 1]
        h_down = parent_he[w] ^ 1
        first = block[h_down][0]
        for j in range(len(ids) - 1):
            wj, wj1 = copies[w][j], copies[w][j + 1]
            if p == root:
                faces.append([(wj, root, ids[j]), (root, wj1, ids[j + 1]), (wj1, wj, rung[(w, j)])])
            else:
                pj, pj1 = copy_at(p, first + j), copy_at(p, first + j + 1)
                faces.append([(wj, pj, ids[j]), (pj, pj1, rung[(p, first + j)]),
                              (pj1, wj1, ids[j + 1]), (wj1, wj, rung[(w, j)])])

    new = Surface.from_darts(len(vertex_map), faces, weights, scale=s.scale,
                             layout=s.layout)

    def half(edge: int, tail: int) -> int:
        return 2 * edge if new.origin[2 * edge] == tail else 2 * edge + 1

    def strand_path(end: int, strand) -> list[int]:
        path_vs = []
        v = end
        while v != root:
            path_vs.append(v)
            v = origin[parent_he[v] ^ 1]
        path_vs.reverse()
        out, prev = [], root
        for w in path_vs:
            e = parent_he[w] >> 1
            k = pos[w][strand]
            cur = copies[w][k]
            out.append(half(edge_copies[e][k], prev))
            prev = cur
        return out

    new_loops = []
    for lp in loops:
        e = lp.edge
        u, v = s.endpoints(e)
        su, sv = (lp.index, 0), (lp.index, 1)
        down = strand_path(u, su)
        up = [h ^ 1 for h in reversed(strand_path(v, sv))]
        cu = root if u == root else copies[u][pos[u][su]]
        hs = down + [half(e, cu)] + up
        new_loops.append(Loop(lp.index, e, hs, new.walk_length(hs)))
    stage = StageMap(s, new, vertex_map, edge_map, kind="split")
    return SplitResult(new, SystemOfLoops(root, new_loops), stage,
                       new.n_vertices - n, new.n_edges - s.n_edges, copies, rung)


# -------------------------------------------------------------------- blow-up
@dataclass
class BlowUp:
    surface: Surface
    stage: StageMap
    big_weight: int
    ring: list[int]          # subdivision vertices in rotation order
    spokes: list[int]        # spoke edge ids, aligned with ring
    outer: list[int]         # outer-half edge ids, aligned with ring
    ring_edges: list[int]    # ring edge i joins ring[i] and ring[i + 1]
    source_half: list[int]   # original half-edge leaving root, aligned with ring

    def ring_path(self, a: int, b: int) -> list[int]:
        """Half-edges along the ring, forward from ``a`` to ``b``."""
        d = len(self.ring)
        i, j = self.ring.index(a), self.ring.index(b)
        out = []
        while i != j:
            e = self.ring_edges[i]
            h = 2 * e
            out.append(h if self.surface.origin[h] == self.ring[i] else h ^ 1)
            i = (i + 1) % d
        return out


def blow_up_basepoint(surface: Surface, root: int, big_weight: int | None = None) -> BlowUp:
    """Subdivide every edge at ``root`` and join the subdivision points in a
    zero-weight ring; spokes to ``root`` get the dominating weight."""
    s = surface
    rot = s.rotation(root)
    d = len(rot)
    if d < 3:
        raise DegreeTooSmall(f"basepoint {root} has degree {d} < 3")
    L = 1 + s.total_weight() if big_weight is None else big_weight
    n = s.n_vertices
    ring = [n + i for i in range(d)]
    index_of = {h: i for i, h in enumerate(rot)}
    weights = list(s.weights)
    edge_map = list(range(s.n_edges))
    spokes, ring_edges = [], []
    for i, h in enumerate(rot):
        spokes.append(len(weights))
        weights.append(L)
        edge_map.append(HEAVY)
    for i in range(d):
        ring_edges.append(len(weights))
        weights.append(0)
        edge_map.append(COLLAPSE)
    origin = s.origin
    faces = []
    for f in s.real_faces():
        darts = []
        for h in s.face_half_edges(f):
            a, b, e = origin[h], origin[h ^ 1], h >> 1
            if a == root:
                darts.append((ring[index_of[h]], b, e))
            elif b == root:
                i = index_of[h ^ 1]
                j = (i + 1) % d     # next(h) leaves root along rotate(twin(h))
                darts.append((a, ring[i], e))
                darts.append((ring[i], ring[j], ring_edges[i]))
            else:
                darts.append((a, b, e))
        faces.append(darts)
    for i in range(d):
        j = (i + 1) % d
        faces.append([(root, ring[j], spokes[j]), (ring[j], ring[i], ring_edges[i]),
                      (ring[i], root, spokes[i])])
    vertex_map = list(range(n)) + [root] * d
    new = Surface.from_darts(n + d, faces, weights, scale=s.scale)
    stage = StageMap(s, new, vertex_map, edge_map, L, "blow-up")
    return BlowUp(new, stage, L, ring, spokes, [h >> 1 for h in rot], ring_edges, rot)


def reroute_loops_through_blowup(loops: SystemOfLoops, blow: BlowUp) -> SystemOfLoops:
    """Replace each loop edge at the basepoint by spoke plus outer half."""
    new = blow.surface
    index_of = {h: i for i, h in enumerate(blow.source_half)}
    root = loops.root

    def half(edge, tail):
        return 2 * edge if new.origin[2 * edge] == tail else 2 * edge + 1

    out = []
    for lp in loops:
        hs = list(lp.half_edges)
        first, last = hs[0], hs[-1]
        i, k = index_of[first], index_of[last ^ 1]
        p_i, p_k = blow.ring[i], blow.ring[k]
        body = hs[1:-1]
        path = ([half(blow.spokes[i], root), half(first >> 1, p_i)] + body
                + [half(last >> 1, new.origin[last]), half(blow.spokes[k], p_k)])
        out.append(Loop(lp.index, lp.edge, path, new.walk_length(path)))
    return SystemOfLoops(root, out)


# ---------------------------------------------------------- boundary closing
GADGET_ROWS = 3


def _gadget_faces(base: int):
    """3x3 grid torus on vertices ``base..base+8`` minus the face
    (g00, g01, g11, g10).  Returns faces and the removed quad."""
    vid = lambda r, c: base + (r % 3) * 3 + (c % 3)
    faces = []
    for r in range(3):
        for c in range(3):
            faces.append([vid(r, c), vid(r, c + 1), vid(r + 1, c + 1), vid(r + 1, c)])
    quad = faces.pop(0)
    return faces, quad


@dataclass
class ClosedResult:
    surface: Surface
    stage: StageMap
    big_weight: int


def close_boundaries(surface: Surface, big_weight: int | None = None) -> ClosedResult:
    """Cap every boundary cycle with a one-holed torus of heavy edges.

    The cap is a 3x3 grid torus with one quad removed, joined to the
    boundary cycle by a zipper of triangles.
    """
    s = surface
    L = 1 + s.total_weight() if big_weight is None else big_weight
    weights = list(s.weights)
    edge_map = list(range(s.n_edges))
    vertex_map = list(range(s.n_vertices))
    pair_edge: dict[frozenset, int] = {}

    def edge(u, v):
        key = frozenset((u, v))
        e = pair_edge.get(key)
        if e is None:
            e = pair_edge[key] = len(weights)
            weights.append(L)
            edge_map.append(HEAVY)
        return e

    faces = [s.face_darts(f) for f in s.real_faces()]
    origin = s.origin
    for bf in s.boundary_faces():
        hs = s.face_half_edges(bf)
        cyc = [origin[h] for h in hs]
        r = len(cyc)
        base = len(vertex_map)
        vertex_map.extend([SYNTHETIC] * 9)
        gfaces, quad = _gadget_faces(base)
        for gf in gfaces:
            faces.append([(gf[i], gf[(i + 1) % 4], edge(gf[i], gf[(i + 1) % 4]))
                          for i in range(4)])
        a, b, c, d = quad
        inner = [a, d, c, b]
        i = j = 0
        for _ in range(r + 4):
            if i < r and (j == 4 or i * 4 <= j * r):
                v0, v1, u = cyc[i], cyc[(i + 1) % r], inner[j % 4]
                faces.append([(v0, v1, hs[i] >> 1), (v1, u, edge(v1, u)), (u, v0, edge(u, v0))])
                i += 1
            else:
                v0, u0, u1 = cyc[i % r], inner[j % 4], inner[(j + 1) % 4]
                faces.append([(u0, v0, edge(u0, v0)), (v0, u1, edge(v0, u1)),
                              (u1, u0, edge(u1, u0))])
                j += 1
    new = Surface.from_darts(len(vertex_map), faces, weights, scale=s.scale,
                             layout=s.layout)
    return ClosedResult(new, StageMap(s, new, vertex_map, edge_map, L, "close"), L)
