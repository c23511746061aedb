"""Fundamental domain, crossing words and the finite glued spaces.

Cutting the blown-up surface along its disjoint loops gives a disk whose
boundary carries two copies (arcs) of every loop: the ``+`` arc on the left
of the loop and the ``-`` arc on its right.  A cyclic word of crossing tokens
says which arcs are glued when copies of the disk are chained together; the
result is a cylinder whose core follows the word.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components as sp_components

from .errors import GluingMismatch, NotADisk, UntaggedLoopEdge
from .graphs import WeightedGraph
from .loops import SystemOfLoops
from .surface import LEFT, NONE, RIGHT, HalfEdgeArrays, SidedCycle, Surface, cut_edges

PLUS_TO_MINUS, MINUS_TO_PLUS = 0, 1
PLUS, MINUS = 1, -1


class CrossingToken(NamedTuple):
    loop: int
    direction: int

    def inverse(self) -> "CrossingToken":
        return CrossingToken(self.loop, 1 - self.direction)

    def exit_sign(self) -> int:
        """Arc of the current copy that the crossing leaves through."""
        return PLUS if self.direction == PLUS_TO_MINUS else MINUS

    def label(self) -> str:
        return "+-" if self.direction == PLUS_TO_MINUS else "-+"


MetaWord = tuple  # tuple[CrossingToken, ...], cyclic


# --------------------------------------------------------------------- words
def inverse_word(word: Sequence[CrossingToken]) -> MetaWord:
    return tuple(t.inverse() for t in reversed(word))


def canonical_word(word: Sequence[CrossingToken]) -> MetaWord:
    """Least rotation of the word or of its reversed inverse."""
    word = tuple(word)
    if not word:
        return word
    best = None
    for w in (word, inverse_word(word)):
        for i in range(len(w)):
            r = w[i:] + w[:i]
            if best is None or r < best:
                best = r
    return best


def cyclic_reduce(word: Sequence[CrossingToken]) -> MetaWord:
    """Cancel adjacent inverse pairs, cyclically."""
    out: list[CrossingToken] = []
    for t in word:
        if out and out[-1] == t.inverse():
            out.pop()
        else:
            out.append(t)
    while len(out) >= 2 and out[0] == out[-1].inverse():
        out = out[1:-1]
    return tuple(out)


def is_valid_word(word: Sequence[CrossingToken], genus: int) -> bool:
    k = len(word)
    if not 1 <= k <= 4 * genus:
        return False
    counts: dict[int, int] = {}
    for t in word:
        if not 0 <= t.loop < 2 * genus:
            return False
        counts[t.loop] = counts.get(t.loop, 0) + 1
        if counts[t.loop] > 2:
            return False
    if k >= 2 and any(word[(i + 1) % k] == word[i].inverse() for i in range(k)):
        return False
    return True


def all_tokens(genus: int) -> list[CrossingToken]:
    return [CrossingToken(j, d) for j in range(2 * genus) for d in (0, 1)]


def iter_meta_words(genus: int, max_length: int | None = None) -> Iterator[MetaWord]:
    """Canonical valid words in (length, lexicographic) order."""
    if genus < 1:
        return
    limit = 4 * genus if max_length is None else min(max_length, 4 * genus)
    tokens = all_tokens(genus)
    for k in range(1, limit + 1):
        yield from _words_of_length(tokens, k)


def _words_of_length(tokens, k):
    counts: dict[int, int] = {}
    prefix: list[CrossingToken] = []

    def rec():
        if len(prefix) == k:
            w = tuple(prefix)
            if (k == 1 or w[-1] != w[0].inverse()) and canonical_word(w) == w:
                yield w
            return
        for t in tokens:
            if prefix:
                if t == prefix[-1].inverse():
                    continue
                first = prefix[0]
                if t < first or t.inverse() < first:
                    continue
            elif t.inverse() < t:
                continue
            if counts.get(t.loop, 0) >= 2:
                continue
            counts[t.loop] = counts.get(t.loop, 0) + 1
            prefix.append(t)
            yield from rec()
            prefix.pop()
            counts[t.loop] -= 1

    yield from rec()


def enumerate_meta_words(genus: int, max_length: int | None = None) -> list[MetaWord]:
    return list(iter_meta_words(genus, max_length))


# ---------------------------------------------------------------- loop sides
class LoopSides:
    """Side of every half-edge leaving a loop vertex, relative to that loop.

    Half-edges strictly between the two loop edges going around the vertex
    from the incoming edge are on the left (PLUS); the rest on the right.
    Loop edges themselves get 0: their side must come from a tag.
    """

    def __init__(self, surface: Surface, loops: SystemOfLoops):
        self.surface = surface
        self.root = loops.root
        self.loop_of = np.full(surface.n_vertices, -1, dtype=np.int64)
        self.loop_edge = np.full(surface.n_edges, -1, dtype=np.int64)
        self.side = np.zeros(2 * surface.n_edges, dtype=np.int8)
        for lp in loops:
            hs = lp.half_edges
            for h in hs:
                self.loop_edge[h >> 1] = lp.index
            for i in range(1, len(hs)):
                h_in, h_out = hs[i - 1], hs[i]
                v = surface.origin[h_out]
                if v == self.root:
                    continue
                self.loop_of[v] = lp.index
                back = h_in ^ 1
                h = surface.rotate(back)
                while h != h_out:
                    self.side[h] = PLUS
                    h = surface.rotate(h)
                h = surface.rotate(h_out)
                while h != back:
                    self.side[h] = MINUS
                    h = surface.rotate(h)

    def side_at(self, h_out: int, tag: int, loop: int) -> int:
        """Side of the outgoing half-edge ``h_out`` at its origin."""
        if self.loop_edge[h_out >> 1] == loop:
            if tag == NONE:
                raise UntaggedLoopEdge(f"edge {h_out >> 1} lies on loop {loop} without a side tag")
            return PLUS if tag == LEFT else MINUS
        return int(self.side[h_out])


def meta_lift(cycle: SidedCycle, sides: LoopSides) -> MetaWord:
    """Cyclic token sequence of the loop crossings of a closed walk."""
    hs, tags = cycle.half_edges, cycle.sides
    origin = sides.surface.origin
    out = []
    n = len(hs)
    for i in range(n):
        h_in, h_out = hs[i - 1], hs[i]
        v = origin[h_out]
        if v == sides.root:
            raise UntaggedLoopEdge("walk passes through the basepoint")
        j = int(sides.loop_of[v])
        if j < 0:
            continue
        s_in = sides.side_at(h_in ^ 1, tags[i - 1], j)
        s_out = sides.side_at(h_out, tags[i], j)
        if s_in == PLUS and s_out == MINUS:
            out.append(CrossingToken(j, PLUS_TO_MINUS))
        elif s_in == MINUS and s_out == PLUS:
            out.append(CrossingToken(j, MINUS_TO_PLUS))
    return tuple(out)


def count_crossings(cycle: SidedCycle, loop_index: int, sides: LoopSides) -> int:
    return sum(1 for t in meta_lift(cycle, sides) if t.loop == loop_index)


# ------------------------------------------------------------------- domain
@dataclass
class Arc:
    loop: int
    sign: int
    vertices: np.ndarray      # domain vertices in loop order
    real: np.ndarray          # domain half-edges along the arc, inside the disk
    weights: np.ndarray


@dataclass
class FundamentalDomain:
    surface: Surface                 # the disk
    source: Surface                  # surface that was cut
    loops: SystemOfLoops
    arcs: dict[tuple[int, int], Arc]
    vertex_map: np.ndarray           # domain vertex -> source vertex
    edge_map: np.ndarray             # domain edge -> source edge
    arc_sign: np.ndarray             # domain edge -> PLUS / MINUS / 0
    graph: WeightedGraph
    cut_euler: int
    x_copies: int

    @property
    def genus(self) -> int:
        return len(self.loops) // 2

    def arc_in(self, token: CrossingToken) -> Arc:
        """Arc through which the next copy is entered."""
        return self.arcs[(token.loop, -token.exit_sign())]

    def arc_out(self, token: CrossingToken) -> Arc:
        return self.arcs[(token.loop, token.exit_sign())]


def _component_stats(surface: Surface) -> tuple[int, int, int]:
    comps, _ = surface.connected_components()
    return comps, surface.euler_characteristic(), surface.boundary_count


def cut_along_loops(surface: Surface, loops: SystemOfLoops) -> FundamentalDomain:
    """Cut along every loop, then drop the basepoint copies and their faces."""
    root = loops.root
    loop_edges = {h >> 1 for lp in loops for h in lp.half_edges}
    cut = cut_edges(surface, loop_edges)
    cs = cut.surface
    comps, chi, b = _component_stats(cs)
    if (comps, chi, b) != (1, 1, 1):
        raise NotADisk(f"cut surface has {comps} components, chi={chi}, b={b}")
    doomed = [v for v in range(cs.n_vertices) if cut.vertex_map[v] == root]
    sub = cs.delete_vertices(doomed)
    dom = sub.surface
    comps, chi, b = _component_stats(dom)
    if (comps, chi, b) != (1, 1, 1):
        raise NotADisk(f"domain has {comps} components, chi={chi}, b={b}")
    new_edge = {old: new for new, old in enumerate(sub.edge_map)}
    vmap = np.array([cut.vertex_map[v] for v in sub.vertex_map], dtype=np.int64)
    emap = np.array([cut.edge_map[e] for e in sub.edge_map], dtype=np.int64)
    nv = sub.old_to_new_vertex

    arcs = {}
    arc_sign = np.zeros(dom.n_edges, dtype=np.int8)
    for lp in loops:
        hs = lp.half_edges
        body = hs[1:-1]
        for sign in (PLUS, MINUS):
            verts, real = [], []
            for h in body:
                if sign == PLUS:
                    tail = nv[cut.corner_vertex[h]]
                    d = new_edge[cut.side_edge[h]]
                else:
                    tail = nv[cut.corner_vertex[surface.rotate(h)]]
                    d = new_edge[cut.side_edge[h ^ 1]]
                verts.append(tail)
                real.append(2 * d if not dom.face_boundary[dom.face[2 * d]] else 2 * d + 1)
                arc_sign[d] = sign
            last = hs[-1]
            corner = last if sign == PLUS else surface.rotate(last)
            verts.append(nv[cut.corner_vertex[corner]])
            real_arr = np.array(real, dtype=np.int64)
            for r in real:
                if not dom.face_boundary[dom.face[r ^ 1]]:
                    raise NotADisk(f"arc of loop {lp.index} is not on the boundary")
            arcs[(lp.index, sign)] = Arc(lp.index, sign, np.array(verts, dtype=np.int64),
                                         real_arr,
                                         np.array([dom.weights[r >> 1] for r in real]))
    ends = np.array([dom.endpoints(e) for e in range(dom.n_edges)], dtype=np.int64)
    graph = WeightedGraph(dom.n_vertices, ends[:, 0], ends[:, 1], dom.weights)
    return FundamentalDomain(dom, surface, loops, arcs, vmap, emap, arc_sign, graph,
                             cs.euler_characteristic(), len(doomed))


# -------------------------------------------------------------- glued space
@dataclass
class GluedSpace:
    word: MetaWord
    arrays: HalfEdgeArrays
    copy_of: np.ndarray          # glued half-edge -> copy index
    domain_half: np.ndarray      # glued half-edge -> domain half-edge
    vertex_domain: np.ndarray    # glued vertex -> domain vertex
    edge_of: np.ndarray          # glued half-edge -> glued edge id
    boundary_faces: list[int]
    components: int
    euler: int
    manifold: bool

    @property
    def is_cylinder(self) -> bool:
        return self.manifold and self.components == 1 and self.euler == 0 \
            and len(self.boundary_faces) == 2


@dataclass
class SpaceClass:
    cylinder: bool
    components: int
    euler: int
    boundaries: int
    reason: str = ""


def _cycle_labels(perm: np.ndarray) -> tuple[int, np.ndarray]:
    n = len(perm)
    g = coo_matrix((np.ones(n, dtype=np.int8), (np.arange(n), perm)), shape=(n, n))
    return sp_components(g, directed=False)


def build_glued_space(domain: FundamentalDomain, word: Sequence[CrossingToken]) -> GluedSpace:
    """Chain ``len(word)`` copies of the disk; token ``i`` glues the exit
    arc of copy ``i`` to the entry arc of copy ``i + 1`` (cyclically)."""
    word = tuple(word)
    k = len(word)
    arr = domain.surface.arrays()
    H = len(arr.origin)
    V = arr.n_vertices
    offs_h = np.repeat(np.arange(k, dtype=np.int64) * H, H)
    offs_v = np.repeat(np.arange(k, dtype=np.int64) * V, H)
    base_h = np.tile(np.arange(H, dtype=np.int64), k)
    origin = np.tile(arr.origin, k) + offs_v
    twin = np.tile(arr.twin, k) + offs_h
    nxt = np.tile(arr.next, k) + offs_h
    is_boundary = np.tile(arr.face_boundary[arr.face], k)
    keep = np.ones(k * H, dtype=bool)
    ua, ub = [], []
    used = set()
    for i, t in enumerate(word):
        j = (i + 1) % k
        out_arc, in_arc = domain.arc_out(t), domain.arc_in(t)
        for key in ((i, out_arc.loop, out_arc.sign), (j, in_arc.loop, in_arc.sign)):
            if key in used:
                raise GluingMismatch(f"arc {key[1:]} of copy {key[0]} glued twice")
            used.add(key)
        if len(out_arc.real) != len(in_arc.real) or not np.array_equal(
                out_arc.weights, in_arc.weights):
            raise GluingMismatch(f"arcs of loop {t.loop} differ")
        rx = out_arc.real + i * H
        rn = in_arc.real + j * H
        twin[rx] = rn
        twin[rn] = rx
        keep[rx ^ 1] = False
        keep[rn ^ 1] = False
        ua.append(out_arc.vertices + i * V)
        ub.append(in_arc.vertices + j * V)
    nV = k * V
    ua, ub = np.concatenate(ua), np.concatenate(ub)
    g = coo_matrix((np.ones(len(ua), dtype=np.int8), (ua, ub)), shape=(nV, nV))
    _, vlabel = sp_components(g, directed=False)

    new_id = np.cumsum(keep) - 1
    kept = np.flatnonzero(keep)
    n_h = len(kept)
    origin_n = vlabel[origin[kept]]
    twin_n = new_id[twin[kept]]
    bnd = is_boundary[kept]
    nxt_n = np.where(bnd, -1, new_id[nxt[kept]])
    manifold = True
    bh = np.flatnonzero(bnd)
    out_b = np.full(nV, -1, dtype=np.int64)
    counts = np.bincount(origin_n[bh], minlength=nV)
    if np.any(counts > 1):
        manifold = False
    out_b[origin_n[bh]] = bh
    heads = origin_n[twin_n[bh]]
    nxt_n[bh] = out_b[heads]
    if np.any(nxt_n[bh] < 0):
        raise GluingMismatch("boundary walk does not close")

    # faces: real faces keep their copy-offset ids, boundary cycles retraced
    F = len(arr.face_boundary)
    real_face = (np.tile(arr.face, k) + np.repeat(np.arange(k) * F, H))[kept]
    real_ids, real_face = np.unique(np.where(bnd, -1, real_face), return_inverse=True)
    has_neg = real_ids[0] < 0 if len(real_ids) else False
    n_real = len(real_ids) - (1 if has_neg else 0)
    face = real_face - (1 if has_neg else 0)
    boundary_faces: list[int] = []
    if len(bh):
        sub_perm = np.searchsorted(bh, nxt_n[bh])
        nb, blabel = _cycle_labels(sub_perm)
        face[bh] = n_real + blabel
        boundary_faces = list(range(n_real, n_real + nb))
    face_boundary = np.zeros(n_real + len(boundary_faces), dtype=bool)
    face_boundary[n_real:] = True

    # compact vertex ids
    present, origin_c = np.unique(origin_n, return_inverse=True)
    n_vert = len(present)
    rep_h = np.minimum(np.arange(n_h), twin_n)
    edge_ids, edge_of = np.unique(rep_h, return_inverse=True)
    dom_half = base_h[kept]
    weight = domain.surface.arrays().weight[dom_half[edge_ids] >> 1]
    rotate = nxt_n[twin_n]
    n_rot, rlabel = _cycle_labels(rotate)
    if n_rot != n_vert:
        manifold = False
    else:
        # every rotation cycle must stay at one vertex
        first = np.full(n_rot, -1, dtype=np.int64)
        first[rlabel] = origin_c
        if np.any(first[rlabel] != origin_c):
            manifold = False
    vertex_domain = np.empty(n_vert, dtype=np.int64)
    vertex_domain[origin_c] = (origin[kept] % V)
    arrays = HalfEdgeArrays(n_vert, origin_c, twin_n, nxt_n, face, face_boundary,
                            edge_of, weight)
    ev = np.column_stack([origin_c[edge_ids], origin_c[twin_n[edge_ids]]])
    gg = coo_matrix((np.ones(len(ev), dtype=np.int8), (ev[:, 0], ev[:, 1])),
                    shape=(n_vert, n_vert))
    comps, _ = sp_components(gg, directed=False)
    euler = n_vert - len(edge_ids) + n_real
    return GluedSpace(word, arrays, (kept // H), dom_half, vertex_domain, edge_of,
                      boundary_faces, comps, euler, manifold)


def classify_space(space: GluedSpace) -> SpaceClass:
    b = len(space.boundary_faces)
    if space.is_cylinder:
        return SpaceClass(True, space.components, space.euler, b)
    reason = "not a manifold" if not space.manifold else (
        f"components={space.components} chi={space.euler} b={b}")
    return SpaceClass(False, space.components, space.euler, b, reason)


def lift_to_source(domain: FundamentalDomain, space: GluedSpace,
                   half_edges: Sequence[int]) -> SidedCycle:
    """Glued-space walk to a side-tagged walk on the surface that was cut."""
    src = domain.source
    dh = space.domain_half[np.asarray(half_edges, dtype=np.int64)]
    d_origin = np.asarray(domain.surface.origin, dtype=np.int64)[dh]
    tails = domain.vertex_map[d_origin]
    edges = domain.edge_map[dh >> 1]
    s_origin = np.asarray(src.origin, dtype=np.int64)
    hs = np.where(s_origin[2 * edges] == tails, 2 * edges, 2 * edges + 1)
    signs = domain.arc_sign[dh >> 1]
    tags = np.where(signs == PLUS, LEFT, np.where(signs == MINUS, RIGHT, NONE))
    return SidedCycle(tuple(int(h) for h in hs), tuple(int(t) for t in tags))


# -------------------------------------------------------------- word search
@dataclass
class SearchStats:
    prefixes: int = 0
    words: int = 0


def search_meta_words(domain: FundamentalDomain, upper_bound: Callable[[], float],
                      solve_word: Callable[[MetaWord], None],
                      stats: SearchStats | None = None) -> SearchStats:
    """Best-first search over canonical words with a layered lower bound.

    A prefix's bound is the shortest way to cross its tokens in order inside
    consecutive disk copies, starting anywhere on the first entry arc; a full
    word adds the stretch back to the first exit arc.  Words are handed to
    ``solve_word`` in increasing bound order until the bound reaches the
    current ``upper_bound()``.
    """
    stats = stats or SearchStats()
    g = domain.genus
    max_len = 4 * g
    tokens = all_tokens(g)
    heap: list = []
    order = itertools.count()
    for t in tokens:
        if t.inverse() < t:
            continue
        start = np.zeros(len(domain.arc_in(t).vertices))
        heapq.heappush(heap, (0.0, next(order), False, (t,), start))
    while heap:
        lb, _, is_word, word, arrival = heapq.heappop(heap)
        if lb >= upper_bound():
            break
        if is_word:
            stats.words += 1
            solve_word(word)
            continue
        stats.prefixes += 1
        last = word[-1]
        first = word[0]
        src = domain.arc_in(last).vertices
        dist, _ = domain.graph.shortest(src, arrival)
        k = len(word)
        # close the word
        if (k == 1 or last != first.inverse()) and canonical_word(word) == word:
            close = float(dist[domain.arc_out(first).vertices].min())
            heapq.heappush(heap, (close, next(order), True, word, None))
        if k == max_len:
            continue
        counts: dict[int, int] = {}
        for t in word:
            counts[t.loop] = counts.get(t.loop, 0) + 1
        for t in tokens:
            if t == last.inverse() or counts.get(t.loop, 0) >= 2:
                continue
            if t < first or t.inverse() < first:
                continue
            nxt = dist[domain.arc_out(t).vertices]
            bound = float(nxt.min())
            if bound >= upper_bound():
                continue
            heapq.heappush(heap, (bound, next(order), False, word + (t,), nxt))
    return stats
