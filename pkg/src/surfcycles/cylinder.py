"""Shortest cycle winding once around an annulus.

The spine is a shortest path between the two boundaries.  Cutting along it
leaves a disk where spine vertex ``i`` has a left copy (the original id) and a
right copy (``n_vertices + i``); the shortest left-to-right path for each ``i``
closes into a candidate, and the cheapest candidate wins.  Candidate paths can
be taken pairwise non-crossing, so after solving the middle index each half of
the index range only needs the part of the disk on its side of that path.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse.csgraph import connected_components, dijkstra

from .graphs import WeightedGraph, path_to
from .surface import HalfEdgeArrays

SIDE_L, SIDE_R = 1, -1


@dataclass
class CutPath:
    """The annulus cut open along ``spine``."""

    arrays: HalfEdgeArrays
    spine: list[int]              # first vertex on one boundary, last on the other
    spine_half: list[int]         # half-edge from spine[i] to spine[i + 1]
    is_right: np.ndarray          # per half-edge: leaves a spine vertex on the R side
    graph: WeightedGraph          # the disk; right copy of spine[i] is n_vertices + i
    disk_edge: np.ndarray         # disk edge id -> (annulus edge id, side tag)
    disk_side: np.ndarray         # side tag of each disk edge
    rep: np.ndarray               # annulus edge -> representative half-edge

    @property
    def n(self) -> int:
        return self.arrays.n_vertices

    def left(self, i: int) -> int:
        return self.spine[i]

    def right(self, i: int) -> int:
        return self.n + i


@dataclass
class CylinderCycle:
    length: int
    half_edges: list[int]         # closed walk on the annulus
    sides: list[int]              # SIDE_L / SIDE_R on spine edges, 0 elsewhere
    index: int                    # spine vertex where the cycle crosses
    spine_crossings: int
    searches: int = 0


def _edge_table(arr: HalfEdgeArrays):
    n_e = len(arr.weight)
    rep = np.full(n_e, -1, dtype=np.int64)
    hs = np.arange(len(arr.origin), dtype=np.int64)
    # smallest half-edge of every edge
    order = np.argsort(arr.edge, kind="stable")
    first = np.ones(len(order), dtype=bool)
    first[1:] = arr.edge[order][1:] != arr.edge[order][:-1]
    rep[arr.edge[order][first]] = hs[order][first]
    return rep


def _boundary_sets(arr: HalfEdgeArrays):
    bfaces = np.flatnonzero(arr.face_boundary)
    if len(bfaces) != 2:
        raise ValueError(f"expected two boundary components, found {len(bfaces)}")
    sets = []
    for f in bfaces:
        hs = np.flatnonzero(arr.face == f)
        sets.append((int(f), hs))
    return sets


def cut_open(arr: HalfEdgeArrays) -> CutPath:
    (f0, b0_hs), (f1, b1_hs) = _boundary_sets(arr)
    n = arr.n_vertices
    rep = _edge_table(arr)
    u = arr.origin[rep]
    v = arr.origin[arr.twin[rep]]
    base = WeightedGraph(n, u, v, arr.weight)
    b0 = np.unique(arr.origin[b0_hs])
    b1 = np.unique(arr.origin[b1_hs])
    dist, pred = base.shortest(b0)
    target = int(b1[np.argmin(dist[b1])])
    path = path_to(pred, target)
    on_b0 = np.zeros(n, dtype=bool)
    on_b0[b0] = True
    on_b1 = np.zeros(n, dtype=bool)
    on_b1[b1] = True
    end = next(i for i, w in enumerate(path) if on_b1[w])
    path = path[: end + 1]
    start = max(i for i, w in enumerate(path) if on_b0[w])
    spine = path[start:]
    p = len(spine) - 1

    spine_half = []
    for a, b in zip(spine, spine[1:]):
        e = base.edge_between(a, b)
        h = rep[e]
        spine_half.append(int(h if arr.origin[h] == a else arr.twin[h]))

    nxt, twin, origin, face = arr.next, arr.twin, arr.origin, arr.face

    def rotate(h):
        return int(nxt[twin[h]])

    def boundary_out(w, f):
        cand = np.flatnonzero((origin == w) & (face == f))
        return int(cand[0])

    is_right = np.zeros(len(origin), dtype=bool)
    for i, w in enumerate(spine):
        if i == 0:
            start_h, stop_h, include_start = spine_half[0], boundary_out(w, f0), False
        elif i == p:
            start_h, stop_h, include_start = boundary_out(w, f1), int(twin[spine_half[-1]]), True
        else:
            start_h, stop_h, include_start = spine_half[i], int(twin[spine_half[i - 1]]), False
        h = start_h if include_start else rotate(start_h)
        while h != stop_h:
            is_right[h] = True
            h = rotate(h)

    pos = np.full(n, -1, dtype=np.int64)
    pos[spine] = np.arange(p + 1)
    tail = np.where(is_right, n + pos[origin], origin)
    a = tail[rep]
    b = tail[twin[rep]]
    n_e = len(rep)
    spine_edges = arr.edge[np.array(spine_half, dtype=np.int64)]
    ea = np.concatenate([a, n + np.arange(p)])
    eb = np.concatenate([b, n + np.arange(1, p + 1)])
    ew = np.concatenate([arr.weight, arr.weight[spine_edges]])
    ids = np.arange(n_e + p)
    disk_edge = np.concatenate([np.arange(n_e), spine_edges])
    disk_side = np.zeros(n_e + p, dtype=np.int8)
    disk_side[spine_edges] = SIDE_L
    disk_side[n_e:] = SIDE_R
    graph = WeightedGraph(n + p + 1, ea, eb, ew, ids)
    return CutPath(arr, [int(w) for w in spine], spine_half, is_right, graph, disk_edge,
                   disk_side, rep)


def _path_cycle(cut: CutPath, path: list[int], index: int, length: float) -> CylinderCycle:
    arr = cut.arrays
    n = cut.n
    spine = cut.spine
    hs, sides = [], []
    for a, b in zip(path, path[1:]):
        d = cut.graph.edge_between(a, b)
        e = int(cut.disk_edge[d])
        ta = a if a < n else spine[a - n]
        h = int(cut.rep[e])
        if arr.origin[h] != ta:
            h = int(arr.twin[h])
        hs.append(h)
        sides.append(int(cut.disk_side[d]))
    cyc = CylinderCycle(int(length), hs, sides, index, 0)
    cyc.spine_crossings = count_spine_crossings(cut, hs, sides)
    return cyc


def count_spine_crossings(cut: CutPath, half_edges: list[int], sides: list[int]) -> int:
    """Visits of ``spine`` where the walk arrives on one side and leaves on the other."""
    arr = cut.arrays
    on_spine = np.zeros(cut.n, dtype=bool)
    on_spine[cut.spine] = True
    spine_edges = set(int(arr.edge[h]) for h in cut.spine_half)

    def side(h_out, tag):
        if int(arr.edge[h_out]) in spine_edges:
            return tag
        return SIDE_R if cut.is_right[h_out] else SIDE_L

    count = 0
    k = len(half_edges)
    for i in range(k):
        h_in, h_out = half_edges[i - 1], half_edges[i]
        if not on_spine[arr.origin[h_out]]:
            continue
        if side(int(arr.twin[h_in]), sides[i - 1]) != side(h_out, sides[i]):
            count += 1
    return count


def _better(cand, best):
    return best is None or (cand[0], cand[1]) < (best[0], best[1])


def naive_cylinder_cycle(arr: HalfEdgeArrays, cut: CutPath | None = None) -> CylinderCycle:
    """One full shortest-path search per vertex of ``spine``."""
    cut = cut or cut_open(arr)
    best = None
    for i in range(len(cut.spine)):
        dist, pred = dijkstra(cut.graph.matrix, directed=True, indices=cut.left(i),
                              return_predecessors=True)
        d = dist[cut.right(i)]
        if _better((d, i), best):
            best = (d, i, path_to(pred, cut.right(i)))
    cyc = _path_cycle(cut, best[2], best[1], best[0])
    cyc.searches = len(cut.spine)
    return cyc


def shortest_boundary_homotopic_cycle(arr: HalfEdgeArrays,
                                      cut: CutPath | None = None) -> CylinderCycle:
    """Divide and conquer over the indices of ``spine``."""
    cut = cut or cut_open(arr)
    mat = cut.graph.matrix.tocsr()
    p = len(cut.spine) - 1
    n_total = cut.graph.n
    best = None
    searches = 0
    stack = [(0, p, np.arange(n_total, dtype=np.int64))]
    while stack:
        lo, hi, region = stack.pop()
        if lo > hi:
            continue
        m = (lo + hi) // 2
        local = np.full(n_total, -1, dtype=np.int64)
        local[region] = np.arange(len(region))
        sub = mat[region][:, region]
        src, dst = local[cut.left(m)], local[cut.right(m)]
        dist, pred = dijkstra(sub, directed=True, indices=src, return_predecessors=True)
        searches += 1
        d = dist[dst]
        path_local = path_to(pred, dst) if np.isfinite(d) else [src]
        path = region[np.array(path_local, dtype=np.int64)]
        if np.isfinite(d) and _better((d, m), best):
            best = (d, m, [int(w) for w in path])
        if lo == hi:
            continue
        on_path = np.zeros(len(region), dtype=bool)
        on_path[path_local] = True
        rest = np.flatnonzero(~on_path)
        if len(rest):
            _, labels = connected_components(sub[rest][:, rest], directed=False)
        else:
            labels = np.zeros(0, dtype=np.int64)
        rest_pos = np.full(len(region), -1, dtype=np.int64)
        rest_pos[rest] = np.arange(len(rest))
        for a, b in ((lo, m - 1), (m + 1, hi)):
            if a > b:
                continue
            seeds = []
            for i in range(a, b + 1):
                for w in (cut.left(i), cut.right(i)):
                    lw = local[w]
                    if lw >= 0 and rest_pos[lw] >= 0:
                        seeds.append(labels[rest_pos[lw]])
            keep = np.isin(labels, np.unique(seeds)) if seeds else np.zeros(len(rest), bool)
            part = np.union1d(path, region[rest[keep]])
            stack.append((a, b, part))
    cyc = _path_cycle(cut, best[2], best[1], best[0])
    cyc.searches = searches
    return cyc
