"""Reference solvers used to validate the main pipeline."""
from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np
from scipy.sparse.csgraph import dijkstra

from .classify import CycleClass, HomologyClassifier, classify_simple_cycle
from .errors import BoundarySurface, TooLarge
from .graphs import WeightedGraph
from .surface import SidedCycle, Surface

NONCONTRACTIBLE, NONSEPARATING = "nc", "ns"
OBJECTIVES = (NONCONTRACTIBLE, NONSEPARATING)


@dataclass
class OracleResult:
    length: int
    half_edges: list[int]
    cls: CycleClass


def _qualifies(cls: CycleClass, objective: str) -> bool:
    if objective == NONSEPARATING:
        return cls is CycleClass.NONSEPARATING
    return cls is not CycleClass.CONTRACTIBLE


def _check_closed(surface: Surface) -> None:
    if not surface.is_closed:
        raise BoundarySurface("oracles expect a closed surface")


def exhaustive_shortest_nontrivial(surface: Surface, objective: str = NONSEPARATING,
                                   max_edges: int = 150) -> OracleResult | None:
    """Shortest simple cycle of the requested class by depth-first search.

    Cycles are enumerated from their smallest vertex; a branch is abandoned
    once its length plus the distance back to the start (inside the allowed
    vertices) cannot beat the best cycle found so far.
    """
    return exhaustive_both(surface, max_edges)[objective]


def exhaustive_both(surface: Surface, max_edges: int = 150) -> dict[str, OracleResult | None]:
    _check_closed(surface)
    if surface.n_edges > max_edges:
        raise TooLarge(f"{surface.n_edges} edges exceeds the exhaustive limit {max_edges}")
    best: dict[str, OracleResult | None] = {NONCONTRACTIBLE: None, NONSEPARATING: None}
    if surface.genus == 0:
        return best
    n = surface.n_vertices
    adj = surface.adjacency()
    inf = float("inf")

    def bound():
        b = best[NONSEPARATING]
        return inf if b is None else b.length

    for s in range(n):
        # distances back to s using only vertices >= s
        dist = [inf] * n
        dist[s] = 0
        heap = [(0, s)]
        while heap:
            d, v = heapq.heappop(heap)
            if d != dist[v]:
                continue
            for u, w, _ in adj[v]:
                if u >= s and d + w < dist[u]:
                    dist[u] = d + w
                    heapq.heappush(heap, (d + w, u))
        on_path = [False] * n
        on_path[s] = True
        path: list[int] = []
        # explicit DFS stack of (vertex, partial length, neighbour iterator)
        stack = [(s, 0, iter(adj[s]))]
        while stack:
            v, length, it = stack[-1]
            step = next(it, None)
            if step is None:
                stack.pop()
                if path:
                    on_path[v] = False
                    path.pop()
                continue
            u, w, h = step
            total = length + w
            if u == s:
                if len(path) >= 2 and total < bound():
                    _record(surface, path + [h], total, best)
                continue
            if u < s or on_path[u] or total + dist[u] >= bound():
                continue
            on_path[u] = True
            path.append(h)
            stack.append((u, total, iter(adj[u])))
    return best


def _record(surface, half_edges, length, best):
    nc, ns = best[NONCONTRACTIBLE], best[NONSEPARATING]
    improves_nc = nc is None or length < nc.length
    improves_ns = ns is None or length < ns.length
    if not (improves_nc or improves_ns):
        return
    cls = classify_simple_cycle(surface, SidedCycle(tuple(half_edges)))
    res = OracleResult(length, list(half_edges), cls)
    if improves_nc and _qualifies(cls, NONCONTRACTIBLE):
        best[NONCONTRACTIBLE] = res
    if improves_ns and _qualifies(cls, NONSEPARATING):
        best[NONSEPARATING] = res


def per_vertex_loop_oracle(surface: Surface, objective: str = NONSEPARATING,
                           classifier: HomologyClassifier | None = None) -> OracleResult | None:
    return per_vertex_both(surface, classifier)[objective]


def per_vertex_both(surface: Surface, classifier: HomologyClassifier | None = None
                    ) -> dict[str, OracleResult | None]:
    """Tree loops from every basepoint.

    For root ``r`` and non-tree edge ``{u, v}`` the loop is the tree path to
    ``u``, the edge, and the tree path back from ``v``.  Only loops whose two
    tree paths leave ``r`` through different children are simple; those are
    examined in increasing length until each class is found.
    """
    _check_closed(surface)
    out: dict[str, OracleResult | None] = {NONCONTRACTIBLE: None, NONSEPARATING: None}
    if surface.genus == 0:
        return out
    classifier = classifier or HomologyClassifier(surface)
    n = surface.n_vertices
    ends = np.array([surface.endpoints(e) for e in range(surface.n_edges)], dtype=np.int64)
    U, V = ends[:, 0], ends[:, 1]
    W = np.asarray(surface.weights, dtype=np.float64)
    graph = WeightedGraph(n, U, V, W)
    dist, pred = dijkstra(graph.matrix, directed=True, return_predecessors=True)
    roots = np.arange(n)
    # first vertex below the root on every tree path, by pointer jumping
    up = pred.astype(np.int64)
    up[roots, roots] = roots
    child_of_root = up == roots[:, None]
    up = np.where(child_of_root, np.arange(n)[None, :], up)
    for _ in range(max(1, int(np.ceil(np.log2(max(n, 2)))) + 1)):
        up = np.take_along_axis(up, up, axis=1)
    first = up
    tree = (pred[:, V] == U[None, :]) | (pred[:, U] == V[None, :])
    simple = (~tree) & ((U[None, :] == roots[:, None]) | (V[None, :] == roots[:, None])
                        | (first[:, U] != first[:, V]))
    lengths = dist[:, U] + W[None, :] + dist[:, V]
    r_idx, e_idx = np.nonzero(simple)
    lens = lengths[r_idx, e_idx]
    order = np.lexsort((e_idx, r_idx, lens))
    seen: set = set()
    for k in order:
        r, e = int(r_idx[k]), int(e_idx[k])
        hs = _tree_loop(surface, pred[r], r, e)
        key = frozenset(h >> 1 for h in hs)
        if key in seen:
            continue
        seen.add(key)
        cls = classifier.classify(hs)
        res = OracleResult(int(lens[k]), hs, cls)
        for obj in OBJECTIVES:
            if out[obj] is None and _qualifies(cls, obj):
                out[obj] = res
        if out[NONSEPARATING] is not None and out[NONCONTRACTIBLE] is not None:
            break
    return out


def _tree_loop(surface: Surface, pred_row, root: int, e: int) -> list[int]:
    """Root to ``u``, across ``e``, back from ``v`` (input graphs are simple)."""
    u, v = surface.endpoints(e)

    def down(t):
        vs = [t]
        while vs[-1] != root:
            vs.append(int(pred_row[vs[-1]]))
        return vs[::-1]

    verts = down(u) + down(v)[::-1]
    return [surface.half_edge_between(a, b) for a, b in zip(verts, verts[1:])]
