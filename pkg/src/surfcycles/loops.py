"""Shortest-path tree, tree-cotree decomposition and the system of loops."""
from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import BoundarySurface, GenusZero
from .surface import Surface


@dataclass
class ShortestPathTree:
    root: int
    dist: list[int]
    parent_he: list[int]   # half-edge from v towards its parent, -1 at the root

    def tree_edges(self) -> set[int]:
        return {h >> 1 for h in self.parent_he if h >= 0}

    def path_to_root(self, v: int) -> list[int]:
        """Half-edges from ``v`` up to the root."""
        out = []
        while self.parent_he[v] >= 0:
            h = self.parent_he[v]
            out.append(h)
            v = _head(self, h)
        return out

    def path_from_root(self, v: int) -> list[int]:
        """Half-edges from the root down to ``v``."""
        return [h ^ 1 for h in reversed(self.path_to_root(v))]


def _head(tree: ShortestPathTree, h: int) -> int:
    return tree._origin[h ^ 1]  # type: ignore[attr-defined]


def shortest_path_tree(surface: Surface, root: int) -> ShortestPathTree:
    """Dijkstra from ``root``; among equal distances the smaller edge id wins."""
    n = surface.n_vertices
    inf = float("inf")
    dist = [inf] * n
    parent = [-1] * n
    done = [False] * n
    dist[root] = 0
    heap = [(0, root)]
    adj = surface.adjacency()
    while heap:
        d, v = heapq.heappop(heap)
        if done[v] or d != dist[v]:
            continue
        done[v] = True
        for u, w, h in adj[v]:
            if done[u]:
                continue
            nd = d + w
            if nd < dist[u]:
                dist[u] = nd
                parent[u] = h ^ 1
                heapq.heappush(heap, (nd, u))
            elif nd == dist[u] and (h >> 1) < (parent[u] >> 1):
                parent[u] = h ^ 1
    tree = ShortestPathTree(root, dist, parent)
    tree._origin = surface.origin  # type: ignore[attr-defined]
    return tree


@dataclass
class TreeCotree:
    tree: ShortestPathTree
    tree_edges: set[int]
    cotree_edges: set[int]     # primal ids of edges whose duals form T*
    leftover: list[int]        # edges in neither tree, sorted by id
    loop_weight: dict[int, int]      # loop weight for every non-tree edge


def tree_cotree(surface: Surface, tree: ShortestPathTree) -> TreeCotree:
    """Maximum spanning tree of the dual over non-tree edges, weighted by
    the length of the loop each edge induces."""
    if not surface.is_closed:
        raise BoundarySurface("close the boundaries before building loops")
    t_edges = tree.tree_edges()
    d = tree.dist
    loop_weight = {}
    candidates = []
    for e in range(surface.n_edges):
        if e in t_edges:
            continue
        u, v = surface.endpoints(e)
        loop_weight[e] = d[u] + surface.weights[e] + d[v]
        candidates.append((-loop_weight[e], e))
    candidates.sort()
    parent = list(range(surface.n_faces))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    cotree = set()
    leftover = []
    for _, e in candidates:
        a, b = find(surface.face[2 * e]), find(surface.face[2 * e + 1])
        if a != b:
            parent[a] = b
            cotree.add(e)
        else:
            leftover.append(e)
    leftover.sort()
    return TreeCotree(tree, t_edges, cotree, leftover, loop_weight)


@dataclass
class Loop:
    index: int
    edge: int                  # the leftover edge that closes the loop
    half_edges: list[int]      # closed walk starting and ending at the root
    length: int

    def vertices(self, surface: Surface) -> list[int]:
        return [surface.origin[h] for h in self.half_edges]


@dataclass
class SystemOfLoops:
    root: int
    loops: list[Loop]

    def __len__(self):
        return len(self.loops)

    def __iter__(self):
        return iter(self.loops)

    def __getitem__(self, i):
        return self.loops[i]


def loops_from_decomposition(surface: Surface, decomposition: TreeCotree) -> SystemOfLoops:
    """One loop per leftover edge ``e = (u, v)``: root to ``u``, across ``e``,
    then back from ``v`` to the root."""
    if not decomposition.leftover:
        raise GenusZero("genus 0: no non-trivial loops")
    tree = decomposition.tree
    loops = []
    for i, e in enumerate(decomposition.leftover):
        u, v = surface.endpoints(e)
        hs = tree.path_from_root(u) + [2 * e] + tree.path_to_root(v)
        loops.append(Loop(i, e, hs, surface.walk_length(hs)))
    return SystemOfLoops(tree.root, loops)


def system_of_loops(surface: Surface, root: int) -> tuple[SystemOfLoops, TreeCotree]:
    tree = shortest_path_tree(surface, root)
    tc = tree_cotree(surface, tree)
    return loops_from_decomposition(surface, tc), tc
