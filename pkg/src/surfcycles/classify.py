"""Simplicity, separation and contractibility tests for cycles."""
from __future__ import annotations

from collections import deque
from enum import Enum
from typing import Sequence

from .errors import NotSimple
from .loops import TreeCotree, shortest_path_tree, tree_cotree
from .surface import SidedCycle, Surface, cut_along_simple_cycle


class CycleClass(str, Enum):
    NONSEPARATING = "NONSEPARATING"
    SEPARATING_NONCONTRACTIBLE = "SEPARATING_NONCONTRACTIBLE"
    CONTRACTIBLE = "CONTRACTIBLE"

    @property
    def noncontractible(self) -> bool:
        return self is not CycleClass.CONTRACTIBLE


def is_simple(cycle: SidedCycle | Sequence[int], surface: Surface) -> bool:
    hs = cycle.half_edges if isinstance(cycle, SidedCycle) else cycle
    verts = [surface.origin[h] for h in hs]
    return len(hs) >= 3 and len(set(verts)) == len(verts)


def _piece_stats(surface: Surface, labels: list[int], count: int):
    """Per component: (chi, boundary count)."""
    v = [0] * count
    e = [0] * count
    f = [0] * count
    b = [0] * count
    for lab in labels:
        v[lab] += 1
    o = surface.origin
    for k in range(surface.n_edges):
        e[labels[o[2 * k]]] += 1
    for fi, h in enumerate(surface.face_he):
        if surface.face_boundary[fi]:
            b[labels[o[h]]] += 1
        else:
            f[labels[o[h]]] += 1
    return [(v[i] - e[i] + f[i], b[i]) for i in range(count)]


def classify_simple_cycle(surface: Surface, cycle: SidedCycle) -> CycleClass:
    """Cut along the cycle and inspect the pieces."""
    if not is_simple(cycle, surface):
        raise NotSimple("cycle repeats a vertex")
    cut = cut_along_simple_cycle(surface, cycle)
    count, labels = cut.surface.connected_components()
    if count == 1:
        return CycleClass.NONSEPARATING
    stats = _piece_stats(cut.surface, labels, count)
    if any(chi == 1 and b == 1 for chi, b in stats):
        return CycleClass.CONTRACTIBLE
    return CycleClass.SEPARATING_NONCONTRACTIBLE


def is_null_homologous_walk(surface: Surface, half_edges: Sequence[int]) -> bool:
    """Two-colour the faces so that colours differ exactly across edges the
    walk uses an odd number of times."""
    odd = [0] * surface.n_edges
    for h in half_edges:
        odd[h >> 1] ^= 1
    color = [-1] * surface.n_faces
    face, face_he, nxt = surface.face, surface.face_he, surface.next
    for start in range(surface.n_faces):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            f = queue.popleft()
            h0 = face_he[f]
            h = h0
            while True:
                g = face[h ^ 1]
                want = color[f] ^ odd[h >> 1]
                if color[g] < 0:
                    color[g] = want
                    queue.append(g)
                elif color[g] != want:
                    return False
                h = nxt[h]
                if h == h0:
                    break
    return True


class HomologyClassifier:
    """Fast classification on a closed surface.

    Each edge carries a bitmask of the dual loops (one per leftover edge of a
    tree-cotree decomposition) that cross it; a cycle is null-homologous iff
    the XOR of its edge masks vanishes.  Separating cycles are then tested for
    bounding a disk by exploring both sides in lockstep and stopping at the
    smaller one.
    """

    def __init__(self, surface: Surface, decomposition: TreeCotree | None = None):
        self.surface = surface
        if decomposition is None:
            decomposition = tree_cotree(surface, shortest_path_tree(surface, 0))
        self.mask = self._masks(surface, decomposition)
        self.euler = surface.euler_characteristic()

    @staticmethod
    def _masks(surface: Surface, tc: TreeCotree) -> list[int]:
        n_f = surface.n_faces
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n_f)]
        for e in tc.cotree_edges:
            a, b = surface.face[2 * e], surface.face[2 * e + 1]
            adj[a].append((b, e))
            adj[b].append((a, e))
        token = [0] * n_f
        mask = [0] * surface.n_edges
        for j, e in enumerate(tc.leftover):
            bit = 1 << j
            mask[e] = bit
            token[surface.face[2 * e]] ^= bit
            token[surface.face[2 * e + 1]] ^= bit
        # post-order over the cotree: an edge lies on a dual path iff its
        # subtree holds exactly one end of it
        parent_edge = [-1] * n_f
        seen = [False] * n_f
        order = []
        for root in range(n_f):
            if seen[root]:
                continue
            seen[root] = True
            stack = [root]
            while stack:
                f = stack.pop()
                order.append(f)
                for g, e in adj[f]:
                    if not seen[g]:
                        seen[g] = True
                        parent_edge[g] = e
                        stack.append(g)
        acc = token[:]
        for f in reversed(order):
            e = parent_edge[f]
            if e < 0:
                continue
            mask[e] = acc[f]
            a, b = surface.face[2 * e], surface.face[2 * e + 1]
            other = b if a == f else a
            acc[other] ^= acc[f]
        return mask

    def homology(self, half_edges: Sequence[int]) -> int:
        m = 0
        mask = self.mask
        for h in half_edges:
            m ^= mask[h >> 1]
        return m

    def classify(self, half_edges: Sequence[int]) -> CycleClass:
        """Class of a simple cycle given as half-edges."""
        if self.homology(half_edges):
            return CycleClass.NONSEPARATING
        return (CycleClass.CONTRACTIBLE if self.bounds_disk(half_edges)
                else CycleClass.SEPARATING_NONCONTRACTIBLE)

    def bounds_disk(self, half_edges: Sequence[int]) -> bool:
        s = self.surface
        on_cycle = {h >> 1 for h in half_edges}
        sides = [_FaceSearch(s, [s.face[h] for h in half_edges], on_cycle),
                 _FaceSearch(s, [s.face[h ^ 1] for h in half_edges], on_cycle)]
        while True:
            for side in sides:
                if side.step():
                    chi = side.euler(len(half_edges))
                    return chi == 1 or self.euler - chi == 1


class _FaceSearch:
    """Face flood fill on one side of a cycle, one face per step."""

    def __init__(self, surface: Surface, seeds: list[int], blocked: set[int]):
        self.s = surface
        self.blocked = blocked
        self.faces: set[int] = set()
        self.queue = deque()
        for f in seeds:
            if f not in self.faces:
                self.faces.add(f)
                self.queue.append(f)

    def step(self) -> bool:
        """Expand one face; True once the side is exhausted."""
        if not self.queue:
            return True
        s = self.s
        f = self.queue.popleft()
        for h in s.face_half_edges(f):
            if (h >> 1) in self.blocked:
                continue
            g = s.face[h ^ 1]
            if g not in self.faces:
                self.faces.add(g)
                self.queue.append(g)
        return not self.queue

    def euler(self, cycle_len: int) -> int:
        """Euler characteristic of the closed side (faces plus the cycle)."""
        s = self.s
        verts, edges = set(), set()
        for f in self.faces:
            for h in s.face_half_edges(f):
                verts.add(s.origin[h])
                edges.add(h >> 1)
        return len(verts) - len(edges) + len(self.faces)
