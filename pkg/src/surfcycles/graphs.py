"""Sparse shortest-path helpers on top of scipy.sparse.csgraph.

All weights are non-negative integers; float64 sums stay exact below 2**53.
Explicitly stored zeros count as zero-weight edges.
"""
from __future__ import annotations

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import dijkstra

INF = np.inf


class WeightedGraph:
    """Undirected graph stored as a symmetric CSR matrix.

    Parallel edges collapse to the lightest one; ``edge_of`` remembers which
    edge id survived for every directed entry.
    """

    def __init__(self, n: int, u, v, w, edge_ids=None):
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        w = np.asarray(w, dtype=np.float64)
        if edge_ids is None:
            edge_ids = np.arange(len(u), dtype=np.int64)
        ids = np.asarray(edge_ids, dtype=np.int64)
        rows = np.concatenate([u, v])
        cols = np.concatenate([v, u])
        data = np.concatenate([w, w])
        eids = np.concatenate([ids, ids])
        keep = rows != cols
        rows, cols, data, eids = rows[keep], cols[keep], data[keep], eids[keep]
        order = np.lexsort((eids, data, cols, rows))
        rows, cols, data, eids = rows[order], cols[order], data[order], eids[order]
        if len(rows):
            first = np.ones(len(rows), dtype=bool)
            first[1:] = (rows[1:] != rows[:-1]) | (cols[1:] != cols[:-1])
            rows, cols, data, eids = rows[first], cols[first], data[first], eids[first]
        self.n = n
        indptr = np.zeros(n + 1, dtype=np.int32)
        np.add.at(indptr, rows + 1, 1)
        np.cumsum(indptr, out=indptr)
        self.indptr = indptr
        self.indices = cols.astype(np.int32)
        self.data = data
        self.edge_ids = eids
        self.matrix = sp.csr_matrix((data, self.indices, indptr), shape=(n, n))

    def edge_between(self, a: int, b: int) -> int:
        lo, hi = self.indptr[a], self.indptr[a + 1]
        pos = lo + np.searchsorted(self.indices[lo:hi], b)
        if pos >= hi or self.indices[pos] != b:
            raise KeyError((a, b))
        return int(self.edge_ids[pos])

    def shortest(self, sources, offsets=None, limit: float = INF):
        """Multi-source Dijkstra.

        Returns ``(dist, pred)``; ``pred`` is -1 at sources and unreached
        vertices.  ``offsets`` gives the starting distance of each source.
        """
        sources = np.asarray(sources, dtype=np.int64)
        n = self.n
        if offsets is None:
            offsets = np.zeros(len(sources))
        offsets = np.asarray(offsets, dtype=np.float64)
        # super-source row n appended without re-sorting the base matrix
        k = len(sources)
        indptr = np.empty(n + 2, dtype=np.int32)
        indptr[: n + 1] = self.indptr
        indptr[n + 1] = self.indptr[-1] + k
        indices = np.concatenate([self.indices, sources.astype(np.int32)])
        data = np.concatenate([self.data, offsets])
        m = sp.csr_matrix((data, indices, indptr), shape=(n + 1, n + 1))
        dist, pred = dijkstra(m, directed=True, indices=n, return_predecessors=True,
                              limit=limit)
        dist = dist[:n]
        pred = pred[:n]
        pred = np.where(pred == n, -1, pred)
        pred[pred < 0] = -1
        return dist, pred


def path_to(pred: np.ndarray, target: int) -> list[int]:
    """Vertex path ending at ``target`` following predecessor links."""
    path = [int(target)]
    while pred[path[-1]] >= 0:
        path.append(int(pred[path[-1]]))
    path.reverse()
    return path
