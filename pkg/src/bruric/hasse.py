"""Hasse diagrams and Bruhat graphs of enumerated groups, plus graph queries."""

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

import numpy as np

ARGMAX_CAP = 64


class Graph:
    """Undirected simple graph on vertices ``0..n-1`` in CSR form."""

    def __init__(self, vertex_count, edges=()):
        edges = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                           dtype=np.int64).reshape(-1, 2)
        edges = edges[edges[:, 0] != edges[:, 1]]
        edges = np.sort(edges, axis=1)
        edges = np.unique(edges, axis=0)
        self.vertex_count = int(vertex_count)
        both = np.concatenate([edges, edges[:, ::-1]])
        order = np.lexsort((both[:, 1], both[:, 0]))
        both = both[order]
        self.indices = both[:, 1].copy()
        self.degree = np.bincount(both[:, 0], minlength=self.vertex_count)
        self.indptr = np.concatenate([[0], np.cumsum(self.degree)])
        self._edges = edges

    @classmethod
    def from_adjacency(cls, adj):
        """Build from a dict ``{v: iterable of neighbours}`` on vertices 0..n-1."""
        edges = [(u, v) for u, nbrs in adj.items() for v in nbrs]
        n = max(list(adj) + [v for _, v in edges] + [-1]) + 1
        return cls(n, edges)

    def __len__(self):
        return self.vertex_count

    def neighbors(self, v):
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    @cached_property
    def adjacency(self):
        """Per-vertex sorted neighbour tuples."""
        ind = self.indices.tolist()
        ptr = self.indptr.tolist()
        return [tuple(ind[ptr[v]:ptr[v + 1]]) for v in range(self.vertex_count)]

    @cached_property
    def neighbor_sets(self):
        return [frozenset(a) for a in self.adjacency]

    def edges(self):
        """Array of edges ``(u, v)`` with ``u < v``, sorted."""
        return self._edges

    @property
    def edge_count(self):
        return len(self._edges)

    @property
    def max_degree(self):
        return int(self.degree.max()) if self.vertex_count else 0

    def label(self, v):
        return str(v)

    def relabeled(self, perm):
        """Copy with vertex ``v`` renamed ``perm[v]``."""
        perm = np.asarray(perm)
        return Graph(self.vertex_count, perm[self._edges])

    def has_edge(self, u, v):
        return v in self.neighbor_sets[u]


class HasseGraph(Graph):
    """Graph whose vertices are the elements of a ``GroupTable``."""

    def __init__(self, table, edges):
        super().__init__(len(table), edges)
        self.table = table
        self.lengths = table.length

    def label(self, v):
        return self.table.label(v)


def cover_edges(g):
    """All covering pairs ``(w, tw)`` with ``l(tw) = l(w) + 1``."""
    ta = g.reflection_action
    lower = np.broadcast_to(np.arange(len(g)), ta.shape)
    mask = g.length[ta] == g.length[None, :] + 1
    return np.stack([lower[mask], ta[mask]], axis=1)


def build_hasse(g):
    return HasseGraph(g, cover_edges(g))


def build_bruhat_graph(g):
    ta = g.reflection_action
    lower = np.broadcast_to(np.arange(len(g)), ta.shape)
    mask = g.length[ta] > g.length[None, :]
    return HasseGraph(g, np.stack([lower[mask], ta[mask]], axis=1))


@dataclass
class DegreeReport:
    max_degree: int
    argmax: list
    argmax_count: int
    histogram: dict

    def argmax_labels(self, graph, cap=ARGMAX_CAP):
        chosen = self.argmax if cap is None else self.argmax[:cap]
        return [graph.label(v) for v in chosen]


def degree_report(h):
    deg = h.degree
    top = int(deg.max()) if len(deg) else 0
    argmax = np.flatnonzero(deg == top).tolist()
    hist = dict(sorted(Counter(deg.tolist()).items()))
    return DegreeReport(top, argmax, len(argmax), hist)


def common_neighbor_counts(h):
    """Number of common neighbours for every edge, aligned with ``h.edges()``."""
    sets = h.neighbor_sets
    return np.fromiter((len(sets[u] & sets[v]) for u, v in h.edges().tolist()),
                       dtype=np.int64, count=h.edge_count)


def is_triangle_free(h):
    sets = h.neighbor_sets
    return not any(sets[u] & sets[v] for u, v in h.edges().tolist())


def max_triangle_pairs(h):
    """``T``: the largest number of triangles through a single edge."""
    counts = common_neighbor_counts(h)
    return int(counts.max()) if len(counts) else 0


@dataclass(frozen=True)
class LocalBall:
    """The vertices within distance two of ``center`` and the edges that matter.

    ``degree`` holds ambient degrees of the center and ring-1 vertices;
    ``cross[u]`` lists the ring-1 neighbours of a ring-2 vertex ``u``.
    """

    center: int
    ring1: tuple
    ring2: tuple
    degree: dict
    cross: dict
    ring1_edges: tuple

    @property
    def vertices(self):
        return (self.center,) + self.ring1 + self.ring2


def local_ball(h, x):
    adj = h.adjacency
    ring1 = adj[x]
    r1 = set(ring1)
    cross = {}
    edges = []
    for v in ring1:
        for u in adj[v]:
            if u == x:
                continue
            if u in r1:
                if v < u:
                    edges.append((v, u))
            else:
                cross.setdefault(u, []).append(v)
    ring2 = tuple(sorted(cross))
    degree = {v: len(adj[v]) for v in (x,) + ring1}
    return LocalBall(x, ring1, ring2, degree,
                     {u: tuple(sorted(cross[u])) for u in ring2}, tuple(edges))
