"""Discrete Ricci curvature of graphs through the Gamma and Gamma_2 operators.

The local curvature at ``x`` is the smallest eigenvalue of a symmetric
matrix ``A(x)`` over the neighbours of ``x``. It comes from the expansion
of ``2 Gamma_2(f)(x)`` for ``f(x) = 0``: each vertex at distance two
appears only in squares ``(f(u) - 2 f(v))^2`` and can be minimised out,
which leaves a quadratic form in the neighbour values alone.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyBall, HasTriangles, IsolatedVertex, MissingValue, NotNormalized
from .hasse import is_triangle_free, local_ball, max_triangle_pairs
from .jacobi import DEFAULT_TOL, jacobi_eigen, jacobi_eigen_batch


def _at(f, v):
    try:
        return f[v]
    except (KeyError, IndexError):
        raise MissingValue(f"function has no value at vertex {v}") from None


def delta_op(graph, f, x):
    fx = _at(f, x)
    return sum((_at(f, v) - fx for v in graph.adjacency[x]), 0.0)


def gamma_op(graph, f, g, x):
    fx, gx = _at(f, x), _at(g, x)
    return 0.5 * sum(((_at(f, v) - fx) * (_at(g, v) - gx) for v in graph.adjacency[x]), 0.0)


def gamma2_op(graph, f, x):
    """``1/2 Delta(Gamma(f,f))(x) - Gamma(f, Delta f)(x)`` evaluated literally."""
    near = (x,) + graph.adjacency[x]
    gff = {v: gamma_op(graph, f, f, v) for v in near}
    lap = {v: delta_op(graph, f, v) for v in near}
    return 0.5 * delta_op(graph, gff, x) - gamma_op(graph, f, lap, x)


def gamma2_formula(ball, f):
    """``Gamma_2(f)(x)`` from the four-term expansion; needs ``f(x) = 0``."""
    if np.any(_at(f, ball.center) != 0):
        raise NotNormalized("the expansion requires f(center) = 0")
    x = ball.center
    total = 0.0
    for u in ball.ring2:
        fu = _at(f, u)
        for v in ball.cross[u]:
            total = total + 0.5 * (fu - 2 * _at(f, v)) ** 2
    total = total + sum((_at(f, v) for v in ball.ring1), 0.0) ** 2
    for v, w in ball.ring1_edges:
        fv, fw = _at(f, v), _at(f, w)
        total = total + 2 * (fv - fw) ** 2 + 0.5 * (fv ** 2 + fw ** 2)
    dx = ball.degree[x]
    for v in ball.ring1:
        total = total + (4 - dx - ball.degree[v]) / 2 * _at(f, v) ** 2
    return total / 2


def reduce_to_a(ball):
    """Symmetric ``A(x)`` with ``2 Gamma_2(f)(x) >= f^T A f`` and equality at the optimum.

    Rows and columns follow ``ball.ring1``.
    """
    k = len(ball.ring1)
    if k == 0:
        raise EmptyBall(f"vertex {ball.center} has no neighbours")
    pos = {v: i for i, v in enumerate(ball.ring1)}
    a = np.ones((k, k))
    if ball.ring2:
        # incidence of ring-2 vertices (rows) with their ring-1 neighbours
        inc = np.zeros((len(ball.ring2), k))
        for row, u in enumerate(ball.ring2):
            inc[row, [pos[v] for v in ball.cross[u]]] = 1.0
        kinv = 1.0 / inc.sum(axis=1)
        a += 2 * np.diag(inc.sum(axis=0)) - 2 * (inc.T * kinv) @ inc
    for v, w in ball.ring1_edges:
        i, j = pos[v], pos[w]
        a[i, i] += 2.5
        a[j, j] += 2.5
        a[i, j] -= 2.0
        a[j, i] -= 2.0
    dx = ball.degree[ball.center]
    dv = np.array([ball.degree[v] for v in ball.ring1], dtype=float)
    a[np.diag_indices(k)] += (4 - dx - dv) / 2
    return a


def local_ricci(graph, x, tol=DEFAULT_TOL):
    """``(Ric_x, spectrum of A(x))``."""
    spectrum = jacobi_eigen(reduce_to_a(local_ball(graph, x)), tol)
    return float(spectrum[0]), spectrum


def _canonical_matrix(a):
    """Deterministic relabelling of ``a`` used as a cache key.

    Two balls with equal keys have literally equal matrices, so sharing a
    spectrum between them is always safe; isomorphic balls usually, but not
    always, get the same key.
    """
    k = len(a)
    rows = [tuple(np.round(np.sort(a[i]), 9)) for i in range(k)]
    order = sorted(range(k), key=lambda i: (round(a[i, i], 9), rows[i]))
    b = np.round(a[np.ix_(order, order)], 9) + 0.0
    return (k, b.tobytes())


@dataclass
class VertexCurvature:
    vertex: int
    degree: int
    ric: float
    spectrum: np.ndarray


@dataclass
class CurvatureReport:
    rows: list
    ric: float
    worst_vertex: int
    d_max: int
    lower_bound: float | None
    simplified_lower_bound: float
    upper_bound: float
    triangle_free: bool
    labels: list = field(default=None, repr=False)

    def to_dict(self):
        rows = []
        for r in self.rows:
            rows.append({
                "vertex": r.vertex,
                "window": self.labels[r.vertex] if self.labels else str(r.vertex),
                "degree": r.degree,
                "ric": r.ric,
                "spectrum": [float(x) for x in r.spectrum],
            })
        return {
            "rows": rows,
            "summary": {
                "ric": self.ric,
                "lower_bound": self.lower_bound,
                "upper_bound": self.upper_bound,
                "d_max": self.d_max,
            },
        }


def global_ricci(graph, threads=1, dedup=False, tol=DEFAULT_TOL):
    """Curvature of every vertex, the global minimum and the bounds.

    Vertices are processed in fixed chunks of consecutive indices and
    equal-size matrices of a chunk go through the batched eigen solver
    together, so the report is byte-for-byte the same for any ``threads``.
    With ``dedup`` a chunk computes one spectrum per distinct canonical
    matrix.
    """
    n = len(graph)
    if n == 0:
        raise EmptyBall("empty graph")
    if np.any(graph.degree == 0):
        v = int(np.flatnonzero(graph.degree == 0)[0])
        raise IsolatedVertex(f"vertex {v} is isolated")

    def work(chunk):
        mats = [reduce_to_a(local_ball(graph, x)) for x in chunk]
        keys = [_canonical_matrix(a) for a in mats] if dedup else range(len(mats))
        spectra = [None] * len(mats)
        todo = {}
        first = {}
        for i, key in enumerate(keys):
            if key in first:
                continue
            first[key] = i
            todo.setdefault(len(mats[i]), []).append(i)
        for members in todo.values():
            out = jacobi_eigen_batch(np.stack([mats[i] for i in members]), tol)
            for i, spec in zip(members, out):
                spectra[i] = spec
        rows = []
        for x, key in zip(chunk, keys):
            spec = spectra[first[key]]
            rows.append(VertexCurvature(x, int(graph.degree[x]), float(spec[0]), spec))
        return rows

    chunks = [range(s, min(s + 256, n)) for s in range(0, n, 256)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(work, chunks))
    else:
        parts = [work(c) for c in chunks]
    rows = [r for part in parts for r in part]
    worst = min(rows, key=lambda r: (r.ric, r.vertex))
    free = is_triangle_free(graph)
    d_max = graph.max_degree
    return CurvatureReport(
        rows=rows,
        ric=worst.ric,
        worst_vertex=worst.vertex,
        d_max=d_max,
        lower_bound=lower_bound_triangle_free(graph) if free else None,
        simplified_lower_bound=simplified_lower_bound(d_max),
        upper_bound=upper_bound_triangles(graph),
        triangle_free=free,
        labels=[graph.label(v) for v in range(n)],
    )


def lower_bound_triangle_free(graph):
    """``4 - max over edges of (3 d(x) + d(y)) / 2``, both orientations."""
    if not is_triangle_free(graph):
        raise HasTriangles("the edgewise lower bound needs a triangle-free graph")
    e = graph.edges()
    if len(e) == 0:
        raise EmptyBall("graph has no edges")
    du, dv = graph.degree[e[:, 0]], graph.degree[e[:, 1]]
    worst = np.maximum(3 * du + dv, 3 * dv + du).max()
    return 4 - worst / 2


def simplified_lower_bound(d_max):
    return 4 - 2 * d_max


def upper_bound_triangles(graph):
    return 2 + max_triangle_pairs(graph) / 2
