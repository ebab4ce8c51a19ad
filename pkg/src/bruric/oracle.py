"""Independent local curvature computation used to cross-check ``A(x)``.

Builds the full quadratic form ``2 Gamma_2(f)(x)`` over every vertex within
distance two by polarising the literal operator, eliminates the far ring
with a linear solve and takes the smallest eigenvalue with LAPACK. None of
this shares code with the matrix construction or the Jacobi solver.
"""

import numpy as np

from .curvature import gamma2_op


def _ball_vertices(graph, x):
    ring1 = list(graph.adjacency[x])
    seen = {x, *ring1}
    ring2 = sorted({u for v in ring1 for u in graph.adjacency[v]} - seen)
    return ring1, ring2


def full_quadratic_form(graph, x):
    """Matrix of ``f -> 2 Gamma_2(f)(x)`` on ring1 + ring2 with ``f(x) = 0``."""
    ring1, ring2 = _ball_vertices(graph, x)
    variables = ring1 + ring2
    k = len(variables)
    pairs = [(i, j) for i in range(k) for j in range(i, k)]
    batch = np.zeros((k, len(pairs)))
    for col, (i, j) in enumerate(pairs):
        batch[i, col] += 1.0
        batch[j, col] += 1.0 if i != j else 0.0
    f = {x: np.zeros(len(pairs))}
    for row, v in enumerate(variables):
        f[v] = batch[row]
    values = 2 * gamma2_op(graph, f, x)
    diag = {i: values[col] for col, (i, j) in enumerate(pairs) if i == j}
    q = np.zeros((k, k))
    for col, (i, j) in enumerate(pairs):
        if i == j:
            q[i, i] = diag[i]
        else:
            q[i, j] = q[j, i] = (values[col] - diag[i] - diag[j]) / 2
    return q, ring1, ring2


def direct_local_ricci(graph, x):
    """``min over f of Gamma_2(f)(x) / Gamma(f)(x)`` by Schur complement."""
    q, ring1, ring2 = full_quadratic_form(graph, x)
    k = len(ring1)
    q11, q12, q22 = q[:k, :k], q[:k, k:], q[k:, k:]
    schur = q11 - q12 @ np.linalg.solve(q22, q12.T) if len(ring2) else q11
    return float(np.linalg.eigvalsh(schur)[0])
