"""Cyclic Jacobi eigenvalue iteration for small dense symmetric matrices."""

from functools import lru_cache

import numpy as np

from .errors import NoConvergence

DEFAULT_TOL = 1e-12
MAX_SWEEPS = 100


@lru_cache(maxsize=None)
def round_robin(k):
    """Pairings of ``0..k-1`` covering every pair exactly once.

    The classic circle schedule: ``k - 1`` rounds (``k`` when odd), each a
    set of disjoint pairs, so one round of rotations is a single orthogonal
    matrix.
    """
    players = list(range(k)) + ([None] if k % 2 else [])
    m = len(players)
    rounds = []
    for _ in range(m - 1):
        pairs = []
        for i in range(m // 2):
            p, q = players[i], players[m - 1 - i]
            if p is not None and q is not None:
                pairs.append((min(p, q), max(p, q)))
        rounds.append(np.array(sorted(pairs), dtype=np.int64).reshape(-1, 2))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def jacobi_eigen(matrix, tol=DEFAULT_TOL, vectors=False, max_sweeps=MAX_SWEEPS):
    """Eigenvalues of a symmetric matrix, ascending.

    Each sweep visits every off-diagonal pair once, in round-robin order,
    and zeroes it with a plane rotation. Iteration stops when the
    off-diagonal Frobenius norm is below ``tol`` (scaled by the matrix norm
    when that exceeds one). With ``vectors=True`` also returns the
    orthogonal matrix whose columns are the matching eigenvectors.
    """
    a = _checked(matrix)
    out = jacobi_eigen_batch(a[None], tol, vectors, max_sweeps)
    if vectors:
        return out[0][0], out[1][0]
    return out[0]


def _checked(matrix):
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    scale = max(1.0, float(np.abs(a).max(initial=0.0)))
    if not np.allclose(a, a.T, rtol=0, atol=1e-12 * scale):
        raise ValueError("matrix must be symmetric")
    return a


def _off_norms(a):
    off = a.copy()
    k = a.shape[-1]
    off[:, np.arange(k), np.arange(k)] = 0.0
    return np.sqrt(np.einsum("bij,bij->b", off, off))


def jacobi_eigen_batch(matrices, tol=DEFAULT_TOL, vectors=False, max_sweeps=MAX_SWEEPS):
    """``jacobi_eigen`` on a stack of same-size matrices.

    A matrix stops being rotated as soon as it converges, so each result is
    exactly what ``jacobi_eigen`` gives for that matrix alone.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = np.array(matrices, dtype=float)
    a = (a + np.swapaxes(a, 1, 2)) / 2
    b, n, _ = a.shape
    q = np.broadcast_to(np.eye(n), a.shape).copy() if vectors else None
    threshold = tol * np.maximum(1.0, np.linalg.norm(a, axis=(1, 2)))
    rounds = round_robin(n)
    active = _off_norms(a) >= threshold
    sweeps = 0
    while active.any():
        idx = np.flatnonzero(active)
        if sweeps == max_sweeps:
            raise NoConvergence(f"no convergence after {max_sweeps} sweeps",
                                matrices[int(idx[0])])
        sweeps += 1
        sub = a[idx]
        subq = q[idx] if vectors else None
        for pairs in rounds:
            p, r = pairs[:, 0], pairs[:, 1]
            apr = sub[:, p, r]
            if not apr.any():
                continue
            # tan of the rotation angle, written to avoid overflow:
            # t = sgn(d) 2 a_pr / (|d| + sqrt(d^2 + 4 a_pr^2)), d = a_rr - a_pp
            d = sub[:, r, r] - sub[:, p, p]
            denom = np.abs(d) + np.sqrt(d * d + 4 * apr * apr)
            t = np.divide(np.where(d >= 0, 2 * apr, -2 * apr), denom,
                          out=np.zeros_like(apr), where=denom != 0)
            c = 1 / np.sqrt(t * t + 1)
            s = t * c
            rot = np.broadcast_to(np.eye(n), sub.shape).copy()
            rot[:, p, p] = c
            rot[:, r, r] = c
            rot[:, p, r] = s
            rot[:, r, p] = -s
            sub = np.swapaxes(rot, 1, 2) @ sub @ rot
            sub[:, p, r] = 0.0
            sub[:, r, p] = 0.0
            if vectors:
                subq = subq @ rot
        a[idx] = sub
        if vectors:
            q[idx] = subq
        active[idx] = _off_norms(sub) >= threshold[idx]
    w = np.diagonal(a, axis1=1, axis2=2).copy()
    order = np.argsort(w, axis=1, kind="stable")
    w = np.take_along_axis(w, order, axis=1)
    if vectors:
        return w, np.take_along_axis(q, order[:, None, :], axis=2)
    return w
