"""Brute-force reference implementations that share no code with the package."""

from itertools import combinations

import numpy as np


def inversions(w):
    return sum(w[i] > w[j] for i, j in combinations(range(len(w)), 2))


def tableau_leq(u, v):
    """Bruhat order on S_n by comparing sorted prefixes (tableau criterion)."""
    for i in range(1, len(u)):
        if any(a > b for a, b in zip(sorted(u[:i]), sorted(v[:i]))):
            return False
    return True


def s_n_covers(u, elements):
    """Elements covering ``u`` in S_n, by brute force over the whole group."""
    lu = inversions(u)
    return {v for v in elements if inversions(v) == lu + 1 and tableau_leq(u, v)}


def unfold(w):
    """Signed window as a permutation of 1..2n (values -n..-1,1..n relabelled)."""
    n = len(w)
    full = {k: w[k - 1] for k in range(1, n + 1)}
    full.update({-k: -w[k - 1] for k in range(1, n + 1)})
    slot = {v: i + 1 for i, v in enumerate(list(range(-n, 0)) + list(range(1, n + 1)))}
    return tuple(slot[full[k]] for k in list(range(-n, 0)) + list(range(1, n + 1)))


def signed_leq(u, v):
    """Bruhat order on B_n via the order induced from S_2n."""
    return tableau_leq(unfold(u), unfold(v))


def matrix_group_order(cartan):
    """Order of the group generated by the simple reflections of an integer Cartan matrix."""
    c = np.array(cartan, dtype=np.int64)
    n = len(c)
    gens = []
    for i in range(n):
        s = np.eye(n, dtype=np.int64)
        s[i, :] -= c[i, :]
        gens.append(s)
    start = np.eye(n, dtype=np.int64)
    seen = {start.tobytes()}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for s in gens:
                p = s @ m
                key = p.tobytes()
                if key not in seen:
                    seen.add(key)
                    nxt.append(p)
        frontier = nxt
    return len(seen)


def brute_ricci(adj, x, samples=None):
    """Local curvature by dense minimisation over every function near ``x``.

    ``adj`` maps vertices to neighbour sets. Builds 2*Gamma_2 and 2*Gamma
    from their textbook definitions as quadratic forms (polarisation of
    hand-written operators) and solves the generalised eigenproblem by
    eliminating the variables outside the first ring.
    """
    ring1 = sorted(adj[x])
    ring2 = sorted({u for v in ring1 for u in adj[v]} - set(ring1) - {x})
    var = ring1 + ring2
    k = len(var)

    def lap(f, v):
        return sum(f.get(w, 0.0) - f.get(v, 0.0) for w in adj[v])

    def gam(f, g, v):
        return 0.5 * sum((f.get(w, 0.0) - f.get(v, 0.0)) * (g.get(w, 0.0) - g.get(v, 0.0))
                         for w in adj[v])

    def g2(f):
        near = [x] + ring1
        gf = {v: gam(f, f, v) for v in near}
        lf = {v: lap(f, v) for v in near}
        return 0.5 * lap(gf, x) - gam(f, lf, x)

    def form(i, j):
        f = {var[i]: 1.0}
        f[var[j]] = f.get(var[j], 0.0) + 1.0
        return 2 * g2(f)

    diag = [form(i, i) / 4 for i in range(k)]
    q = np.zeros((k, k))
    for i in range(k):
        q[i, i] = diag[i]
        for j in range(i + 1, k):
            q[i, j] = q[j, i] = (form(i, j) - diag[i] - diag[j]) / 2
    a = len(ring1)
    s = q[:a, :a]
    if k > a:
        s = s - q[:a, a:] @ np.linalg.solve(q[a:, a:], q[a:, :a])
    return float(np.linalg.eigvalsh(s)[0])


def adjacency(graph):
    return {v: set(graph.adjacency[v]) for v in range(len(graph))}


def signed_length(w, family):
    n = len(w)
    inv = sum(w[i] > w[j] for i in range(n) for j in range(i + 1, n))
    nsp = sum(w[i] + w[j] < 0 for i in range(n) for j in range(i + 1, n))
    neg = sum(v < 0 for v in w) if family == "B" else 0
    return inv + nsp + neg


def signed_reflection_images(w, family):
    """All ``t w`` for reflections ``t``, acting on values."""
    n = len(w)
    swaps = []
    if family == "B":
        swaps += [(a, -a) for a in range(1, n + 1)]
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            swaps += [(a, b), (a, -b)]
    out = []
    for x, y in swaps:
        m = {x: y, y: x, -x: -y, -y: -x}
        out.append(tuple(m.get(v, v) for v in w))
    return out


def signed_covers(w, family):
    """``(up, down)`` covers of a signed permutation from lengths alone."""
    lw = signed_length(w, family)
    up = {v for v in signed_reflection_images(w, family) if signed_length(v, family) == lw + 1}
    down = {v for v in signed_reflection_images(w, family) if signed_length(v, family) == lw - 1}
    return up, down
