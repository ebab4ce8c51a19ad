"""Compare the Bruhat order of B_n with the order induced from S_{2n}."""

from dataclasses import dataclass

from .errors import BudgetExceeded
from .groups import (CoxeterSpec, _enumerate, enumerate_group, permutation_realization,
                     signed_point, signed_realization)
from .hasse import cover_edges


def down_sets(g):
    """Bitmask of ``{v : v <= w}`` for every element ``w``."""
    below = [1 << w for w in range(len(g))]
    lower = {}
    for u, v in cover_edges(g).tolist():
        lower.setdefault(v, []).append(u)
    for w in sorted(range(len(g)), key=lambda i: g.length[i]):
        for u in lower.get(w, ()):
            below[w] |= below[u]
    return below


def unfold(w):
    """The signed permutation ``w`` as a permutation of 1..2n.

    The signed values -n..-1, 1..n are relabelled 1..2n in increasing order.
    """
    n = len(w)
    image = {}
    for k in range(1, n + 1):
        image[k] = w[k - 1]
        image[-k] = -w[k - 1]
    return tuple(signed_point(image[k], n) + 1
                 for k in list(range(-n, 0)) + list(range(1, n + 1)))


@dataclass
class EmbeddingReport:
    n: int
    pairs: int
    agree: bool
    counterexample: tuple | None = None


def verify_embedding(n):
    if n > 3:
        raise BudgetExceeded("full Bruhat orders are only compared for n <= 3")
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        b = _enumerate(signed_realization(1, "B"), None)
        s = _enumerate(permutation_realization(1), None)
    else:
        b = enumerate_group(CoxeterSpec("B", n))
        s = enumerate_group(CoxeterSpec("A", 2 * n - 1))
    b_below, s_below = down_sets(b), down_sets(s)
    image = [s.index[unfold(w)] for w in b.elements]
    for u in range(len(b)):
        for v in range(len(b)):
            in_b = bool(b_below[v] >> u & 1)
            in_s = bool(s_below[image[v]] >> image[u] & 1)
            if in_b != in_s:
                return EmbeddingReport(n, u * len(b) + v + 1, False,
                                       (b.elements[u], b.elements[v], in_b, in_s))
    return EmbeddingReport(n, len(b) ** 2, True)
