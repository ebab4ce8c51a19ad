"""Permutations and signed permutations in one-line (window) notation.

A signed permutation ``w`` of ``±1..±n`` is stored as the tuple of its
images of ``1..n``; images of negative positions follow from
``w(-k) = -w(k)``. Group elements act on values, so multiplying ``w`` on
the left by a reflection swaps two values wherever they occur.

The cover rules below decide, for a reflection ``t``, whether ``t w``
covers ``w`` in Bruhat order by looking only at the window of ``w``. The
downward covers of ``w`` are found by running the same test on the
candidates ``t w``, so each family has a single predicate.
"""

import re
from itertools import combinations
from typing import NamedTuple

from .errors import InvalidElement, OddSigns


# ---------------------------------------------------------------------------
# parsing and validation

_WINDOW = re.compile(r"^\[?\s*(-?\d+(\s*,\s*-?\d+)*)\s*\]?$")


def parse_window(text):
    """Parse ``"4,-3,2,-1"`` or ``"[4, -3, 2, -1]"`` into a tuple."""
    m = _WINDOW.match(text.strip())
    if not m:
        raise InvalidElement(f"cannot parse window {text!r}")
    return tuple(int(x) for x in m.group(1).split(","))


def format_window(w):
    return "[" + ",".join(str(v) for v in w) + "]"


def check_permutation(pi):
    pi = tuple(pi)
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise InvalidElement(f"{pi} is not a permutation of 1..{len(pi)}")
    return pi


def check_window(w, family="B"):
    """Validate a type B (or D) window; returns it as a tuple."""
    w = tuple(w)
    if 0 in w or sorted(abs(v) for v in w) != list(range(1, len(w) + 1)):
        raise InvalidElement(f"{w} is not a signed permutation window")
    if family == "D" and sum(v < 0 for v in w) % 2:
        raise OddSigns(f"{format_window(w)} has an odd number of negative entries")
    return w


def entry(w, k):
    """``w(k)`` for a signed position ``k``."""
    return w[k - 1] if k > 0 else -w[-k - 1]


def positions(w):
    """Map from every signed value to its signed position."""
    pos = {}
    for k, v in enumerate(w, 1):
        pos[v] = k
        pos[-v] = -k
    return pos


# ---------------------------------------------------------------------------
# reflections

class Reflection(NamedTuple):
    """A reflection of B_n/D_n written as a product of value transpositions.

    ``pair``: (a,b)(-a,-b); ``negpair``: (a,-b)(-a,b); ``sign``: (a,-a).
    For the two-value kinds ``a < b``.
    """

    kind: str
    a: int
    b: int = 0

    @classmethod
    def pair(cls, a, b):
        return cls("pair", min(a, b), max(a, b))

    @classmethod
    def negpair(cls, a, b):
        return cls("negpair", min(a, b), max(a, b))

    @classmethod
    def sign(cls, a):
        return cls("sign", a, 0)

    def swapped(self):
        """The two signed values the reflection exchanges (with their negatives)."""
        if self.kind == "pair":
            return self.a, self.b
        if self.kind == "negpair":
            return self.a, -self.b
        return self.a, -self.a

    def apply(self, w):
        """Left multiplication ``t w``."""
        x, y = self.swapped()
        swap = {x: y, y: x, -x: -y, -y: -x}
        return tuple(swap.get(v, v) for v in w)

    def __str__(self):
        a, b = self.a, self.b
        if self.kind == "pair":
            return f"({a},{b})({-a},{-b})"
        if self.kind == "negpair":
            return f"({a},{-b})({-a},{b})"
        return f"({a},{-a})"


def reflections_b(n):
    out = [Reflection.sign(a) for a in range(1, n + 1)]
    for a, b in combinations(range(1, n + 1), 2):
        out.append(Reflection.pair(a, b))
        out.append(Reflection.negpair(a, b))
    return out


def reflections_d(n):
    return [r for r in reflections_b(n) if r.kind != "sign"]


# ---------------------------------------------------------------------------
# type A

def _a_raises(pi, pos, a, b):
    """Does the transposition of values a < b move ``pi`` up by a cover?"""
    i, k = pos[a], pos[b]
    if i > k:
        return False
    return not any(a < pi[j] < b for j in range(i + 1, k))


def a_cover_transpositions(pi):
    """Value transpositions ``(a, b)`` giving up- and down-covers of ``pi``."""
    pi = check_permutation(pi)
    up, down = [], []
    pos = {v: k for k, v in enumerate(pi)}
    for a, b in combinations(range(1, len(pi) + 1), 2):
        if _a_raises(pi, pos, a, b):
            up.append((a, b))
        else:
            sigma = _transpose(pi, a, b)
            if _a_raises(sigma, {v: k for k, v in enumerate(sigma)}, a, b):
                down.append((a, b))
    return up, down


def _transpose(pi, a, b):
    swap = {a: b, b: a}
    return tuple(swap.get(v, v) for v in pi)


def cover_neighbors_a(pi):
    """``(up, down)`` sets of permutations covering / covered by ``pi``."""
    up, down = a_cover_transpositions(pi)
    return ({_transpose(pi, a, b) for a, b in up},
            {_transpose(pi, a, b) for a, b in down})


# ---------------------------------------------------------------------------
# types B and D

def _between(p, q):
    """Nonzero signed positions strictly between ``p`` and ``q``."""
    lo, hi = min(p, q), max(p, q)
    return (k for k in range(lo + 1, hi) if k != 0)


def _same_side(w, i, j):
    """Swap of positions 0 < i < j: the plain adjacent-values rule."""
    vi, vj = w[i - 1], w[j - 1]
    return vi < vj and not any(vi < w[k - 1] < vj for k in range(i + 1, j))


def _mixed_signs(w, i, j):
    """Swap of position i with -j where w(i) and w(j) have opposite signs."""
    vi, vj = w[i - 1], -w[j - 1]
    return vj < vi and all(entry(w, k) > vi or entry(w, k) < vj
                           for k in _between(-j, i))


def b_raises(w, r, pos=None):
    """Does ``r w`` cover ``w`` in the Bruhat order of B_n?"""
    pos = positions(w) if pos is None else pos
    x, y = r.swapped()
    p, q = pos[x], pos[y]
    if p == -q:
        i = abs(p)
        v = w[i - 1]
        return v > 0 and all(abs(w[k]) > v for k in range(i - 1))
    if (p > 0) == (q > 0):
        i, j = sorted((abs(p), abs(q)))
        return _same_side(w, i, j)
    i, j = (p, -q) if p > 0 else (q, -p)
    if (w[i - 1] > 0) == (w[j - 1] > 0):
        return False
    return _mixed_signs(w, i, j)


def d_raises(w, r, pos=None):
    """Does ``r w`` cover ``w`` in the Bruhat order of D_n?"""
    pos = positions(w) if pos is None else pos
    x, y = r.swapped()
    p, q = pos[x], pos[y]
    if p == -q:
        return False
    if (p > 0) == (q > 0):
        i, j = sorted((abs(p), abs(q)))
        return _same_side(w, i, j)
    i, j = (p, -q) if p > 0 else (q, -p)
    vi, vj = w[i - 1], w[j - 1]
    if (vi > 0) != (vj > 0):
        return _mixed_signs(w, i, j)
    if vi < 0:
        return False
    # both values positive: swap position i with -j, i < j
    i, j = min(i, j), max(i, j)
    lo, hi = -w[i - 1], w[j - 1]
    return all(not lo <= entry(w, k) <= hi
               for k in _between(-i, j) if k != i)


def _signed_covers(w, refls, raises):
    up, down = [], []
    pos = positions(w)
    for r in refls:
        if raises(w, r, pos):
            up.append(r)
        elif raises(r.apply(w), r):
            down.append(r)
    return up, down


def b_cover_reflections(w):
    """Reflections ``r`` with ``r w`` covering ``w`` (up) or covered by it (down)."""
    w = check_window(w, "B")
    return _signed_covers(w, reflections_b(len(w)), b_raises)


def d_cover_reflections(w):
    w = check_window(w, "D")
    return _signed_covers(w, reflections_d(len(w)), d_raises)


def cover_neighbors_b(w):
    up, down = b_cover_reflections(w)
    return {r.apply(w) for r in up}, {r.apply(w) for r in down}


def cover_neighbors_d(w):
    up, down = d_cover_reflections(w)
    return {r.apply(w) for r in up}, {r.apply(w) for r in down}


def cover_neighbors(w, family):
    if family == "A":
        return cover_neighbors_a(w)
    if family == "B":
        return cover_neighbors_b(w)
    if family == "D":
        return cover_neighbors_d(w)
    raise ValueError(f"no window cover rule for family {family}")


# ---------------------------------------------------------------------------
# closed-form lengths (checked against breadth-first depth in the tests)

def inversions(w):
    return sum(w[i] > w[j] for i, j in combinations(range(len(w)), 2))


def negative_sum_pairs(w):
    return sum(w[i] + w[j] < 0 for i, j in combinations(range(len(w)), 2))


def length_a(pi):
    return inversions(pi)


def length_b(w):
    return inversions(w) + negative_sum_pairs(w) + sum(v < 0 for v in w)


def length_d(w):
    return inversions(w) + negative_sum_pairs(w)
