"""Finite Coxeter groups realized as permutation groups of finite point sets.

Every supported group acts faithfully on a small set of points: the values
``1..n+1`` for type A, the signed values ``±1..±n`` for types B and D, the
roots for H3/F4/E6, and the ``2m`` roots of a regular polygon for I2(m).
Enumeration is a breadth-first search over left multiplication by the
simple generators, so lengths are exact Cayley-graph depths.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial

import numpy as np

from .errors import InvalidElement, OverflowBudget, UnsupportedType
from .exact import PHI, QSqrt5

FAMILIES = ("A", "B", "D", "I2", "H3", "F4", "E6")
FIXED_RANK = {"H3": 3, "F4": 4, "E6": 6}
DEFAULT_MAX_ELEMENTS = 10 ** 6


@dataclass(frozen=True)
class CoxeterSpec:
    family: str
    rank: int
    m: int | None = None

    def __post_init__(self):
        fam, rank, m = self.family, self.rank, self.m
        if fam not in FAMILIES:
            raise UnsupportedType(f"unsupported Coxeter family {fam!r}")
        if fam == "I2":
            if rank != 2:
                raise ValueError("I2 has rank 2")
            if m is None or m < 2:
                raise ValueError("I2(m) needs m >= 2")
        elif m is not None:
            raise ValueError(f"m is only meaningful for I2, not {fam}")
        minimum = {"A": 1, "B": 2, "D": 3}.get(fam)
        if minimum is not None and rank < minimum:
            raise ValueError(f"{fam}_n needs n >= {minimum}, got {rank}")
        if fam in FIXED_RANK and rank != FIXED_RANK[fam]:
            raise ValueError(f"{fam} has rank {FIXED_RANK[fam]}")

    @classmethod
    def parse(cls, family, rank=None, m=None):
        """Build a spec from loose user input such as ``("E", 6)`` or ``"H3"``."""
        fam = str(family).upper()
        if fam in ("E7", "E8", "H4"):
            raise UnsupportedType(f"{fam} is outside the supported size budget")
        if fam in ("E", "H") and rank is not None:
            if f"{fam}{rank}" in FIXED_RANK:
                fam = f"{fam}{rank}"
            else:
                raise UnsupportedType(f"{fam}{rank} is not supported")
        if fam == "I2" or (fam == "I" and m is not None):
            return cls("I2", 2, m)
        if fam in FIXED_RANK:
            return cls(fam, FIXED_RANK[fam] if rank is None else rank)
        if rank is None:
            raise ValueError(f"family {fam} needs a rank")
        return cls(fam, int(rank))

    @property
    def name(self):
        if self.family == "I2":
            return f"I2({self.m})"
        if self.family in FIXED_RANK:
            return self.family
        return f"{self.family}{self.rank}"

    @property
    def order(self):
        n = self.rank
        return {
            "A": lambda: factorial(n + 1),
            "B": lambda: 2 ** n * factorial(n),
            "D": lambda: 2 ** (n - 1) * factorial(n),
            "I2": lambda: 2 * self.m,
            "H3": lambda: 120,
            "F4": lambda: 1152,
            "E6": lambda: 51840,
        }[self.family]()

    @property
    def reflection_count(self):
        n = self.rank
        return {
            "A": n * (n + 1) // 2, "B": n * n, "D": n * n - n,
            "I2": self.m, "H3": 15, "F4": 24, "E6": 36,
        }[self.family]

    @property
    def note(self):
        if self.family == "D" and self.rank == 3:
            return "D3 is isomorphic to A3"
        return None

    @property
    def uses_windows(self):
        return self.family in ("A", "B", "D")


# ---------------------------------------------------------------------------
# realizations

@dataclass
class Realization:
    """A faithful permutation action of a Coxeter group on ``size`` points.

    ``generators[i][p]`` is the image of point ``p`` under the i-th simple
    generator. An element is stored as the row of images of all points; the
    images of ``key_points`` already determine it and ``canonical`` turns
    them into the public element key.
    """

    size: int
    generators: list
    key_points: np.ndarray
    canonical: object
    roots: list = field(default=None)


def _swap(perm, p, q):
    perm[p], perm[q] = perm[q], perm[p]


def permutation_realization(n):
    """S_{n+1} on the values 1..n+1; the key is the one-line notation."""
    size = n + 1
    gens = []
    for i in range(n):
        g = np.arange(size)
        _swap(g, i, i + 1)
        gens.append(g)
    values = np.arange(1, size + 1)
    return Realization(size, gens, np.arange(size),
                       lambda row: tuple(int(v) for v in values[list(row)]))


def signed_point(v, n):
    """Index of the signed value ``v`` among the points -n..-1, 1..n."""
    return v + n if v < 0 else v + n - 1


def signed_values(n):
    return np.array([v for v in range(-n, n + 1) if v != 0])


def signed_realization(n, family):
    """B_n or D_n acting on signed values; the key is the window."""
    size = 2 * n
    pt = lambda v: signed_point(v, n)

    def pair_swap(a, b):
        g = np.arange(size)
        _swap(g, pt(a), pt(b))
        _swap(g, pt(-a), pt(-b))
        return g

    if family == "B":
        first = np.arange(size)
        _swap(first, pt(1), pt(-1))
    elif family == "D":
        first = pair_swap(1, -2)
    else:
        raise ValueError(family)
    gens = [first] + [pair_swap(i, i + 1) for i in range(1, n)]
    values = signed_values(n)
    return Realization(size, gens, np.arange(n, size),
                       lambda row: tuple(int(v) for v in values[list(row)]))


CARTAN_EDGES = {
    # (i, j, c_ij, c_ji) for adjacent nodes; unlisted pairs commute
    "H3": [(0, 1, -PHI, -PHI), (1, 2, -1, -1)],
    "F4": [(0, 1, -1, -1), (1, 2, -2, -1), (2, 3, -1, -1)],
    "E6": [(0, 2, -1, -1), (2, 3, -1, -1), (3, 4, -1, -1), (4, 5, -1, -1),
           (1, 3, -1, -1)],
}


def cartan_matrix(family):
    rank = FIXED_RANK[family]
    c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j, cij, cji in CARTAN_EDGES[family]:
        c[i][j], c[j][i] = cij, cji
    return c


def root_system(family):
    """All roots in simple-root coordinates, sorted, plus the simple roots.

    The simple reflections act by ``s_i(v) = v - (sum_j c_ij v_j) e_i``,
    which is exact over the integers (or Q(sqrt 5) for H3).
    """
    c = cartan_matrix(family)
    rank = len(c)
    zero = QSqrt5(0) if family == "H3" else 0
    one = QSqrt5(1) if family == "H3" else 1

    def reflect(i, v):
        coeff = sum((c[i][j] * v[j] for j in range(rank)), zero)
        w = list(v)
        w[i] = w[i] - coeff
        return tuple(w)

    simple = [tuple(one if j == i else zero for j in range(rank))
              for i in range(rank)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(rank):
                w = reflect(i, v)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    roots = sorted(seen)
    return roots, simple, reflect


def root_realization(family):
    roots, simple, reflect = root_system(family)
    index = {r: k for k, r in enumerate(roots)}
    rank = len(simple)
    gens = [np.array([index[reflect(i, r)] for r in roots]) for i in range(rank)]
    keypts = np.array([index[s] for s in simple])
    return Realization(len(roots), gens, keypts,
                       lambda row: tuple(roots[k] for k in row), roots)


def dihedral_realization(m):
    """I2(m) on the 2m roots at angles k*pi/m.

    Root k sits at angle k*pi/m. The generators send root k to m-k and to
    3m-2-k, so their product is a rotation by 2pi/m. The key is
    (rotation count mod m, reflection flag).
    """
    size = 2 * m
    k = np.arange(size)
    s1 = (m - k) % size
    s2 = (3 * m - 2 - k) % size

    def canonical(row):
        r0, r1 = int(row[0]), int(row[1])
        if (r1 - r0) % size == 1:
            # rotation by r0 steps of pi/m; only even steps occur
            return ((r0 // 2) % m, 0)
        return (((r0 - m) // 2) % m, 1)

    return Realization(size, [s1, s2], np.array([0, 1]), canonical)


def realization(spec):
    if spec.family == "A":
        return permutation_realization(spec.rank)
    if spec.family in ("B", "D"):
        return signed_realization(spec.rank, spec.family)
    if spec.family == "I2":
        return dihedral_realization(spec.m)
    return root_realization(spec.family)


# ---------------------------------------------------------------------------
# group tables

@dataclass(eq=False)
class GroupTable:
    """An enumerated Coxeter group.

    ``elements[i]`` is the canonical key of element ``i`` (the window for
    A/B/D), ``length[i]`` its Coxeter length and ``generator_action[s, i]``
    the index of ``s * elements[i]``. Index 0 is the identity.
    """

    spec: CoxeterSpec
    elements: list
    length: np.ndarray
    generator_action: np.ndarray
    reflections: tuple

    def __len__(self):
        return len(self.elements)

    @cached_property
    def index(self):
        return {key: i for i, key in enumerate(self.elements)}

    def index_of(self, key):
        try:
            return self.index[tuple(key)]
        except KeyError:
            raise InvalidElement(f"{key} is not an element of {self.spec.name}") from None

    @property
    def rank(self):
        return self.generator_action.shape[0]

    @property
    def longest(self):
        return int(np.argmax(self.length))

    def reduced_word(self, w):
        """A reduced word ``[s1, ..., sk]`` with ``w = s1 s2 ... sk``."""
        word = []
        act, length = self.generator_action, self.length
        while length[w] > 0:
            for s in range(self.rank):
                if length[act[s, w]] < length[w]:
                    word.append(s)
                    w = int(act[s, w])
                    break
        return word

    def left_multiplier(self, w):
        """Index array ``x`` with ``x[v]`` the index of ``w * v``."""
        x = np.arange(len(self))
        for s in reversed(self.reduced_word(w)):
            x = self.generator_action[s][x]
        return x

    @cached_property
    def reflection_action(self):
        """Array of shape (|T|, N): row r holds the indices of ``t_r * w``."""
        if not self.reflections:
            return np.zeros((0, len(self)), dtype=np.int64)
        return np.stack([self.left_multiplier(t) for t in self.reflections])

    def label(self, i):
        return format_key(self.elements[i])

    def same_as(self, other):
        return (self.spec == other.spec
                and self.elements == other.elements
                and np.array_equal(self.length, other.length)
                and np.array_equal(self.generator_action, other.generator_action)
                and self.reflections == other.reflections)


def enumerate_group(spec, max_elements=DEFAULT_MAX_ELEMENTS):
    """Enumerate ``spec`` by breadth-first search from the identity."""
    if spec.order > max_elements:
        raise OverflowBudget(
            f"{spec.name} has {spec.order} elements, cap is {max_elements}")
    return _enumerate(realization(spec), spec, max_elements)


def _enumerate(real, spec, max_elements=DEFAULT_MAX_ELEMENTS):
    keypts = real.key_points
    ident = np.arange(real.size)
    first = tuple(ident[keypts].tolist())
    index = {first: 0}
    rows = [ident[None, :]]
    canon = [real.canonical(first)]
    length = [0]
    frontier = ident[None, :]
    depth = 0
    while len(frontier):
        depth += 1
        cand = np.concatenate([g[frontier] for g in real.generators])
        fresh = {}
        for key, row in zip(map(tuple, cand[:, keypts].tolist()), cand):
            if key not in index and key not in fresh:
                fresh[key] = row
        if not fresh:
            break
        canon_of = {k: real.canonical(k) for k in fresh}
        order = sorted(fresh, key=canon_of.__getitem__)
        for k in order:
            index[k] = len(canon)
            canon.append(canon_of[k])
            length.append(depth)
        if len(canon) > max_elements:
            raise OverflowBudget(f"more than {max_elements} elements")
        frontier = np.stack([fresh[k] for k in order])
        rows.append(frontier)
    allrows = np.concatenate(rows)

    def lookup(rowset):
        return np.fromiter((index[k] for k in map(tuple, rowset[:, keypts].tolist())),
                           dtype=np.int64, count=len(rowset))

    action = np.stack([lookup(g[allrows]) for g in real.generators])

    refl = {tuple(g.tolist()) for g in real.generators}
    frontier = [np.array(r) for r in refl]
    while frontier:
        nxt = []
        for t in frontier:
            for g in real.generators:
                c = g[t[g]]
                key = tuple(c.tolist())
                if key not in refl:
                    refl.add(key)
                    nxt.append(c)
        frontier = nxt
    tidx = sorted(index[tuple(np.array(t)[keypts].tolist())] for t in refl)
    return GroupTable(spec, canon, np.array(length, dtype=np.int64), action, tuple(tidx))


def generic_covers(g, w):
    """Bruhat covers of element ``w``: ``(up, down)`` as sorted index lists."""
    cand = g.reflection_action[:, w]
    lw = g.length[w]
    up = sorted(set(cand[g.length[cand] == lw + 1].tolist()))
    down = sorted(set(cand[g.length[cand] == lw - 1].tolist()))
    return up, down


def format_key(key):
    """Text form of an element key; windows print as ``1,-2,3``."""
    if key and isinstance(key[0], tuple):
        return "|".join(",".join(str(x) for x in v) for v in key)
    return ",".join(str(x) for x in key)
