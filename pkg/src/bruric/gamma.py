"""Graphs on values that record which reflections give Hasse edges at one element."""

from dataclasses import dataclass

from .perms import b_cover_reflections, check_window, d_cover_reflections


@dataclass(frozen=True)
class GammaGraphB:
    """Labelled multigraph on ``1..n``: loops, plain edges and minus edges.

    A loop at ``a`` records the reflection (a,-a); a plain edge {a,b} the
    reflection (a,b)(-a,-b); a minus edge {a,b} the reflection (a,-b)(-a,b).
    Each edge, loops included, adds one to the degree of its end vertices.
    """

    n: int
    loops: tuple
    plain: tuple
    minus: tuple

    @property
    def edge_count(self):
        return len(self.loops) + len(self.plain) + len(self.minus)

    def degree(self, a):
        return (self.loops.count(a)
                + sum(a in e for e in self.plain)
                + sum(a in e for e in self.minus))

    def degrees(self):
        return {a: self.degree(a) for a in range(1, self.n + 1)}

    def tilde(self):
        edges = set()
        for a, b in self.plain:
            edges |= {_edge(a, b), _edge(-a, -b)}
        for a, b in self.minus:
            edges |= {_edge(a, -b), _edge(-a, b)}
        for a in self.loops:
            edges.add(_edge(a, -a))
        return SignedGraph(self.n, tuple(sorted(edges)))


@dataclass(frozen=True)
class SignedGraph:
    """Simple graph on the signed values ``±1..±n``."""

    n: int
    edges: tuple

    @property
    def vertices(self):
        return tuple(range(-self.n, 0)) + tuple(range(1, self.n + 1))

    @property
    def edge_count(self):
        return len(self.edges)

    def degree(self, v):
        return sum(v in e for e in self.edges)

    def degrees(self):
        return {v: self.degree(v) for v in self.vertices}


GammaTildeB = SignedGraph
GammaGraphD = SignedGraph


def _edge(u, v):
    return (u, v) if u < v else (v, u)


def _split(refls):
    loops, plain, minus = [], [], []
    for r in refls:
        if r.kind == "sign":
            loops.append(r.a)
        elif r.kind == "pair":
            plain.append((r.a, r.b))
        else:
            minus.append((r.a, r.b))
    return tuple(sorted(loops)), tuple(sorted(plain)), tuple(sorted(minus))


def gamma_b(w):
    w = check_window(w, "B")
    up, down = b_cover_reflections(w)
    return GammaGraphB(len(w), *_split(up + down))


def gamma_tilde_b(w):
    return gamma_b(w).tilde()


def gamma_d(w):
    w = check_window(w, "D")
    up, down = d_cover_reflections(w)
    _, plain, minus = _split(up + down)
    edges = set()
    for a, b in plain:
        edges |= {_edge(a, b), _edge(-a, -b)}
    for a, b in minus:
        edges |= {_edge(a, -b), _edge(-a, b)}
    return SignedGraph(len(w), tuple(sorted(edges)))


def min_gamma_degree(w, family):
    """Vertex of smallest degree in the family's Gamma graph, and that degree.

    Ties go to the smallest positive vertex.
    """
    if family == "B":
        degs = gamma_b(w).degrees()
        order = range(1, len(w) + 1)
    elif family == "D":
        degs = gamma_d(w).degrees()
        order = [v for a in range(1, len(w) + 1) for v in (a, -a)]
    else:
        raise ValueError("Gamma graphs exist for families B and D only")
    best = min(order, key=lambda v: degs[v])
    return best, degs[best]
