"""Simplicial complexes, the ideals attached to graphs and complexes, and
algebraic shifting (the shifted complex of a certified exterior gin).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .fields import GFP, InvalidInputError
from .gin import gin
from .graphs import Graph
from .ideals import MonomialIdeal, is_strongly_stable
from .monomials import EXT, POLY, all_monomials, ext_monomial, squarefree_poly
from .orders import TermOrder


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed face set on [1, n] containing every singleton.

    Faces are stored as sorted tuples; the empty face is always present.
    """

    n: int
    faces: frozenset[tuple[int, ...]]

    @classmethod
    def make(cls, n: int, faces) -> "SimplicialComplex":
        closed: set[tuple[int, ...]] = {()}
        for f in faces:
            f = tuple(sorted(set(f)))
            if f and not (1 <= f[0] and f[-1] <= n):
                raise InvalidInputError(f"face {f} out of range 1..{n}")
            for k in range(len(f) + 1):
                closed.update(combinations(f, k))
        for v in range(1, n + 1):
            closed.add((v,))
        return cls(n, frozenset(closed))

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.faces) - 1

    def has_face(self, s) -> bool:
        return tuple(sorted(s)) in self.faces

    def faces_of_size(self, k: int) -> set[tuple[int, ...]]:
        return {f for f in self.faces if len(f) == k}

    def f_vector(self) -> list[int]:
        """(f_{-1}, f_0, f_1, ...): face counts by dimension."""
        out = [0] * (self.dimension + 2)
        for f in self.faces:
            out[len(f)] += 1
        return out

    def facets(self) -> list[tuple[int, ...]]:
        return sorted(f for f in self.faces
                      if not any(f != g and set(f) <= set(g) for g in self.faces))

    def skeleton(self, k: int) -> "SimplicialComplex":
        """All faces of dimension <= k."""
        return SimplicialComplex(self.n,
                                 frozenset(f for f in self.faces if len(f) <= k + 1))

    def graph(self) -> Graph:
        """The 1-skeleton as a graph."""
        return Graph.make(self.n, self.faces_of_size(2))

    def __str__(self) -> str:
        return f"Complex(n={self.n}, facets={self.facets()})"


def full_simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex.make(n, [tuple(range(1, n + 1))])


def flag_complex(g: Graph) -> SimplicialComplex:
    """Faces are exactly the cliques of g."""
    cliques = [()]
    for k in range(1, g.n + 1):
        layer = [s for s in combinations(range(1, g.n + 1), k)
                 if all(g.has_edge(i, j) for i, j in combinations(s, 2))]
        if not layer:
            break
        cliques.extend(layer)
    return SimplicialComplex(g.n, frozenset(cliques))


def cone(gamma: SimplicialComplex) -> SimplicialComplex:
    """Cone with apex n+1: faces S and S + {n+1} for every face S."""
    n = gamma.n + 1
    faces = set(gamma.faces) | {f + (n,) for f in gamma.faces}
    return SimplicialComplex(n, frozenset(faces))


# -- ideals from combinatorics -----------------------------------------


def face_ideal(gamma: SimplicialComplex, ring: str = EXT) -> MonomialIdeal:
    """Exterior face ideal / Stanley-Reisner ideal: generated by non-faces."""
    gens = []
    for d in range(1, gamma.n + 1):
        for s in combinations(range(1, gamma.n + 1), d):
            if s not in gamma.faces:
                gens.append(ext_monomial(s, gamma.n) if ring == EXT
                            else squarefree_poly(s, gamma.n))
    return MonomialIdeal.make(ring, gamma.n, gens)


def edge_ideal(g: Graph) -> MonomialIdeal:
    """I(G): generated by x_i x_j over the edges of g."""
    return MonomialIdeal.make(POLY, g.n,
                              [squarefree_poly(e, g.n) for e in g.edges])


def combinatorial_ideal(source, ring: str) -> MonomialIdeal:
    """Graph + polynomial ring -> edge ideal; otherwise the face ideal of the
    complex (a bare graph is read as a 1-dimensional complex)."""
    if isinstance(source, Graph):
        if ring == POLY:
            return edge_ideal(source)
        source = SimplicialComplex.make(
            source.n, list(source.edges) + [(v,) for v in range(1, source.n + 1)])
    if ring not in (EXT, POLY):
        raise InvalidInputError(f"bad ring {ring!r}")
    return face_ideal(source, ring)


def complex_from_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    """Complex whose non-faces are exactly the (squarefree) members of the
    ideal; inverse of face_ideal."""
    n = ideal.n
    faces = [()]
    for d in range(1, n + 1):
        layer = []
        for s in combinations(range(1, n + 1), d):
            u = ext_monomial(s, n) if ideal.ring == EXT else squarefree_poly(s, n)
            if not ideal.contains(u):
                layer.append(s)
        if not layer:
            break
        faces.extend(layer)
    return SimplicialComplex(n, frozenset(faces))


# -- algebraic shifting -------------------------------------------------


def shifted_complex(order: TermOrder, gamma: SimplicialComplex, seed: int = 0,
                    trials: int = 3, field=GFP) -> SimplicialComplex:
    """The complex whose face ideal is the certified gin of J_gamma.

    Convention: non-faces form a strongly stable ideal, so faces are closed
    under exchanges that increase an index.  (The mirrored convention, with
    faces closed under decreasing exchanges, also appears in the literature.)
    """
    j = face_ideal(gamma, EXT)
    if is_strongly_stable(j)[0]:
        return gamma
    g, _cert = gin(order, j, trials=trials, seed=seed, field=field)
    return complex_from_ideal(g)


def is_shifted(gamma: SimplicialComplex) -> bool:
    return is_strongly_stable(face_ideal(gamma, EXT))[0]


# -- serialization -----------------------------------------------------


def write_complex(gamma: SimplicialComplex) -> str:
    return json.dumps({"n": gamma.n, "facets": [list(f) for f in gamma.facets()]})


def read_complex(text: str) -> SimplicialComplex:
    data = json.loads(text)
    return SimplicialComplex.make(int(data["n"]),
                                  [tuple(f) for f in data["facets"]])
