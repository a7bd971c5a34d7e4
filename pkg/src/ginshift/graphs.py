"""Graphs: constructors, induced-subgraph tests, and the two combinatorial
classifiers (forbidden subgraphs; iterated near-cone peeling).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, permutations

from .fields import InvalidInputError


def _norm_edge(e) -> tuple[int, int]:
    i, j = e
    if i == j:
        raise InvalidInputError(f"loop edge {e}")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]

    @classmethod
    def make(cls, n: int, edges) -> "Graph":
        es = frozenset(_norm_edge(e) for e in edges)
        for i, j in es:
            if not (1 <= i <= n and 1 <= j <= n):
                raise InvalidInputError(f"edge ({i},{j}) out of range 1..{n}")
        return cls(n, es)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbors(self, v: int) -> set[int]:
        return {j for e in self.edges if v in e for j in e if j != v}

    def isolated_vertices(self) -> set[int]:
        return {v for v in range(1, self.n + 1) if self.degree(v) == 0}

    def complement(self) -> "Graph":
        all_pairs = {(i, j) for i, j in combinations(range(1, self.n + 1), 2)}
        return Graph(self.n, frozenset(all_pairs - self.edges))

    def induced(self, vertices) -> "Graph":
        """Induced subgraph, relabeled 1..|vertices| in sorted vertex order."""
        vs = sorted(vertices)
        idx = {v: k + 1 for k, v in enumerate(vs)}
        es = {(idx[i], idx[j]) for i, j in self.edges if i in idx and j in idx}
        return Graph.make(len(vs), es)

    def delete_vertices(self, vertices) -> "Graph":
        return self.induced(set(range(1, self.n + 1)) - set(vertices))

    def relabel(self, perm: dict[int, int]) -> "Graph":
        es = {(perm[i], perm[j]) for i, j in self.edges}
        return Graph.make(self.n, es)

    def components(self) -> list[set[int]]:
        seen: set[int] = set()
        comps = []
        for v in range(1, self.n + 1):
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                u = stack.pop()
                for w in self.neighbors(u):
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(comp)
        return comps

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"


# -- standard constructions --------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph.make(n, combinations(range(1, n + 1), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.make(a + b, ((i, a + j) for i in range(1, a + 1)
                              for j in range(1, b + 1)))


def disjoint_cliques(a: int, b: int) -> Graph:
    edges = list(combinations(range(1, a + 1), 2))
    edges += list(combinations(range(a + 1, a + b + 1), 2))
    return Graph.make(a + b, edges)


def path_graph(n: int) -> Graph:
    return Graph.make(n, ((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    return Graph.make(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


#: the three forbidden graphs; edge sets pinned by the classification proof
GRAPH_A = Graph.make(4, [(1, 2), (1, 3), (3, 4)])
GRAPH_B = Graph.make(5, [(1, 2), (3, 4), (3, 5)])
GRAPH_C = Graph.make(6, [(1, 2), (3, 4), (5, 6)])


# -- induced subgraph search -------------------------------------------


def contains_induced(g: Graph, h: Graph):
    """(found, embedding): does some injection map h edge-exactly onto an
    induced subgraph of g?  Brute force; |h| <= 6 in every use here."""
    if h.n > g.n:
        return False, None
    hverts = list(range(1, h.n + 1))
    for img in permutations(range(1, g.n + 1), h.n):
        ok = True
        for a, b in combinations(hverts, 2):
            if h.has_edge(a, b) != g.has_edge(img[a - 1], img[b - 1]):
                ok = False
                break
        if ok:
            return True, dict(zip(hverts, img))
    return False, None


def condition_forbidden(g: Graph):
    """Neither g nor its complement contains (a), (b), (c) induced.

    Returns (flag, witness) where the witness names the forbidden graph and
    the embedding on first failure.
    """
    comp = g.complement()
    for name, h in (("a", GRAPH_A), ("b", GRAPH_B), ("c", GRAPH_C)):
        for tag, target in (("G", g), ("complement", comp)):
            found, emb = contains_induced(target, h)
            if found:
                return False, {"graph": name, "in": tag, "embedding": emb}
    return True, None


# -- near cones and peeling --------------------------------------------


def is_near_cone(g: Graph, v: int) -> bool:
    """Every non-isolated vertex other than v is adjacent to v."""
    if not 1 <= v <= g.n:
        raise InvalidInputError(f"vertex {v} out of range")
    nv = g.neighbors(v)
    return all(t in nv for t in range(1, g.n + 1)
               if t != v and g.degree(t) > 0)


SEMI_BIPARTITE = "semi-complete-bipartite"
TWO_CLIQUES = "two-semi-complete-cliques"
NEITHER = "neither"


def base_form(g: Graph) -> str:
    """Classify g after deleting isolated vertices: complete bipartite,
    disjoint union of at most two complete graphs, or neither.

    The edgeless graph is accepted as (degenerate) complete bipartite.
    """
    core = g.delete_vertices(g.isolated_vertices())
    if core.n == 0:
        return SEMI_BIPARTITE
    comps = core.components()
    if all(core.induced(c).edge_count == len(c) * (len(c) - 1) // 2 for c in comps) \
            and len(comps) <= 2:
        # note K_1 and K_2 are also complete bipartite; bipartite wins below
        two_cliques = True
    else:
        two_cliques = False
    if len(comps) == 1 and _is_complete_bipartite(core):
        return SEMI_BIPARTITE
    if two_cliques:
        return TWO_CLIQUES
    return NEITHER


def _is_complete_bipartite(g: Graph) -> bool:
    color = {1: 0}
    stack = [1]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in color:
                color[w] = 1 - color[u]
                stack.append(w)
            elif color[w] == color[u]:
                return False
    if len(color) < g.n:
        return False
    part0 = {v for v, c in color.items() if c == 0}
    part1 = set(color) - part0
    return g.edge_count == len(part0) * len(part1)


def condition_peelable(g: Graph):
    """Is g a k-near cone of a semi-complete bipartite graph or of a
    disjoint union of two semi-complete graphs, for some k >= 0?

    Exhaustive branching over peelable vertices with memoization on the
    residual vertex set (greedy peeling is not obviously confluent).
    Returns (flag, peel_sequence, base_label).
    """
    memo: dict[frozenset, tuple] = {}

    def search(vertices: frozenset):
        if vertices in memo:
            return memo[vertices]
        sub = g.induced(vertices)
        vs = sorted(vertices)
        label = base_form(sub)
        if label != NEITHER:
            memo[vertices] = (True, (), label)
            return memo[vertices]
        result = (False, None, NEITHER)
        for k, v in enumerate(vs, start=1):
            if is_near_cone(sub, k):
                ok, seq, lab = search(vertices - {v})
                if ok:
                    result = (True, (v,) + seq, lab)
                    break
        memo[vertices] = result
        return result

    return search(frozenset(range(1, g.n + 1)))


# public contract names for the two classifiers
condition_v = condition_forbidden
condition_vi = condition_peelable


# -- chordality --------------------------------------------------------


def lexbfs_order(g: Graph) -> list[int]:
    labels: dict[int, list[int]] = {v: [] for v in range(1, g.n + 1)}
    order = []
    remaining = set(range(1, g.n + 1))
    step = g.n
    while remaining:
        v = max(remaining, key=lambda u: (labels[u], -u))
        order.append(v)
        remaining.discard(v)
        for w in g.neighbors(v):
            if w in remaining:
                labels[w].append(step)
        step -= 1
    return order


def is_chordal(g: Graph) -> bool:
    """Perfect elimination ordering via LexBFS, then the standard check."""
    order = lexbfs_order(g)
    pos = {v: i for i, v in enumerate(order)}
    # reversed LexBFS order is a PEO iff g is chordal
    for v in order:
        earlier = {w for w in g.neighbors(v) if pos[w] < pos[v]}
        if not earlier:
            continue
        u = max(earlier, key=lambda w: pos[w])
        if not (earlier - {u}) <= g.neighbors(u):
            return False
    return True


# -- serialization -----------------------------------------------------


def write_graph(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{i} {j}" for i, j in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def read_graph(text: str) -> Graph:
    text = text.strip()
    if text.startswith("{"):
        data = json.loads(text)
        return Graph.make(int(data["n"]), [tuple(e) for e in data["edges"]])
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0][0] != "n":
        raise InvalidInputError("graph file must start with 'n <int>'")
    n = int(lines[0][1])
    edges = [(int(a), int(b)) for a, b in lines[1:]]
    return Graph.make(n, edges)
