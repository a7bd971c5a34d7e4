"""Numerical invariants: positional profiles, m-counts, graded Betti numbers
(closed formulas plus a brute-force Taylor-complex oracle), the alpha map,
regularity, and the closed-form shifted-graph profiles with their independent
summation-based derivation.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations
from math import comb

from .changes import CoordinateChange, SizeLimitError
from .complexes import SimplicialComplex, shifted_complex, combinatorial_ideal
from .fields import GFP, QQ, InvalidInputError
from .gin import gin_adaptive, gin
from .graphs import Graph
from .ideals import MonomialIdeal, is_strongly_stable
from .linalg import rref_exact
from .monomials import (EXT, POLY, ExtMonomial, Monomial, PolyMonomial,
                        squarefree_poly)
from .orders import LEX, REVLEX, TermOrder


# -- Betti tables -------------------------------------------------------


@dataclass(frozen=True)
class BettiTable:
    """beta_{i,i+j} keyed by (i, j); generators sit at homological position
    i = 0 (ideal-indexed convention)."""

    entries: tuple[tuple[int, int, int], ...]

    @classmethod
    def make(cls, data: dict[tuple[int, int], int]) -> "BettiTable":
        items = tuple(sorted((i, j, v) for (i, j), v in data.items() if v))
        return cls(items)

    def get(self, i: int, j: int) -> int:
        for a, b, v in self.entries:
            if (a, b) == (i, j):
                return v
        return 0

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(i, j): v for i, j, v in self.entries}

    def regularity(self) -> int:
        return max((j for _i, j, v in self.entries if v), default=0)

    def to_json(self) -> dict:
        return {"entries": [[i, j, v] for i, j, v in self.entries],
                "convention": "ideal-indexed"}

    def __str__(self) -> str:
        if not self.entries:
            return "(empty)"
        imax = max(i for i, _j, _v in self.entries)
        js = sorted({j for _i, j, _v in self.entries})
        lines = ["i\\j " + " ".join(f"{j:>4}" for j in js)]
        for i in range(imax + 1):
            lines.append(f"{i:>3} " + " ".join(
                f"{self.get(i, j) or '.':>4}" for j in js))
        return "\n".join(lines)


# -- positional statistics ---------------------------------------------


def index_profile(ideal: MonomialIdeal, d: int) -> tuple[list[int], list[int]]:
    """(min_le, max_le) over k = 1..n for the degree-d component."""
    comp = ideal.degree_component(d)
    n = ideal.n
    min_le = [sum(1 for u in comp if u.min_index() <= k) for k in range(1, n + 1)]
    max_le = [sum(1 for u in comp if u.max_index() <= k) for k in range(1, n + 1)]
    return min_le, max_le


def m_count(order: TermOrder, ideal: MonomialIdeal, u: Monomial) -> int:
    """Number of monomials of the ideal in degree deg(u) that are >= u."""
    comp = ideal.degree_component(u.degree)
    return sum(1 for t in comp if order.compare(t, u) >= 0)


def edge_stat(edges, which: str, direction: str, k: int) -> int:
    """Count edges whose max (or min) endpoint is >= k (or <= k)."""
    pick = max if which == "max" else min
    if direction == "ge":
        return sum(1 for e in edges if pick(e) >= k)
    return sum(1 for e in edges if pick(e) <= k)


# -- Betti numbers of stable ideals ------------------------------------

STABLE_POLY = "strongly-stable-polynomial"
SQUAREFREE = "squarefree-strongly-stable"


def betti_stable(ideal: MonomialIdeal, flavor: str = STABLE_POLY) -> BettiTable:
    """Closed-formula graded Betti numbers of a (squarefree) strongly stable
    ideal: sum over minimal generators of binomials in max index."""
    if flavor not in (STABLE_POLY, SQUAREFREE):
        raise InvalidInputError(f"unknown flavor {flavor!r}")
    squarefree = flavor == SQUAREFREE
    ok, witness = is_strongly_stable(ideal, squarefree=squarefree)
    if not ok:
        raise InvalidInputError(
            f"ideal is not {'squarefree ' if squarefree else ''}strongly stable: "
            f"generator {witness[0]} misses exchange {witness[1]}")
    table: dict[tuple[int, int], int] = {}
    for u in ideal.generators:
        j = u.degree
        top = u.max_index() - j if squarefree else u.max_index() - 1
        for i in range(top + 1):
            table[(i, j)] = table.get((i, j), 0) + comb(top, i)
    return BettiTable.make(table)


MAX_ORACLE_GENERATORS = 12


def resolution_oracle(ideal: MonomialIdeal) -> BettiTable:
    """Exact Betti numbers from the Taylor complex, minimalized by rank
    computations per multidegree over the rationals.  Tiny inputs only."""
    gens = ideal.generators
    if ideal.ring != POLY:
        raise InvalidInputError("resolution oracle works in the polynomial ring")
    if len(gens) > MAX_ORACLE_GENERATORS:
        raise SizeLimitError(f"{len(gens)} generators exceed the oracle cap "
                             f"of {MAX_ORACLE_GENERATORS}")
    r = len(gens)
    if r == 0:
        return BettiTable.make({})

    def lcm(subset) -> tuple[int, ...]:
        e = [0] * ideal.n
        for t in subset:
            e = [max(a, b) for a, b in zip(e, gens[t].exponents)]
        return tuple(e)

    # group Taylor basis elements (subsets of generators) by multidegree;
    # homological position i holds subsets of size i+1
    by_mdeg: dict[tuple[int, ...], dict[int, list[tuple[int, ...]]]] = {}
    for size in range(1, r + 1):
        for s in combinations(range(r), size):
            by_mdeg.setdefault(lcm(s), {}).setdefault(size - 1, []).append(s)

    # beta_{i, mdeg} = dim of the homology of the tensored complex at
    # position i in that multidegree; the differential keeps a face only when
    # dropping a generator does not change the lcm (otherwise the coefficient
    # is a non-unit monomial, which dies after tensoring with K)
    out: dict[tuple[int, int], int] = {}
    for mdeg, layers in by_mdeg.items():
        jdeg = sum(mdeg)
        for i, basis in layers.items():
            rank_out = _taylor_rank(basis, lcm)
            rank_in = _taylor_rank(layers.get(i + 1, []), lcm)
            homology = len(basis) - rank_out - rank_in
            if homology:
                key = (i, jdeg - i)  # stratum indexing: value is beta_{i,i+j}
                out[key] = out.get(key, 0) + homology
    return BettiTable.make(out)


def _taylor_rank(basis, lcm) -> int:
    """Rank of the differential leaving the given same-multidegree basis."""
    if not basis:
        return 0
    targets: dict[tuple[int, ...], int] = {}
    rows = []
    for s in basis:
        entries = {}
        m = lcm(s)
        for pos, t in enumerate(s):
            face = s[:pos] + s[pos + 1:]
            if not face or lcm(face) != m:
                continue
            col = targets.setdefault(face, len(targets))
            entries[col] = Fraction(-1) ** pos
        rows.append(entries)
    if not targets:
        return 0
    dense = [[row.get(c, Fraction(0)) for c in range(len(targets))] for row in rows]
    _red, piv = rref_exact(dense, QQ)
    return len(piv)


# -- the alpha map ------------------------------------------------------


def alpha_monomial(u: PolyMonomial) -> PolyMonomial:
    """x_{i1} x_{i2} ... x_{ik} -> x_{i1} x_{i2+1} ... x_{ik+k-1}."""
    idx = []
    for i, e in enumerate(u.exponents, start=1):
        idx.extend([i] * e)
    shifted = [i + t for t, i in enumerate(idx)]
    if shifted and shifted[-1] > u.n:
        raise InvalidInputError(f"alpha({u}) leaves the variable range 1..{u.n}")
    return squarefree_poly(shifted, u.n)


def alpha(ideal: MonomialIdeal) -> MonomialIdeal:
    ok, witness = is_strongly_stable(ideal)
    if not ok:
        raise InvalidInputError(f"alpha requires a strongly stable ideal; "
                                f"generator {witness[0]} misses {witness[1]}")
    return MonomialIdeal.make(POLY, ideal.n,
                              [alpha_monomial(g) for g in ideal.generators])


# -- regularity ---------------------------------------------------------


def regularity_from_gin(ideal: MonomialIdeal, seed: int = 0, trials: int = 3,
                        field=GFP) -> int:
    """Top generator degree of the certified RevLex gin (for exterior input
    this equals the regularity of the squarefree polynomial image)."""
    if ideal.ring == EXT:
        g, _cert = gin(REVLEX, ideal, trials=trials, seed=seed, field=field)
        return g.max_generator_degree
    g, _cert, _cap = gin_adaptive(REVLEX, ideal, trials=trials, seed=seed,
                                  field=field)
    return g.max_generator_degree


# -- closed-form shifted-graph profiles --------------------------------


def bipartite_profile(a: int, b: int) -> list[int]:
    """max_{>= n+1-k} of the shifted complete bipartite graph, k = 1..n."""
    if a > b:
        a, b = b, a
    n = a + b
    return [k * n - k * k if k <= a else a * b for k in range(1, n + 1)]


def two_cliques_profile(a: int, b: int) -> list[int]:
    """min_{>= n+1-k} of the shifted disjoint union of two cliques, k = 1..n."""
    if a > b:
        a, b = b, a
    n = a + b
    f1 = comb(a, 2) + comb(b, 2)
    return [comb(k, 2) if k <= b else f1 - comb(n - k, 2)
            for k in range(1, n + 1)]


def h_values(a: int, b: int) -> list[int]:
    """Stratum counts h_k of the shifted two-clique graph, k = 1..n."""
    if a > b:
        a, b = b, a
    n = a + b
    out = []
    for k in range(1, n + 1):
        if k <= a:
            out.append((a - k) + (b - k))
        elif k <= b:
            out.append(b - k)
        else:
            out.append(0)
    return out


def two_cliques_profile_from_h(a: int, b: int) -> list[int]:
    """Independent derivation of two_cliques_profile by the stratum sum."""
    h = h_values(a, b)
    n = len(h)
    return [sum(min(k - l, h[l - 1]) for l in range(1, k))
            for k in range(1, n + 1)]


def closed_form_profiles(a: int, b: int) -> tuple[list[int], list[int]]:
    return bipartite_profile(a, b), two_cliques_profile(a, b)


# -- the lex/revlex complement identity --------------------------------


def shifted_graph_edges(g: Graph, order: TermOrder, seed: int = 0,
                        field=GFP) -> set[tuple[int, int]]:
    """Edge set of the shifted complex of g viewed as a 1-dim complex."""
    gamma = SimplicialComplex.make(
        g.n, list(g.edges) + [(v,) for v in range(1, g.n + 1)])
    delta = shifted_complex(order, gamma, seed=seed, field=field)
    return {tuple(f) for f in delta.faces_of_size(2)}


def lex_rev_complement_identity(g: Graph, seed: int = 0, field=GFP) -> bool:
    """max_{>=n+1-k} of the lex-shifted graph equals
    C(n,2) - C(n-k,2) - (f1 of complement - min_{>=k+1} of its revlex shift),
    for every k."""
    n = g.n
    lex_edges = shifted_graph_edges(g, LEX, seed, field)
    comp = g.complement()
    rev_edges = shifted_graph_edges(comp, REVLEX, seed + 1, field)
    for k in range(1, n + 1):
        lhs = edge_stat(lex_edges, "max", "ge", n + 1 - k)
        rhs = comb(n, 2) - comb(n - k, 2) - (
            comp.edge_count - edge_stat(rev_edges, "min", "ge", k + 1))
        if lhs != rhs:
            return False
    return True


# -- hyperplane rank oracle --------------------------------------------


def hyperplane_span_rank(pairs, n: int, width: int, phi: CoordinateChange,
                         sign: int = -1) -> int:
    """Rank of the stacked hyperplane-restriction vectors over a set of index
    pairs: pair {i,j} maps to (a_{tj} e_i + sign * a_{ti} e_j) for t = 1..width.

    ``sign=-1`` is the exterior map, ``sign=+1`` its polynomial counterpart
    (acting on squarefree x_i x_j).
    """
    f = phi.field
    rows = []
    for i, j in pairs:
        i, j = (i, j) if i < j else (j, i)
        row = [f.zero] * (width * n)
        for t in range(width):
            a_tj = phi.matrix[t][j - 1]
            a_ti = phi.matrix[t][i - 1]
            row[t * n + (i - 1)] = a_tj
            row[t * n + (j - 1)] = a_ti if sign > 0 else f.neg(a_ti)
        rows.append(row)
    if not rows:
        return 0
    from .linalg import vector_rank
    return vector_rank(rows, f)


def hyperplane_rank_oracle(monomials, n: int, k: int, phi: CoordinateChange,
                           sign: int = -1) -> int:
    """dim span of the width-(n+1-k) restriction vectors over the degree-2
    monomials *not* in W; matches |{u not in gin(W) : max(u) >= k}| for
    generic phi."""
    supports = {tuple(sorted(u.support)) for u in monomials}
    pairs = [p for p in combinations(range(1, n + 1), 2) if p not in supports]
    return hyperplane_span_rank(pairs, n, n + 1 - k, phi, sign)


def gin_profile_max_ge(order: TermOrder, monomials, ring: str, n: int,
                       k: int, seed: int = 0, field=GFP) -> int:
    """|{degree-2 monomials not in gin(W) with max >= k}| via the engine."""
    from .gin import gin_space
    from .monomials import all_monomials
    g = gin_space(order, set(monomials), ring, n, 2, seed=seed, field=field)
    ambient = set(all_monomials(ring, n, 2))
    return sum(1 for u in ambient - g if u.max_index() >= k)
