"""Monomial ideals with canonical minimal generators and exact degree
components, in either ring.

Generators are stored sorted by (degree, lex-descending) so that equal ideals
serialize identically.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .fields import InvalidInputError
from .monomials import (EXT, POLY, ExtMonomial, Monomial, PolyMonomial,
                        all_monomials, ext_monomial, parse_monomial)
from .orders import LEX


def _canonical_sort(gens) -> tuple:
    key = functools.cmp_to_key(lambda u, v: -LEX.compare(u, v))
    return tuple(sorted(gens, key=lambda g: (g.degree, key(g))))


def minimalize(gens) -> tuple:
    """Drop generators divisible by another generator."""
    by_deg = sorted(set(gens), key=lambda g: g.degree)
    minimal: list = []
    for g in by_deg:
        if not any(h.divides(g) for h in minimal):
            minimal.append(g)
    return _canonical_sort(minimal)


@dataclass(frozen=True)
class MonomialIdeal:
    ring: str
    n: int
    generators: tuple[Monomial, ...]

    @classmethod
    def make(cls, ring: str, n: int, gens) -> "MonomialIdeal":
        gens = tuple(gens)
        for g in gens:
            if g.ring != ring or g.n != n:
                raise InvalidInputError(f"generator {g} does not live in ({ring}, n={n})")
        return cls(ring, n, minimalize(gens))

    @classmethod
    def from_components(cls, ring: str, n: int, components: dict[int, set]) -> "MonomialIdeal":
        """Recover minimal generators from exact degree components (dense up to
        the largest listed degree)."""
        gens: list = []
        for d in sorted(components):
            for u in sorted(components[d]):
                if not any(g.divides(u) for g in gens):
                    gens.append(u)
        return cls.make(ring, n, gens)

    @property
    def max_generator_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    def degree_component(self, d: int) -> set[Monomial]:
        """All degree-d monomials divisible by some generator."""
        if d < 0 or (self.ring == EXT and d > self.n):
            raise InvalidInputError(f"degree {d} out of range")
        return {u for u in all_monomials(self.ring, self.n, d) if self.contains(u)}

    def hilbert(self, max_degree: int) -> list[int]:
        return [len(self.degree_component(d)) for d in range(max_degree + 1)]

    def __le__(self, other: "MonomialIdeal") -> bool:
        return all(other.contains(g) for g in self.generators)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def _smaller_exchanges(u: Monomial):
    """All monomials obtained by replacing an index of u by a smaller one
    (the squarefree rule in the exterior ring, the x_q -> x_p rule in R)."""
    if isinstance(u, ExtMonomial):
        s = set(u.support)
        for j in u.support:
            for i in range(1, j):
                if i not in s:
                    yield ext_monomial((s - {j}) | {i}, u.n)
    else:
        for q in u.support:
            for p in range(1, q):
                yield u.div_var(q).times_var(p)


def _squarefree_smaller_exchanges(u: PolyMonomial):
    s = set(u.support)
    for q in u.support:
        for p in range(1, q):
            if p not in s:
                yield u.div_var(q).times_var(p)


def is_strongly_stable(ideal: MonomialIdeal, squarefree: bool = False):
    """(flag, witness): closure of every generator under index-decreasing
    exchanges; checking generators suffices for monomial ideals.

    ``squarefree=True`` applies the squarefree exchange rule to polynomial
    ideals (images of exterior ideals); exterior ideals are always squarefree.
    """
    for g in ideal.generators:
        if squarefree and isinstance(g, PolyMonomial):
            moves = _squarefree_smaller_exchanges(g)
        else:
            moves = _smaller_exchanges(g)
        for v in moves:
            if not ideal.contains(v):
                return False, (g, v)
    return True, None


def stable_closure(gens, ring: str, n: int) -> MonomialIdeal:
    """Smallest strongly stable ideal containing the generators."""
    todo = list(gens)
    seen = set(gens)
    while todo:
        u = todo.pop()
        for v in _smaller_exchanges(u):
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return MonomialIdeal.make(ring, n, seen)


def write_ideal(ideal: MonomialIdeal) -> str:
    lines = [f"ring={ideal.ring} n={ideal.n}"]
    lines += [str(g) for g in ideal.generators]
    return "\n".join(lines) + "\n"


def read_ideal(text: str) -> MonomialIdeal:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise InvalidInputError("empty ideal file")
    header = lines[0].split()
    try:
        ring = dict(kv.split("=") for kv in header)["ring"]
        n = int(dict(kv.split("=") for kv in header)["n"])
    except (KeyError, ValueError) as exc:
        raise InvalidInputError(f"bad ideal header {lines[0]!r}") from exc
    if ring not in (EXT, POLY):
        raise InvalidInputError(f"bad ring {ring!r}")
    gens = [parse_monomial(ln, ring, n) for ln in lines[1:]]
    return MonomialIdeal.make(ring, n, gens)
