"""Term orders on monomials: lex, revlex, weight-with-tiebreak, and inverses.

Within a fixed degree each order is a strict total order; across degrees the
degree always dominates (higher degree compares greater).  The inverse order
flips the within-degree comparison only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import InvalidInputError
from .monomials import EXT, ExtMonomial, Monomial, PolyMonomial

LESS, EQUAL, GREATER = -1, 0, 1


def _lex_cmp(u: Monomial, v: Monomial) -> int:
    if isinstance(u, ExtMonomial):
        # smaller leading index wins
        for a, b in zip(u.support, v.support):
            if a != b:
                return GREATER if a < b else LESS
        return EQUAL
    for a, b in zip(u.exponents, v.exponents):
        if a != b:
            return GREATER if a > b else LESS
    return EQUAL


def _revlex_cmp(u: Monomial, v: Monomial) -> int:
    if isinstance(u, ExtMonomial):
        # at the largest differing index, membership in v means u is greater
        for a, b in zip(reversed(u.support), reversed(v.support)):
            if a != b:
                return GREATER if a < b else LESS
        return EQUAL
    for a, b in zip(reversed(u.exponents), reversed(v.exponents)):
        if a != b:
            return GREATER if a < b else LESS
    return EQUAL


def _weight(u: Monomial, weights) -> int:
    if isinstance(u, ExtMonomial):
        return sum(weights[i - 1] for i in u.support)
    return sum(w * e for w, e in zip(weights, u.exponents))


class TermOrder:
    """Base class; subclasses implement the within-degree comparison."""

    def _cmp_same_degree(self, u: Monomial, v: Monomial) -> int:
        raise NotImplementedError

    def compare(self, u: Monomial, v: Monomial) -> int:
        if u.ring != v.ring or u.n != v.n:
            raise InvalidInputError("monomials from different rings compared")
        if u.degree != v.degree:
            return GREATER if u.degree > v.degree else LESS
        return self._cmp_same_degree(u, v)

    def sort_descending(self, monomials) -> list:
        import functools

        return sorted(monomials, key=functools.cmp_to_key(self.compare), reverse=True)

    def max(self, monomials):
        best = None
        for m in monomials:
            if best is None or self.compare(m, best) == GREATER:
                best = m
        return best


@dataclass(frozen=True)
class Lex(TermOrder):
    def _cmp_same_degree(self, u, v):
        return _lex_cmp(u, v)

    def __str__(self):
        return "lex"


@dataclass(frozen=True)
class RevLex(TermOrder):
    def _cmp_same_degree(self, u, v):
        return _revlex_cmp(u, v)

    def __str__(self):
        return "revlex"


@dataclass(frozen=True)
class WeightOrder(TermOrder):
    """Weight comparison completed by a lex or revlex tie-break.

    Integer weights produce ties (10+9+2 = 10+8+3 for (10,9,8,3,2,1)), so a
    completion is mandatory for a genuine total order.
    """

    weights: tuple[int, ...]
    tiebreak: str = "lex"  # "lex" | "revlex"

    def _cmp_same_degree(self, u, v):
        wu, wv = _weight(u, self.weights), _weight(v, self.weights)
        if wu != wv:
            return GREATER if wu > wv else LESS
        if self.tiebreak == "lex":
            return _lex_cmp(u, v)
        return _revlex_cmp(u, v)

    def __str__(self):
        return f"weight:{','.join(map(str, self.weights))}:{self.tiebreak}"


@dataclass(frozen=True)
class Inverse(TermOrder):
    """The order sigma^{-1}: degree still dominates, within-degree flipped."""

    inner: TermOrder

    def _cmp_same_degree(self, u, v):
        return -self.inner._cmp_same_degree(u, v)

    def __str__(self):
        return f"inv:{self.inner}"


LEX = Lex()
REVLEX = RevLex()


def parse_order(spec: str, n: int) -> TermOrder:
    """Parse "lex", "revlex", "weight:<w1,...,wn>:<lex|revlex>", "inv:<order>"."""
    if spec == "lex":
        return LEX
    if spec == "revlex":
        return REVLEX
    if spec.startswith("inv:"):
        return Inverse(parse_order(spec[4:], n))
    if spec.startswith("weight:"):
        parts = spec.split(":")
        if len(parts) != 3 or parts[2] not in ("lex", "revlex"):
            raise InvalidInputError(f"bad weight order spec {spec!r}")
        weights = tuple(int(w) for w in parts[1].split(","))
        if len(weights) != n:
            raise InvalidInputError(f"expected {n} weights in {spec!r}")
        return WeightOrder(weights, parts[2])
    raise InvalidInputError(f"unknown term order {spec!r}")
