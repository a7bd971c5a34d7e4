"""Monomials of the exterior algebra and of the polynomial ring.

Exterior monomials are strictly increasing index tuples (1-based); polynomial
monomials are exponent tuples of length n.  Both are hashable value types.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .fields import InvalidInputError

EXT = "ext"
POLY = "poly"


@dataclass(frozen=True, order=True)
class ExtMonomial:
    support: tuple[int, ...]
    n: int

    def __post_init__(self):
        s = self.support
        if any(s[i] >= s[i + 1] for i in range(len(s) - 1)):
            raise InvalidInputError(f"support not strictly increasing: {s}")
        if s and (s[0] < 1 or s[-1] > self.n):
            raise InvalidInputError(f"support {s} out of range 1..{self.n}")

    @property
    def ring(self) -> str:
        return EXT

    @property
    def degree(self) -> int:
        return len(self.support)

    def min_index(self) -> int:
        return self.support[0]

    def max_index(self) -> int:
        return self.support[-1]

    def divides(self, other: "ExtMonomial") -> bool:
        return set(self.support) <= set(other.support)

    def __str__(self) -> str:
        return "e{" + ",".join(map(str, self.support)) + "}"


@dataclass(frozen=True, order=True)
class PolyMonomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise InvalidInputError(f"negative exponent in {self.exponents}")

    @property
    def ring(self) -> str:
        return POLY

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, e in enumerate(self.exponents) if e > 0)

    def min_index(self) -> int:
        return self.support[0]

    def max_index(self) -> int:
        return self.support[-1]

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def divides(self, other: "PolyMonomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def times_var(self, i: int) -> "PolyMonomial":
        """Multiply by x_i (1-based)."""
        e = list(self.exponents)
        e[i - 1] += 1
        return PolyMonomial(tuple(e))

    def div_var(self, i: int) -> "PolyMonomial":
        e = list(self.exponents)
        e[i - 1] -= 1
        return PolyMonomial(tuple(e))

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts) if parts else "1"


Monomial = ExtMonomial | PolyMonomial


def ext_monomial(indices, n: int) -> ExtMonomial:
    return ExtMonomial(tuple(sorted(indices)), n)


def poly_monomial(exponents) -> PolyMonomial:
    return PolyMonomial(tuple(exponents))


def squarefree_poly(indices, n: int) -> PolyMonomial:
    e = [0] * n
    for i in indices:
        e[i - 1] += 1
    return PolyMonomial(tuple(e))


def ext_to_squarefree(m: ExtMonomial) -> PolyMonomial:
    """Image of e_S in the polynomial ring: the squarefree monomial x_S."""
    return squarefree_poly(m.support, m.n)


def all_monomials(ring: str, n: int, d: int) -> list:
    """Every degree-d monomial of the ambient ring, in a fixed ascending order."""
    if ring == EXT:
        if d > n:
            return []
        return [ExtMonomial(c, n) for c in combinations(range(1, n + 1), d)]
    out = []

    def rec(prefix, remaining, pos):
        if pos == n - 1:
            out.append(PolyMonomial(tuple(prefix + [remaining])))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + [e], remaining - e, pos + 1)

    if n == 0:
        return []
    rec([], d, 0)
    return out


def count_monomials(ring: str, n: int, d: int) -> int:
    return comb(n, d) if ring == EXT else comb(n + d - 1, d)


_EXT_RE = re.compile(r"^e\{([0-9,\s]*)\}$")
_POLY_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, ring: str, n: int) -> Monomial:
    """Parse "e{1,3,4}" (exterior) or "x1^2*x3" (polynomial)."""
    text = text.strip()
    if ring == EXT:
        m = _EXT_RE.match(text)
        if not m:
            raise InvalidInputError(f"bad exterior monomial {text!r}")
        body = m.group(1).strip()
        idx = [int(t) for t in body.split(",")] if body else []
        return ext_monomial(idx, n)
    if ring == POLY:
        e = [0] * n
        if text != "1":
            for factor in text.split("*"):
                fm = _POLY_FACTOR_RE.match(factor.strip())
                if not fm:
                    raise InvalidInputError(f"bad polynomial monomial {text!r}")
                i = int(fm.group(1))
                if not 1 <= i <= n:
                    raise InvalidInputError(f"variable x{i} out of range in {text!r}")
                e[i - 1] += int(fm.group(2) or 1)
        return PolyMonomial(tuple(e))
    raise InvalidInputError(f"unknown ring {ring!r}")
