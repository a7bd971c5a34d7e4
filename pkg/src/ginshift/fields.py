"""Exact coefficient fields: arbitrary-precision rationals and large prime fields.

The prime-field mode is the default work horse (dense generic matrices over Q
blow up badly under elimination); the rational mode is available everywhere
for certification runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

#: largest prime below 2**31; products of two elements fit in int64
DEFAULT_PRIME = 2_147_483_629


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin, valid for every m < 3.3 * 10**24."""
    if m < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % q == 0:
            return m == q
    d = m - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


class InvalidInputError(ValueError):
    """Raised on malformed or mismatched inputs (CLI exit code 2)."""


@dataclass(frozen=True)
class PrimeField:
    """F_p with elements represented as python ints in [0, p)."""

    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidInputError(f"{self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, x) -> int:
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        return pow(a, -1, self.p)

    def neg(self, a):
        return -a % self.p

    zero = 0
    one = 1

    def random(self, rng):
        """Uniform element, via a numpy Generator."""
        return int(rng.integers(0, self.p))


@dataclass(frozen=True)
class RationalField:
    """Q via fractions.Fraction."""

    @property
    def characteristic(self) -> int:
        return 0

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return 1 / Fraction(a)

    def neg(self, a):
        return -a

    zero = Fraction(0)
    one = Fraction(1)

    def random(self, rng):
        """Uniform integer in [-10**6, 10**6], nonzero bias-free."""
        return Fraction(int(rng.integers(-10**6, 10**6 + 1)))


QQ = RationalField()
GFP = PrimeField()


def parse_field(spec: str):
    """Parse a field mode string: "prime:<p>", "prime", or "rational"."""
    if spec == "rational":
        return QQ
    if spec == "prime":
        return GFP
    if spec.startswith("prime:"):
        return PrimeField(int(spec.split(":", 1)[1]))
    raise InvalidInputError(f"unknown field spec {spec!r}")
