"""Exact arithmetic on roots of unity.

A root e^(2*pi*i*a/n) is stored as the reduced fraction a/n mod 1, so
products, conjugates, powers and equality are exact.  Sums of roots are
tested for exact vanishing by grouping terms into full prime orbits
(a vanishing sum of roots of unity with nonnegative multiplicities always
decomposes this way); everything else falls back to floating point with a
warning flag.
"""

from __future__ import annotations

import cmath
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .arith import factorize


@dataclass(frozen=True)
class RootOfUnity:
    """e^(2*pi*i*numerator/denominator) in canonical reduced form."""

    numerator: int
    denominator: int

    def __post_init__(self):
        a, n = self.numerator, self.denominator
        if n < 1 or not 0 <= a < n:
            raise ValueError("root must satisfy 0 <= a < n, n >= 1")
        if a == 0:
            if n != 1:
                raise ValueError("canonical form of 1 is 0/1")
        elif math.gcd(a, n) != 1:
            raise ValueError("a/n must be reduced")

    @classmethod
    def of(cls, a: int, n: int) -> "RootOfUnity":
        """Canonicalize e^(2*pi*i*a/n) for any integer a, n >= 1."""
        if n < 1:
            raise ValueError("denominator must be >= 1")
        f = Fraction(a, n) % 1
        return cls(f.numerator, f.denominator)

    @property
    def order(self) -> int:
        """Multiplicative order; equals the reduced denominator."""
        return self.denominator

    @property
    def turns(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


ONE = RootOfUnity(0, 1)
MINUS_ONE = RootOfUnity(1, 2)


class _Zero:
    """Character value at arguments sharing a factor with the modulus."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"


ZERO = _Zero()

CharacterValue = Union[RootOfUnity, _Zero]


def root_mul(x: RootOfUnity, y: RootOfUnity) -> RootOfUnity:
    f = (x.turns + y.turns) % 1
    return RootOfUnity(f.numerator, f.denominator)


def root_conj(x: RootOfUnity) -> RootOfUnity:
    f = (-x.turns) % 1
    return RootOfUnity(f.numerator, f.denominator)


def root_pow(x: RootOfUnity, e: int) -> RootOfUnity:
    f = (x.turns * e) % 1
    return RootOfUnity(f.numerator, f.denominator)


def is_real(x: RootOfUnity) -> bool:
    """True iff the value is +1 or -1."""
    return x.denominator <= 2


def to_complex(x: RootOfUnity) -> complex:
    # low orders get exact doubles so table output stays clean
    if x.denominator == 1:
        return complex(1.0, 0.0)
    if x.denominator == 2:
        return complex(-1.0, 0.0)
    if x.denominator == 4:
        return complex(0.0, 1.0 if x.numerator == 1 else -1.0)
    angle = 2.0 * math.pi * x.numerator / x.denominator
    return complex(math.cos(angle), math.sin(angle))


def value_to_complex(v: CharacterValue) -> complex:
    return 0j if v is ZERO else to_complex(v)


def value_str(v: CharacterValue) -> str:
    """Serialized form: "a/n" for roots, "0" for the zero value."""
    return "0" if v is ZERO else str(v)


@dataclass(frozen=True)
class ExactSum:
    """Outcome of summing a multiset of character values.

    ``symbolic`` is False only when orbit grouping was inconclusive and the
    zero decision fell back to |float| < 1e-9.
    """

    value: complex
    is_zero: bool
    symbolic: bool


def _orbit_reduce(counts: Counter, n: int) -> Counter:
    """Subtract full prime rotations {j, j+n/p, ...} until none remain."""
    counts = Counter({e: c for e, c in counts.items() if c})
    if n == 1:
        return counts
    steps = [n // p for p, _ in factorize(n).factors]
    changed = True
    while changed and counts:
        changed = False
        for step in steps:
            for j in range(step):
                orbit = range(j, n, step)
                m = min(counts.get(i, 0) for i in orbit)
                if m:
                    for i in orbit:
                        if counts[i] == m:
                            del counts[i]
                        else:
                            counts[i] -= m
                    changed = True
    return counts


def sum_roots(values: Iterable[CharacterValue]) -> ExactSum:
    """Sum character values, deciding exact vanishing symbolically."""
    roots = [v for v in values if v is not ZERO]
    if not roots:
        return ExactSum(0j, True, True)
    n = 1
    for r in roots:
        n = n * r.denominator // math.gcd(n, r.denominator)
    counts = Counter(r.numerator * (n // r.denominator) % n for r in roots)
    residual = _orbit_reduce(counts, n)
    if not residual:
        return ExactSum(0j, True, True)
    if set(residual) == {0}:
        return ExactSum(complex(residual[0]), False, True)
    approx = sum(cmath.exp(2j * math.pi * e / n) * c for e, c in residual.items())
    if abs(approx) < 1e-9:
        return ExactSum(approx, True, False)
    return ExactSum(approx, False, False)
