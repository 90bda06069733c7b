"""Cyclic decomposition of the unit group mod k, with index vectors.

(Z/kZ)* splits along the prime-power factors of k.  Odd prime powers are
cyclic and get one generator; the power-of-two factor contributes nothing
for 2, the residue -1 for 4, and the pair (-1, 5) with orders (2, 2^(L-2))
for 2^L, L >= 3.  Local generators are lifted to residues mod k by CRT.
Index vectors (discrete logarithms) come from a table built once per
structure by enumerating all exponent tuples.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .arith import crt_combine, euler_phi, factorize, is_prime


class NotAUnitError(ValueError):
    """Argument shares a factor with the modulus."""


def _order(g: int, k: int) -> int:
    if math.gcd(g, k) != 1:
        raise NotAUnitError(f"{g} is not a unit mod {k}")
    phi = euler_phi(k)
    order = phi
    for p, _ in factorize(phi).factors:
        while order % p == 0 and pow(g, order // p, k) == 1:
            order //= p
    return order


def primitive_root_mod_prime_power(p: int, power: int) -> int:
    """Canonical primitive root mod p**power for odd prime p.

    Smallest positive primitive root g mod p; if g**(p-1) = 1 mod p**2 the
    lift g+p is used instead, which generates every higher power.
    """
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    if power < 1:
        raise ValueError("power must be >= 1")
    g = 2
    while _order(g, p) != p - 1:
        g += 1
    if power == 1:
        return g
    if pow(g, p - 1, p * p) == 1:
        g += p
    return g


@dataclass(frozen=True)
class IndexVector:
    """Exponent tuple of a unit with respect to a structure's generators."""

    structure: "UnitGroupStructure"
    exponents: tuple[int, ...]


class UnitGroupStructure:
    """Ordered generator/order pairs whose power products cover all units.

    Immutable after construction; the discrete-log table is built eagerly,
    which also validates that the exponent map is a bijection.
    """

    def __init__(self, modulus: int, generators: Sequence[tuple[int, int]]):
        if modulus < 1:
            raise ValueError("modulus must be >= 1")
        phi = euler_phi(modulus)
        gens = tuple((int(g) % modulus, int(o)) for g, o in generators)
        prod = 1
        for g, o in gens:
            if o < 1:
                raise ValueError("orders must be positive")
            if _order(g, modulus) != o:
                raise ValueError(f"{g} does not have order {o} mod {modulus}")
            prod *= o
        if prod != phi:
            raise ValueError("product of orders must equal phi(k)")
        log: dict[int, tuple[int, ...]] = {}
        for exps in itertools.product(*(range(o) for _, o in gens)):
            r = 1 % modulus
            for (g, _), e in zip(gens, exps):
                r = r * pow(g, e, modulus) % modulus
            if r in log:
                raise ValueError("exponent map is not a bijection onto the units")
            log[r] = exps
        self.modulus = modulus
        self.generators = gens
        self.orders = tuple(o for _, o in gens)
        self.exponent = math.lcm(*self.orders) if self.orders else 1
        self.units = tuple(sorted(log))
        self._log = log

    def __repr__(self):
        return f"UnitGroupStructure({self.modulus}, {list(self.generators)})"

    def log(self, n: int) -> tuple[int, ...]:
        r = n % self.modulus
        if r not in self._log:
            raise NotAUnitError(f"{n} is not a unit mod {self.modulus}")
        return self._log[r]


@lru_cache(maxsize=None)
def structure(k: int) -> UnitGroupStructure:
    """Canonical structure: factor-2 generators first (-1 then 5), then odd
    prime powers by increasing prime, each lifted to a residue mod k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    gens: list[tuple[int, int]] = []
    two_part = 1
    odd_parts: list[tuple[int, int]] = []
    for p, e in factorize(k).factors:
        if p == 2:
            two_part = 2**e
        else:
            odd_parts.append((p, e))

    def lift(residue: int, q: int) -> int:
        return crt_combine([(residue, q), (1, k // q)])

    if two_part == 4:
        gens.append((lift(3, 4), 2))
    elif two_part >= 8:
        gens.append((lift(two_part - 1, two_part), 2))
        gens.append((lift(5, two_part), two_part // 4))
    for p, e in odd_parts:
        q = p**e
        gens.append((lift(primitive_root_mod_prime_power(p, e), q), euler_phi(q)))
    return UnitGroupStructure(k, gens)


def index_vector(s: UnitGroupStructure, n: int) -> IndexVector:
    """Exponent tuple v with prod g_i**v_i = n mod k."""
    return IndexVector(s, s.log(n))


def reconstruct(s: UnitGroupStructure, v: IndexVector | Sequence[int]) -> int:
    """Inverse of index_vector: the residue prod g_i**v_i mod k."""
    exps = v.exponents if isinstance(v, IndexVector) else tuple(v)
    if len(exps) != len(s.generators):
        raise ValueError("exponent count does not match generator count")
    r = 1 % s.modulus
    for (g, o), e in zip(s.generators, exps):
        if not 0 <= e < o:
            raise ValueError(f"exponent {e} out of range [0, {o})")
        r = r * pow(g, e, s.modulus) % s.modulus
    return r
