"""Intensional character constructions and the equivalence oracle.

Characters here are built the old way: pick a root of unity per generator of
the unit-group structure and read values off index vectors.  Exponent tuples
label the same constructions against canonical primitive roots of unity.
Both routes must generate exactly the extensional character set, no matter
which valid generator list is used; representation_independence_check exists
as a permanent oracle for that claim.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .arith import euler_phi, factorize
from .characters import DirichletCharacter, enumerate_characters
from .roots import ONE, RootOfUnity, root_mul, root_pow
from .unit_group import UnitGroupStructure, structure


@dataclass(frozen=True)
class RootChoice:
    """One root of unity per generator, order dividing the generator order."""

    structure: UnitGroupStructure
    roots: tuple[RootOfUnity, ...]

    def __post_init__(self):
        if len(self.roots) != len(self.structure.generators):
            raise ValueError("need one root per generator")
        for root, o in zip(self.roots, self.structure.orders):
            if root_pow(root, o) != ONE:
                raise ValueError(f"root {root} has order not dividing {o}")


@dataclass(frozen=True)
class ExponentTuple:
    """Exponents applied to the canonical primitive roots of unity."""

    structure: UnitGroupStructure
    exponents: tuple[int, ...]

    def __post_init__(self):
        orders = self.structure.orders
        if len(self.exponents) != len(orders):
            raise ValueError("need one exponent per generator")
        for e, o in zip(self.exponents, orders):
            if not 0 <= e < o:
                raise ValueError(f"exponent {e} out of range [0, {o})")

    def __add__(self, other: "ExponentTuple") -> "ExponentTuple":
        if other.structure is not self.structure and other.structure.generators != self.structure.generators:
            raise ValueError("tuples belong to different structures")
        exps = tuple((a + b) % o for a, b, o in
                     zip(self.exponents, other.exponents, self.structure.orders))
        return ExponentTuple(self.structure, exps)

    def __neg__(self) -> "ExponentTuple":
        exps = tuple((-a) % o for a, o in zip(self.exponents, self.structure.orders))
        return ExponentTuple(self.structure, exps)


def character_from_roots(rc: RootChoice) -> DirichletCharacter:
    """chi(n) = prod roots[i] ** index_vector(n)[i] on units, zero elsewhere."""
    s = rc.structure
    k = s.modulus
    e = structure(k).exponent
    # per-generator power tables so each unit costs r-1 root multiplications
    tables = [[root_pow(root, j) for j in range(o)]
              for root, o in zip(rc.roots, s.orders)]
    exps = np.full(k, -1, dtype=np.int64)
    for r in s.units:
        value = ONE
        for table, vi in zip(tables, s.log(r)):
            value = root_mul(value, table[vi])
        exps[r] = value.numerator * (e // value.denominator)
    canonical = None
    if s.generators == structure(k).generators:
        canonical = tuple(root.numerator * (o // root.denominator) % o
                          for root, o in zip(rc.roots, s.orders))
    return DirichletCharacter(k, exps, e, canonical)


def character_from_exponent_tuple(t: ExponentTuple) -> DirichletCharacter:
    """Tuple (t_1, ..., t_r) names the choice zeta_{o_i} ** t_i per generator."""
    roots = tuple(RootOfUnity.of(e, o)
                  for e, o in zip(t.exponents, t.structure.orders))
    return character_from_roots(RootChoice(t.structure, roots))


def enumerate_via_tuples(k: int, s: UnitGroupStructure | None = None) -> list[DirichletCharacter]:
    """Range every exponent tuple; yields phi(k) distinct characters."""
    if s is None:
        s = structure(k)
    out = []
    for exps in itertools.product(*(range(o) for o in s.orders)):
        out.append(character_from_exponent_tuple(ExponentTuple(s, exps)))
    return out


def representation_independence_check(k: int, generators: Sequence[tuple[int, int]]) -> bool:
    """True iff the character set from this generator list equals the canonical set.

    A False return signals an implementation bug, never a property of the
    inputs; the operation exists as a permanent oracle.
    """
    alt = UnitGroupStructure(k, generators)  # raises if the list is invalid
    canonical = set(enumerate_characters(k))
    regenerated = set(enumerate_via_tuples(k, alt))
    return regenerated == canonical


def _elements_of_order(k: int, order: int) -> list[int]:
    out = []
    phi = euler_phi(k)
    if phi % order != 0:
        return out
    for r in range(1, k + 1):
        g = r % k
        if math.gcd(g, k) != 1:
            continue
        if pow(g, order, k) != 1:
            continue
        if all(pow(g, order // p, k) != 1 for p, _ in factorize(order).factors):
            out.append(g)
    return out


def _coprime_splits(order: int) -> list[tuple[int, int]]:
    """Factor order = d1*d2 with d1, d2 > 1 coprime, d1 < d2."""
    splits = []
    primes = [p**e for p, e in factorize(order).factors]
    if len(primes) < 2:
        return splits
    for bits in range(1, 2 ** len(primes) - 1):
        d1 = d2 = 1
        for i, q in enumerate(primes):
            if bits >> i & 1:
                d1 *= q
            else:
                d2 *= q
        if d1 < d2:
            splits.append((d1, d2))
    return sorted(splits)


def alternative_structures(k: int, count: int) -> Iterator[UnitGroupStructure]:
    """Valid generator lists other than the canonical one, deterministically.

    Searches residues in increasing order for elements of the required
    orders.  When the same-shape search runs dry (small cyclic groups have
    very few generators) it falls back to decomposition variants that still
    satisfy every structure invariant: coprime splits of a cyclic slot,
    reversed slot order, and an identity slot of order 1.
    """
    canonical = structure(k)
    seen = {canonical.generators}
    emitted = 0

    def try_yield(gens):
        nonlocal emitted
        gens = tuple(gens)
        if gens in seen:
            return None
        seen.add(gens)
        try:
            alt = UnitGroupStructure(k, gens)
        except ValueError:
            return None
        emitted += 1
        return alt

    def shapes():
        orders = canonical.orders
        yield orders
        for i, o in enumerate(orders):
            for d1, d2 in _coprime_splits(o):
                yield orders[:i] + (d1, d2) + orders[i + 1:]
                yield orders[:i] + (d2, d1) + orders[i + 1:]
        if len(orders) > 1:
            yield tuple(reversed(orders))
        yield (1,) + orders
        yield orders + (1,)

    for shape in shapes():
        pools = [_elements_of_order(k, o) for o in shape]
        if any(not pool for pool in pools):
            continue
        for combo in itertools.product(*pools):
            alt = try_yield(zip(combo, shape))
            if alt is not None:
                yield alt
                if emitted >= count:
                    return
