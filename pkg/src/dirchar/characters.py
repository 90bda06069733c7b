"""Dirichlet characters mod k: enumeration, group algebra, orthogonality.

A character is identified extensionally by its value table.  Values are
roots of unity whose order divides e, the exponent of (Z/kZ)*, so the table
is held as an integer array: entry t at residue r means chi(r) = zeta_e**t,
and -1 marks the zero value at residues sharing a factor with k.  This keeps
equality, products and conjugates exact while staying fast enough to sweep
every modulus up to 1000.

Enumeration order is canonical: exponent tuples over the canonical unit
group structure in lexicographic order, tuple entry i selecting the power of
the canonical primitive root of unity for generator i.
"""

from __future__ import annotations

import enum
import itertools
import math
from functools import lru_cache
from typing import Mapping, Sequence

import numpy as np

from .arith import euler_phi
from .roots import (
    ZERO,
    CharacterValue,
    ExactSum,
    RootOfUnity,
    root_conj,
    root_mul,
    sum_roots,
    to_complex,
    value_str,
)
from .unit_group import NotAUnitError, UnitGroupStructure, structure


class CharacterClass(enum.Enum):
    PRINCIPAL = "principal"
    REAL_NON_PRINCIPAL = "real"
    COMPLEX = "complex"


class DirichletCharacter:
    """Immutable character mod k, identified by its exact value table."""

    __slots__ = ("modulus", "order", "_exps", "_tuple", "_key", "_hash")

    def __init__(self, modulus: int, exps: np.ndarray, order: int,
                 tuple_: tuple[int, ...] | None = None):
        if len(exps) != modulus:
            raise ValueError("value table must cover residues 0..k-1")
        if order != structure(modulus).exponent:
            raise ValueError("value order must be the unit-group exponent")
        self.modulus = modulus
        self.order = order
        arr = np.asarray(exps, dtype=np.int32).copy()
        arr.setflags(write=False)
        self._exps = arr
        self._tuple = tuple_
        self._key = (modulus, arr.tobytes())
        self._hash = hash(self._key)

    @property
    def exponent_tuple(self) -> tuple[int, ...] | None:
        """Canonical generating tuple, when this table came from one."""
        return self._tuple

    def evaluate(self, n: int) -> CharacterValue:
        t = int(self._exps[n % self.modulus])
        if t < 0:
            return ZERO
        return RootOfUnity.of(t, self.order)

    __call__ = evaluate

    @property
    def values(self) -> dict[int, RootOfUnity]:
        """Value table over the units mod k."""
        return {r: RootOfUnity.of(int(t), self.order)
                for r, t in enumerate(self._exps) if t >= 0}

    def value_strings(self) -> list[str]:
        """Serialized table over residues 0..k-1 ("a/n" or "0")."""
        return [value_str(self.evaluate(r)) for r in range(self.modulus)]

    def is_principal(self) -> bool:
        return bool(np.all(self._exps[self._exps >= 0] == 0))

    def validate(self) -> None:
        """Check the defining invariants of the value table."""
        k, e = self.modulus, self.order
        exps = self._exps
        for r in range(k):
            if (exps[r] >= 0) != (math.gcd(r, k) == 1):
                raise ValueError("zero values must sit exactly off the units")
        if exps[1 % k] != 0:
            raise ValueError("chi(1) must be 1")
        units = [r for r in range(k) if math.gcd(r, k) == 1]
        for a in units:
            for b in units:
                if exps[a * b % k] != (exps[a] + exps[b]) % e:
                    raise ValueError("table is not completely multiplicative")

    def __eq__(self, other):
        return isinstance(other, DirichletCharacter) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        tag = f", tuple={self._tuple}" if self._tuple is not None else ""
        return f"DirichletCharacter(mod {self.modulus}{tag})"


def _zero_template(k: int) -> np.ndarray:
    exps = np.full(k, -1, dtype=np.int32)
    for r in range(k):
        if math.gcd(r, k) == 1:
            exps[r] = 0
    return exps


def from_values(k: int, values: Mapping[int, RootOfUnity]) -> DirichletCharacter:
    """Build and validate a character from an explicit unit -> root table."""
    s = structure(k)
    if set(values) != set(s.units):
        raise ValueError("table must be defined on exactly the units mod k")
    e = s.exponent
    exps = np.full(k, -1, dtype=np.int32)
    for r, root in values.items():
        if e % root.denominator != 0:
            raise ValueError("value order must divide the group exponent")
        exps[r] = root.numerator * (e // root.denominator)
    chi = DirichletCharacter(k, exps, e)
    chi.validate()
    return chi


def principal_character(k: int) -> DirichletCharacter:
    """chi_0: value 1 on residues coprime to k, zero elsewhere."""
    s = structure(k)
    zeros = tuple(0 for _ in s.generators)
    return DirichletCharacter(k, _zero_template(k), s.exponent, zeros)


@lru_cache(maxsize=512)
def enumerate_characters(k: int) -> tuple[DirichletCharacter, ...]:
    """All phi(k) characters mod k in canonical tuple order.

    Character t has value zeta_e ** (sum_i t_i * v_i(n) * e/o_i) at the unit
    n with index vector v; one integer matrix product builds every table.
    """
    s = structure(k)
    e = s.exponent
    units = np.array(s.units, dtype=np.int64)
    # unit weights: index vector scaled so exponents live over zeta_e
    weights = np.array(
        [[vi * (e // oi) for vi, oi in zip(s.log(int(u)), s.orders)] for u in units],
        dtype=np.int64).reshape(len(units), len(s.orders))
    tuples = list(itertools.product(*(range(o) for o in s.orders)))
    t_matrix = np.array(tuples, dtype=np.int64).reshape(len(tuples), len(s.orders))
    all_exps = t_matrix @ weights.T % e
    chars = []
    for t, row in zip(tuples, all_exps):
        exps = np.full(k, -1, dtype=np.int64)
        exps[units] = row
        chars.append(DirichletCharacter(k, exps, e, t))
    return tuple(chars)


def character_by_tuple(k: int, t: Sequence[int]) -> DirichletCharacter:
    """Look up the enumerated character with the given canonical tuple."""
    orders = structure(k).orders
    t = tuple(int(x) for x in t)
    if len(t) != len(orders) or any(not 0 <= x < o for x, o in zip(t, orders)):
        raise ValueError(f"tuple out of range for orders {orders}")
    idx = 0
    for x, o in zip(t, orders):
        idx = idx * o + x
    return enumerate_characters(k)[idx]


def evaluate(chi: DirichletCharacter, n: int) -> CharacterValue:
    return chi.evaluate(n)


def char_mul(chi: DirichletCharacter, psi: DirichletCharacter) -> DirichletCharacter:
    """Pointwise product; stays inside the enumerated character group."""
    if chi.modulus != psi.modulus:
        raise ValueError("characters must share a modulus")
    exps = np.where(chi._exps >= 0, (chi._exps + psi._exps) % chi.order, -1)
    t = None
    if chi._tuple is not None and psi._tuple is not None:
        orders = structure(chi.modulus).orders
        t = tuple((a + b) % o for a, b, o in zip(chi._tuple, psi._tuple, orders))
    return DirichletCharacter(chi.modulus, exps, chi.order, t)


def char_conj(chi: DirichletCharacter) -> DirichletCharacter:
    """Pointwise complex conjugate; the inverse in the character group."""
    exps = np.where(chi._exps > 0, chi.order - chi._exps, chi._exps)
    t = None
    if chi._tuple is not None:
        orders = structure(chi.modulus).orders
        t = tuple((-a) % o for a, o in zip(chi._tuple, orders))
    return DirichletCharacter(chi.modulus, exps, chi.order, t)


def classify(chi: DirichletCharacter) -> CharacterClass:
    """Principal / real non-principal / complex, judged by values alone."""
    unit_exps = chi._exps[chi._exps >= 0]
    if np.all(unit_exps == 0):
        return CharacterClass.PRINCIPAL
    if np.all(2 * unit_exps % chi.order == 0):
        return CharacterClass.REAL_NON_PRINCIPAL
    return CharacterClass.COMPLEX


def _as_int(total: ExactSum) -> int:
    if total.is_zero:
        return 0
    if total.symbolic and abs(total.value.imag) == 0:
        return int(total.value.real)
    raise ArithmeticError("orthogonality sum did not reduce to an exact integer")


def sum_over_group(chi: DirichletCharacter) -> int:
    """Sum of chi over the units: phi(k) for the principal character, else 0."""
    values = [chi.evaluate(r) for r in structure(chi.modulus).units]
    return _as_int(sum_roots(values))


def sum_over_characters(k: int, n: int) -> int:
    """Sum of chi(n) over all characters mod k: phi(k) iff n = 1 mod k."""
    values = [chi.evaluate(n) for chi in enumerate_characters(k)]
    return _as_int(sum_roots(values))


def orthogonality_pair_sum(k: int, g: int, h: int) -> int:
    """Sum over characters of chi(g)*conj(chi(h)): phi(k) iff g = h mod k."""
    if math.gcd(g, k) != 1 or math.gcd(h, k) != 1:
        raise NotAUnitError("g and h must be units mod k")
    values = []
    for chi in enumerate_characters(k):
        a, b = chi.evaluate(g), chi.evaluate(h)
        values.append(root_mul(a, root_conj(b)))
    return _as_int(sum_roots(values))


def fourier_transform(k: int, f: Mapping[int, complex]) -> dict[DirichletCharacter, complex]:
    """fhat(chi) = sum over units g of f(g) * chi(g)."""
    units = structure(k).units
    if set(f) != set(units):
        raise ValueError("f must be defined on exactly the units mod k")
    out = {}
    for chi in enumerate_characters(k):
        out[chi] = sum(complex(f[g]) * to_complex(chi.evaluate(g)) for g in units)
    return out


def fourier_invert(k: int, fhat: Mapping[DirichletCharacter, complex]) -> dict[int, complex]:
    """Recover f from its transform: f(g) = (1/phi) sum fhat(chi) conj(chi(g)).

    With this pairing the indicator of a unit m has coefficients
    conj(chi(m)) / phi(k) in the character basis.
    """
    chars = enumerate_characters(k)
    if set(fhat) != set(chars):
        raise ValueError("transform must be defined on exactly the characters mod k")
    phi = euler_phi(k)
    out = {}
    for g in structure(k).units:
        acc = sum(complex(fhat[chi]) * to_complex(chi.evaluate(g)).conjugate()
                  for chi in chars)
        out[g] = acc / phi
    return out
