"""Bulk verification suites over ranges of moduli.

These drive the module invariants hard enough to need integer fast paths:
character tables are compared as exponent arrays, and the all-pairs
orthogonality sweep factors each pair sum into per-generator sums, every one
of which is evaluated by explicit orbit reduction (exact integers, zero
tolerance).  Point operations stay on the naive exact path and are
cross-checked against the sweep on small moduli.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .arith import euler_phi
from .characters import (
    DirichletCharacter,
    char_conj,
    char_mul,
    enumerate_characters,
    orthogonality_pair_sum,
    principal_character,
    sum_over_characters,
    sum_over_group,
)
from .historical import (
    ExponentTuple,
    RootChoice,
    character_from_exponent_tuple,
    character_from_roots,
    enumerate_via_tuples,
)
from .roots import RootOfUnity, _orbit_reduce
from .unit_group import structure

SUITE_NAMES = ("orthogonality", "landau", "historical", "group-axioms")


@dataclass
class SuiteResult:
    k: int
    ok: bool
    checks: int
    counterexample: str | None = None


def _exact_slot_sum(delta: int, order: int) -> int:
    """sum over t < order of zeta_order^(t*delta), by orbit reduction."""
    counts = Counter(t * delta % order for t in range(order))
    residual = _orbit_reduce(counts, order)
    if not residual:
        return 0
    if set(residual) == {0}:
        return residual[0]
    raise ArithmeticError("slot sum did not reduce")


def _pair_sums(k: int) -> tuple[np.ndarray, np.ndarray]:
    """Exact matrix of sum_chi chi(g) conj(chi(h)) over all unit pairs.

    The pair sum factors per generator slot into sum_t zeta^(t*(v_i(g)-v_i(h)));
    each distinct slot sum is computed once by explicit reduction.
    """
    s = structure(k)
    units = np.array(s.units, dtype=np.int64)
    phi = len(units)
    result = np.ones((phi, phi), dtype=np.int64)
    if s.orders:
        logm = np.array([s.log(int(u)) for u in units], dtype=np.int64)
        for i, o in enumerate(s.orders):
            delta = (logm[:, i][:, None] - logm[:, i][None, :]) % o
            memo = np.array([_exact_slot_sum(d, o) for d in range(o)], dtype=np.int64)
            result *= memo[delta]
    return units, result


def orthogonality_suite(k: int, spot_limit: int = 24) -> SuiteResult:
    phi = euler_phi(k)
    checks = 0
    for chi in enumerate_characters(k):
        expected = phi if chi.is_principal() else 0
        if sum_over_group(chi) != expected:
            return SuiteResult(k, False, checks, f"sum over group wrong for {chi!r}")
        checks += 1
    for n in range(k):
        expected = phi if n % k == 1 % k else 0
        if sum_over_characters(k, n) != expected:
            return SuiteResult(k, False, checks, f"sum over characters wrong at n={n}")
        checks += 1
    units, mat = _pair_sums(k)
    want = phi * np.eye(len(units), dtype=np.int64)
    if not np.array_equal(mat, want):
        g, h = np.argwhere(mat != want)[0]
        return SuiteResult(k, False, checks,
                           f"pair sum wrong at (g,h)=({units[g]},{units[h]})")
    checks += len(units) ** 2
    if phi <= spot_limit:
        for i, g in enumerate(units):
            for j, h in enumerate(units):
                if orthogonality_pair_sum(k, int(g), int(h)) != mat[i, j]:
                    return SuiteResult(k, False, checks,
                                       f"op/sweep mismatch at ({g},{h})")
                checks += 1
    return SuiteResult(k, True, checks)


def landau_suite(k: int) -> SuiteResult:
    chars = enumerate_characters(k)
    phi = euler_phi(k)
    e = chars[0].order
    unit_mask = np.array([math.gcd(r, k) == 1 for r in range(k)])
    units = np.flatnonzero(unit_mask)
    prods = units[:, None] * units[None, :] % k
    checks = 0
    for chi in chars:
        exps = chi._exps.astype(np.int64)
        # zero values sit exactly off the units
        if not np.array_equal(exps >= 0, unit_mask):
            return SuiteResult(k, False, checks, f"zero placement wrong for {chi!r}")
        # theorem 1: multiplication law on a complete residue grid
        lhs = exps[prods]
        rhs = (exps[units][:, None] + exps[units][None, :]) % e
        if not np.array_equal(lhs, rhs):
            a, b = np.argwhere(lhs != rhs)[0]
            return SuiteResult(k, False, checks,
                               f"chi({units[a]}*{units[b]}) != product for {chi!r}")
        checks += 2
        # theorem 2: periodicity, including negative arguments
        for n in (1, 2, k - 1, k + 1, 3 * k + 2, -1, -k - 1):
            if chi.evaluate(n) != chi.evaluate(n % k):
                return SuiteResult(k, False, checks, f"period broken at n={n}")
        checks += 1
    for chi in chars:
        if sum_over_group(chi) != (phi if chi.is_principal() else 0):
            return SuiteResult(k, False, checks, f"theorem 3 fails for {chi!r}")
        checks += 1
    for n in range(k):
        if sum_over_characters(k, n) != (phi if n % k == 1 % k else 0):
            return SuiteResult(k, False, checks, f"theorem 4 fails at n={n}")
        checks += 1
    return SuiteResult(k, True, checks)


def group_axioms_suite(k: int) -> SuiteResult:
    chars = enumerate_characters(k)
    table = set(chars)
    chi0 = principal_character(k)
    checks = 0
    if chi0 not in table:
        return SuiteResult(k, False, checks, "principal character not enumerated")
    for chi in chars:
        if char_mul(chi, chi0) != chi:
            return SuiteResult(k, False, checks, f"identity law fails for {chi!r}")
        if char_mul(chi, char_conj(chi)) != chi0:
            return SuiteResult(k, False, checks, f"conjugate is not inverse for {chi!r}")
        checks += 2
    for chi in chars:
        for psi in chars:
            prod = char_mul(chi, psi)
            if prod not in table:
                return SuiteResult(k, False, checks, "closure fails")
            checks += 1
    for chi, psi in list(zip(chars, reversed(chars)))[:16]:
        if char_mul(chi, psi) != char_mul(psi, chi):
            return SuiteResult(k, False, checks, "commutativity fails")
        checks += 1
    return SuiteResult(k, True, checks)


def historical_suite(k: int, seed: int = 0) -> SuiteResult:
    rng = random.Random((seed, k))
    s = structure(k)
    checks = 0
    via_tuples = enumerate_via_tuples(k)
    if len(via_tuples) != euler_phi(k):
        return SuiteResult(k, False, checks, "tuple enumeration has wrong size")
    if set(via_tuples) != set(enumerate_characters(k)):
        return SuiteResult(k, False, checks, "tuple-generated set != extensional set")
    checks += 2
    # multiplication law on sampled tuple pairs
    all_tuples = [chi.exponent_tuple for chi in via_tuples]
    for _ in range(min(20, len(all_tuples) ** 2)):
        ta = ExponentTuple(s, rng.choice(all_tuples))
        tb = ExponentTuple(s, rng.choice(all_tuples))
        lhs = char_mul(character_from_exponent_tuple(ta), character_from_exponent_tuple(tb))
        if lhs != character_from_exponent_tuple(ta + tb):
            return SuiteResult(k, False, checks, f"tuple law fails at {ta}+{tb}")
        checks += 1
    # orbit sums must match the extensional orthogonality outcome
    for chi in via_tuples:
        expected = euler_phi(k) if all(x == 0 for x in chi.exponent_tuple) else 0
        if sum_over_group(chi) != expected:
            return SuiteResult(k, False, checks, "tuple-character group sum wrong")
        checks += 1
    # random root choices must always produce valid characters
    for _ in range(4):
        roots = []
        for o in s.orders:
            divisors = [d for d in range(1, o + 1) if o % d == 0]
            d = rng.choice(divisors)
            roots.append(RootOfUnity.of(rng.randrange(d), d))
        chi = character_from_roots(RootChoice(s, tuple(roots)))
        try:
            chi.validate()
        except ValueError as exc:
            return SuiteResult(k, False, checks, f"root-choice character invalid: {exc}")
        checks += 1
    return SuiteResult(k, True, checks)


def run_suite(name: str, ks: list[int], seed: int = 0) -> list[SuiteResult]:
    if name == "orthogonality":
        return [orthogonality_suite(k) for k in ks]
    if name == "landau":
        return [landau_suite(k) for k in ks]
    if name == "historical":
        return [historical_suite(k, seed=seed) for k in ks]
    if name == "group-axioms":
        return [group_axioms_suite(k) for k in ks]
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
