import cmath
import math
import random

import pytest

from dirchar.arith import euler_phi
from dirchar.characters import (
    CharacterClass,
    char_conj,
    char_mul,
    character_by_tuple,
    classify,
    enumerate_characters,
    fourier_invert,
    fourier_transform,
    from_values,
    orthogonality_pair_sum,
    principal_character,
    sum_over_characters,
    sum_over_group,
)
from dirchar.roots import MINUS_ONE, ONE, ZERO, RootOfUnity, root_conj, to_complex
from dirchar.unit_group import NotAUnitError, structure


def brute_force_homomorphism_tables(k):
    """Every completely multiplicative unit->root table, by backtracking.

    Candidate values at a unit u are the roots of unity of order dividing
    ord(u); partial tables are closed under multiplication and rejected on
    the first conflict.  No group structure theory is used.
    """
    units = [r for r in range(k) if math.gcd(r, k) == 1]
    orders = {}
    for u in units:
        r, n = u, 1
        while r != 1 % k:
            r = r * u % k
            n += 1
        orders[u] = n
    exponent = math.lcm(*orders.values()) if orders else 1

    def close(assign):
        pending = list(assign)
        while pending:
            a = pending.pop()
            for b in list(assign):
                ab = a * b % k
                want = (assign[a] + assign[b]) % exponent
                if ab in assign:
                    if assign[ab] != want:
                        return None
                else:
                    assign[ab] = want
                    pending.append(ab)
        return assign

    results = []

    def extend(assign):
        free = [u for u in units if u not in assign]
        if not free:
            results.append(dict(assign))
            return
        u = free[0]
        step = exponent // orders[u]
        for t in range(0, exponent, step):
            trial = close({**assign, u: t})
            if trial is not None:
                extend(trial)

    extend({1 % k: 0})
    tables = set()
    for assign in results:
        tables.add(tuple(sorted((u, RootOfUnity.of(t, exponent)) for u, t in assign.items())))
    return tables


@pytest.mark.parametrize("k", list(range(1, 31)))
def test_extensional_completeness_up_to_30(k):
    # Every multiplicative table is one of the enumerated characters.
    oracle = brute_force_homomorphism_tables(k)
    enumerated = {tuple(sorted(chi.values.items())) for chi in enumerate_characters(k)}
    assert enumerated == oracle


def test_enumeration_count():
    for k in range(1, 121):
        assert len(enumerate_characters(k)) == euler_phi(k)
        assert len(set(enumerate_characters(k))) == euler_phi(k)


def test_enumeration_examples():
    chars4 = enumerate_characters(4)
    assert len(chars4) == 2
    assert chars4[0].evaluate(3) == ONE
    assert chars4[1].evaluate(3) == MINUS_ONE
    chars5 = enumerate_characters(5)
    at_two = {chi.evaluate(2) for chi in chars5}
    assert at_two == {ONE, RootOfUnity(1, 4), MINUS_ONE, RootOfUnity(3, 4)}
    assert len(enumerate_characters(1)) == 1


def test_principal_character():
    chi0 = principal_character(4)
    assert chi0.evaluate(1) == ONE and chi0.evaluate(3) == ONE
    assert chi0.evaluate(2) is ZERO
    assert all(principal_character(1).evaluate(n) == ONE for n in range(-3, 9))
    assert principal_character(6).evaluate(4) is ZERO
    assert principal_character(7) == enumerate_characters(7)[0]


def test_evaluate_reduces_mod_k():
    for chi in enumerate_characters(12):
        for n in (-11, -1, 1, 5, 17, 29, 12 * 5 + 7):
            assert chi.evaluate(n) == chi.evaluate(n % 12)
    assert enumerate_characters(10)[1].evaluate(15) is ZERO
    for chi in enumerate_characters(9):
        assert chi.evaluate(1) == ONE


def test_char_mul_and_conj():
    chars5 = enumerate_characters(5)
    chi0 = chars5[0]
    chi_i = next(c for c in chars5 if c.evaluate(2) == RootOfUnity(1, 4))
    chi_m1 = next(c for c in chars5 if c.evaluate(2) == MINUS_ONE)
    for chi in chars5:
        assert char_mul(chi, chi0) == chi
        assert char_mul(chi, char_conj(chi)) == chi0
    assert char_mul(chi_i, chi_i) == chi_m1
    assert char_conj(chi_i).evaluate(2) == RootOfUnity(3, 4)
    assert char_conj(chi0) == chi0
    real4 = enumerate_characters(4)[1]
    assert char_conj(real4) == real4
    with pytest.raises(ValueError):
        char_mul(chi0, principal_character(7))


def test_char_mul_closure():
    for k in (5, 8, 12, 15):
        table = set(enumerate_characters(k))
        for chi in table:
            for psi in table:
                assert char_mul(chi, psi) in table


def test_classify_examples():
    assert classify(principal_character(12)) is CharacterClass.PRINCIPAL
    assert classify(enumerate_characters(4)[1]) is CharacterClass.REAL_NON_PRINCIPAL
    chi_i = next(c for c in enumerate_characters(5) if c.evaluate(2) == RootOfUnity(1, 4))
    assert classify(chi_i) is CharacterClass.COMPLEX


def test_classify_partition():
    for k in range(1, 61):
        chars = enumerate_characters(k)
        classes = [classify(chi) for chi in chars]
        assert classes.count(CharacterClass.PRINCIPAL) == 1
        assert len(classes) == euler_phi(k)
        complexes = [chi for chi in chars if classify(chi) is CharacterClass.COMPLEX]
        assert len(complexes) % 2 == 0
        for chi in complexes:  # conjugate pairing
            assert char_conj(chi) in complexes and char_conj(chi) != chi


def test_value_orders_divide_group_exponent():
    for k in range(1, 51):
        e = structure(k).exponent
        for chi in enumerate_characters(k):
            for value in chi.values.values():
                assert e % value.order == 0


def test_sum_over_group():
    assert sum_over_group(principal_character(5)) == 4
    assert sum_over_group(principal_character(1)) == 1
    chi_i = next(c for c in enumerate_characters(5) if c.evaluate(2) == RootOfUnity(1, 4))
    assert sum_over_group(chi_i) == 0


def test_sum_over_characters():
    assert sum_over_characters(5, 1) == 4
    assert sum_over_characters(5, 2) == 0
    assert sum_over_characters(4, 2) == 0
    assert sum_over_characters(1, 0) == 1


def test_orthogonality_pair_sums():
    assert orthogonality_pair_sum(5, 3, 3) == 4
    assert orthogonality_pair_sum(5, 2, 3) == 0
    for k in (1, 4, 9):
        assert orthogonality_pair_sum(k, 1, 1) == euler_phi(k)
    with pytest.raises(NotAUnitError):
        orthogonality_pair_sum(10, 2, 3)


def test_character_identity_is_extensional():
    # same table built from a different generator gives the same object key
    from dirchar.historical import ExponentTuple, character_from_exponent_tuple
    from dirchar.unit_group import UnitGroupStructure
    alt = UnitGroupStructure(5, [(3, 4)])
    regenerated = {character_from_exponent_tuple(ExponentTuple(alt, t)) for t in [(0,), (1,), (2,), (3,)]}
    assert regenerated == set(enumerate_characters(5))


def test_from_values_validates():
    good = {r: v for r, v in enumerate_characters(5)[1].values.items()}
    assert from_values(5, good) == enumerate_characters(5)[1]
    with pytest.raises(ValueError):
        from_values(5, {1: ONE, 2: ONE})  # incomplete table
    bad = dict(good)
    bad[4] = RootOfUnity(1, 4)  # breaks multiplicativity
    with pytest.raises(ValueError):
        from_values(5, bad)


def test_character_by_tuple():
    chi = character_by_tuple(5, (1,))
    assert chi.evaluate(2) == RootOfUnity(1, 4)
    assert character_by_tuple(8, (1, 0)).evaluate(7) == MINUS_ONE
    with pytest.raises(ValueError):
        character_by_tuple(5, (4,))
    with pytest.raises(ValueError):
        character_by_tuple(5, (1, 1))


def test_fourier_indicator_of_one():
    units = structure(5).units
    f = {g: 1.0 if g == 1 else 0.0 for g in units}
    fhat = fourier_transform(5, f)
    assert all(abs(v - 1.0) < 1e-12 for v in fhat.values())


def test_fourier_constant_function():
    units = structure(5).units
    fhat = fourier_transform(5, {g: 1.0 for g in units})
    for chi, v in fhat.items():
        want = 4.0 if chi.is_principal() else 0.0
        assert abs(v - want) < 1e-12


def test_fourier_round_trip_mod_12():
    rng = random.Random(7)
    units = structure(12).units
    f = {g: complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for g in units}
    back = fourier_invert(12, fourier_transform(12, f))
    for g in units:
        assert abs(back[g] - f[g]) < 1e-12


def test_fourier_indicator_coefficients():
    # indicator of m decomposes with coefficients conj(chi(m)) / phi(k)
    k, m = 15, 7
    units = structure(k).units
    phi = euler_phi(k)
    for g in units:
        acc = sum(to_complex(root_conj(chi.evaluate(m))) * to_complex(chi.evaluate(g))
                  for chi in enumerate_characters(k)) / phi
        assert abs(acc - (1.0 if g == m else 0.0)) < 1e-12


def test_fourier_rejects_incomplete_input():
    with pytest.raises(ValueError):
        fourier_transform(5, {1: 1.0})
    with pytest.raises(ValueError):
        fourier_invert(5, {})


def test_evaluate_against_complex_homomorphism():
    # spot-check multiplicativity through the complex embedding
    for k in (7, 12):
        for chi in enumerate_characters(k):
            for a in range(1, k):
                for b in range(1, k):
                    lhs = to_complex(chi.evaluate(a * b)) if math.gcd(a * b, k) == 1 else 0j
                    va = chi.evaluate(a)
                    vb = chi.evaluate(b)
                    rhs = 0j if (va is ZERO or vb is ZERO) else to_complex(va) * to_complex(vb)
                    assert cmath.isclose(lhs, rhs, abs_tol=1e-12)
