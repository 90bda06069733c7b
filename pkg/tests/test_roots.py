import cmath
import math

import pytest

from dirchar.roots import (
    MINUS_ONE,
    ONE,
    ZERO,
    RootOfUnity,
    is_real,
    root_conj,
    root_mul,
    root_pow,
    sum_roots,
    to_complex,
    value_str,
)


def all_roots_of_order_dividing(n):
    out = []
    for d in range(1, n + 1):
        if n % d:
            continue
        for a in range(d):
            if a == 0 and d > 1:
                continue
            if a and math.gcd(a, d) != 1:
                continue
            out.append(RootOfUnity(a, d))
    return out


def test_canonical_form_enforced():
    assert RootOfUnity.of(2, 6) == RootOfUnity(1, 3)
    assert RootOfUnity.of(-1, 4) == RootOfUnity(3, 4)
    assert RootOfUnity.of(7, 7) == ONE
    with pytest.raises(ValueError):
        RootOfUnity(2, 6)
    with pytest.raises(ValueError):
        RootOfUnity(0, 3)
    with pytest.raises(ValueError):
        RootOfUnity(1, 0)


def test_mul_examples():
    third = RootOfUnity(1, 3)
    assert root_mul(third, third) == RootOfUnity(2, 3)
    assert root_mul(RootOfUnity(1, 4), RootOfUnity(3, 4)) == ONE
    for x in all_roots_of_order_dividing(12):
        assert root_mul(x, ONE) == x


def test_conj_examples():
    assert root_conj(RootOfUnity(1, 4)) == RootOfUnity(3, 4)
    assert root_conj(ONE) == ONE
    assert root_conj(MINUS_ONE) == MINUS_ONE
    for x in all_roots_of_order_dividing(24):
        assert root_mul(x, root_conj(x)) == ONE


def test_pow_examples():
    assert root_pow(RootOfUnity(1, 4), 2) == MINUS_ONE
    assert root_pow(RootOfUnity(1, 3), -1) == RootOfUnity(2, 3)
    for x in all_roots_of_order_dividing(24):
        assert root_pow(x, 0) == ONE
        assert root_pow(x, x.denominator) == ONE  # order divides denominator


def test_group_axioms_exhaustive_order_24():
    roots = all_roots_of_order_dividing(24)
    assert len(roots) == 24
    for x in roots:
        for y in roots:
            assert root_mul(x, y) == root_mul(y, x)
            for z in roots:
                assert root_mul(root_mul(x, y), z) == root_mul(x, root_mul(y, z))


def test_is_real():
    assert is_real(ONE) and is_real(MINUS_ONE)
    assert not is_real(RootOfUnity(1, 4))
    assert not is_real(RootOfUnity(1, 3))


def test_to_complex_values():
    assert to_complex(ONE) == 1.0
    assert abs(to_complex(MINUS_ONE) + 1.0) < 1e-15
    assert abs(to_complex(RootOfUnity(1, 4)) - 1j) < 1e-15
    for x in all_roots_of_order_dividing(24):
        want = cmath.exp(2j * math.pi * x.numerator / x.denominator)
        assert abs(to_complex(x) - want) < 1e-12


def test_to_complex_is_multiplicative():
    roots = all_roots_of_order_dividing(24)
    for x in roots:
        for y in roots:
            assert abs(to_complex(root_mul(x, y)) - to_complex(x) * to_complex(y)) < 1e-12


def test_sum_full_orbits_is_exact_zero():
    i = RootOfUnity(1, 4)
    res = sum_roots([ONE, i, MINUS_ONE, root_conj(i)])
    assert res.is_zero and res.symbolic
    omega = RootOfUnity(1, 3)
    res = sum_roots([ONE, omega, root_pow(omega, 2)])
    assert res.is_zero and res.symbolic


def test_sum_repeated_identity():
    res = sum_roots([ONE, ONE, ONE])
    assert not res.is_zero and res.symbolic
    assert res.value == 3


def test_sum_mixed_order_zero():
    # zeta_6 + zeta_6^3 + zeta_6^5 = 0: a 3-orbit at step 2
    z = RootOfUnity(1, 6)
    res = sum_roots([z, root_pow(z, 3), root_pow(z, 5)])
    assert res.is_zero and res.symbolic


def test_sum_skips_zero_values():
    assert sum_roots([ZERO, ZERO]).is_zero
    res = sum_roots([ZERO, ONE, ZERO])
    assert res.value == 1


def test_sum_nonzero_mixture():
    res = sum_roots([ONE, RootOfUnity(1, 3)])
    assert not res.is_zero
    want = 1 + cmath.exp(2j * math.pi / 3)
    assert abs(res.value - want) < 1e-12


def test_value_str():
    assert value_str(ZERO) == "0"
    assert value_str(ONE) == "0/1"
    assert value_str(RootOfUnity(3, 4)) == "3/4"
