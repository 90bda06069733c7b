import math

import pytest

from dirchar.arith import Factorization, crt_combine, euler_phi, factorize, gcd, is_prime, mod_pow


def trial_division_is_prime(n):
    return n >= 2 and all(n % f for f in range(2, int(n**0.5) + 1))


def test_gcd_examples():
    assert gcd(12, 18) == 6
    assert gcd(0, 7) == 7
    assert gcd(0, 0) == 0
    for n in (1, 2, 97, 1000):
        assert gcd(1, n) == 1


def test_gcd_rejects_negatives():
    with pytest.raises(ValueError):
        gcd(-4, 6)


def test_mod_pow_examples():
    assert mod_pow(5, 3, 7) == 6
    assert mod_pow(2, 10, 1024) == 0
    for m in (1, 2, 9):
        assert mod_pow(123, 0, m) == 1 % m


def test_mod_pow_matches_naive():
    for base in range(-3, 13):
        for exp in range(13):
            for modulus in (1, 2, 7, 100):
                naive = 1
                for _ in range(exp):
                    naive = naive * base % modulus
                assert mod_pow(base, exp, modulus) == naive % modulus


def test_mod_pow_domain_errors():
    with pytest.raises(ValueError):
        mod_pow(2, 3, 0)
    with pytest.raises(ValueError):
        mod_pow(2, -1, 5)


def test_factorize_examples():
    assert factorize(20).factors == ((2, 2), (5, 1))
    assert factorize(1).factors == ()
    assert trial_division_is_prime(9973)
    assert factorize(9973).factors == ((9973, 1),)


def test_factorize_reconstructs_everything():
    for n in range(1, 10**4 + 1):
        f = factorize(n)
        assert f.value == n
        prod = 1
        last = 1
        for p, e in f.factors:
            assert p > last and e >= 1 and trial_division_is_prime(p)
            last = p
            prod *= p**e
        assert prod == n


def test_factorization_type_rejects_bad_lists():
    with pytest.raises(ValueError):
        Factorization(12, ((2, 1), (3, 1)))


def test_factorize_domain_error():
    with pytest.raises(ValueError):
        factorize(0)


def test_euler_phi_examples():
    assert euler_phi(1) == 1
    assert euler_phi(20) == 8
    for p in (2, 3, 5, 97, 9973):
        assert euler_phi(p) == p - 1


def test_euler_phi_against_totient_sieve():
    # independent oracle: totient sieve, no factorization involved
    limit = 10**4
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:
            for j in range(p, limit + 1, p):
                phi[j] -= phi[j] // p
    for k in range(1, limit + 1):
        assert euler_phi(k) == phi[k]


def test_euler_phi_brute_force_small():
    for k in range(1, 301):
        count = sum(1 for n in range(1, k + 1) if math.gcd(n, k) == 1)
        assert euler_phi(k) == count


def test_crt_examples():
    # oracle: scan the full range for the simultaneous solution
    want = next(x for x in range(20) if x % 4 == 1 and x % 5 == 2)
    assert want == 17
    assert crt_combine([(1, 4), (2, 5)]) == 17
    assert crt_combine([(0, 9)]) == 0
    assert crt_combine([(3, 4), (3, 5)]) == 3
    assert crt_combine([]) == 0


def test_crt_satisfies_congruences():
    import random
    rng = random.Random(0)
    for _ in range(200):
        moduli = rng.sample([3, 4, 5, 7, 11, 13, 16, 27], rng.randint(1, 4))
        while any(math.gcd(a, b) > 1 for i, a in enumerate(moduli) for b in moduli[:i]):
            moduli = rng.sample([3, 4, 5, 7, 11, 13, 16, 27], rng.randint(1, 4))
        pairs = [(rng.randrange(m), m) for m in moduli]
        x = crt_combine(pairs)
        prod = math.prod(moduli)
        assert 0 <= x < prod
        for r, m in pairs:
            assert x % m == r


def test_crt_rejects_common_factor():
    with pytest.raises(ValueError):
        crt_combine([(1, 4), (1, 6)])


def test_is_prime_spot():
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    for n in range(2, 2000):
        assert is_prime(n) == trial_division_is_prime(n)
