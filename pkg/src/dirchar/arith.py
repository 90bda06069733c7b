"""Integer building blocks: gcd, modular powers, factorization, phi, CRT.

Everything here is deterministic trial-division arithmetic.  Python integers
are arbitrary precision, so there is no overflow regime to guard against;
inputs beyond desk scale are merely slow, never wrong.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a positive integer, primes strictly increasing."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        for p, e in self.factors:
            prod *= p**e
        if prod != self.value:
            raise ValueError("factor list does not reconstruct value")


def gcd(a: int, b: int) -> int:
    """Greatest common divisor; gcd(0, 0) = 0."""
    if a < 0 or b < 0:
        raise ValueError("gcd expects nonnegative integers")
    return math.gcd(a, b)


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base**exp mod modulus, result in [0, modulus)."""
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    if exp < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(base, exp, modulus)


def is_prime(n: int) -> bool:
    """Deterministic trial division up to sqrt(n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> Factorization:
    """Trial-division factorization; factorize(1) has an empty factor list."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    value = n
    factors = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
    f = 5
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            factors.append((f, e))
        f += 2 if f % 6 == 5 else 4  # skip multiples of 2 and 3
    if n > 1:
        factors.append((n, 1))
    return Factorization(value, tuple(factors))


def euler_phi(k: int) -> int:
    """Euler phi via the product formula k * prod (1 - 1/p)."""
    if k < 1:
        raise ValueError("euler_phi expects k >= 1")
    phi = k
    for p, _ in factorize(k).factors:
        phi -= phi // p
    return phi


def crt_combine(residues: list[tuple[int, int]]) -> int:
    """Unique x mod prod(m_i) with x = r_i mod m_i; moduli pairwise coprime."""
    if not residues:
        return 0
    x, m = 0, 1
    for r, mi in residues:
        if mi < 1:
            raise ValueError("moduli must be >= 1")
        if math.gcd(m, mi) != 1:
            raise ValueError("moduli are not pairwise coprime")
        # x' = x + m*t with x' = r mod mi  ->  t = (r - x) / m mod mi
        t = ((r - x) * pow(m, -1, mi)) % mi if mi > 1 else 0
        x += m * t
        m *= mi
    return x % m
