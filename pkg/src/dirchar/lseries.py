"""L-series numerics: direct sums, Euler products, log expansions, and the
character-sum identity that isolates one residue class of primes.

Exact roots of unity are converted to doubles at this boundary; every
reported value carries a rigorous tail bound, so there are no uncertified
digits.  Truncation lengths are derived from the requested tolerance:

  * non-principal characters: partial sums of chi over any range are bounded
    by the one-period maximum H, and Abel summation gives
    |tail| <= H * N^(-sigma) * (1 + |s|/sigma);
  * principal characters: the coprime-residue tail is summed per class with
    Euler-Maclaurin corrections, remainder bounded by the first omitted term
    (the crude bound N^(1-s)/(s-1) alone would need ~1e16 terms at s = 1.5).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arith import euler_phi, factorize
from .characters import DirichletCharacter, enumerate_characters
from .primes import sieve
from .unit_group import structure

_CHUNK = 1 << 20
_MAX_TERMS = 3 * 10**8


@dataclass(frozen=True)
class LSeriesEvaluation:
    """A truncated L-series value with its certification metadata."""

    s: complex
    modulus: int
    char_tuple: tuple[int, ...] | None
    value: complex
    truncation: int
    tail_bound: float


@lru_cache(maxsize=8)
def _primes_upto(p: int) -> np.ndarray:
    if p < 2:
        arr = np.empty(0, dtype=np.int64)
    else:
        arr = sieve(p).primes()
    arr.setflags(write=False)
    return arr


def _complex_table(chi: DirichletCharacter) -> np.ndarray:
    """chi as a complex vector over residues 0..k-1 (zero off the units)."""
    t = np.array([chi._exps], dtype=np.float64)[0]
    unit = t >= 0
    vals = np.exp(2j * np.pi * np.where(unit, t, 0.0) / chi.order)
    return np.where(unit, vals, 0.0)


def _period_max_partial(chi: DirichletCharacter) -> float:
    """Largest |sum of chi(n) for n <= j| over one period.

    For non-principal chi the full-period sum vanishes, so this bounds the
    partial sums of chi over every initial segment.
    """
    partial = np.cumsum(_complex_table(chi)[1:])
    return float(np.max(np.abs(partial))) if len(partial) else 0.0


def zeta_partial(s: float, n_terms: int) -> LSeriesEvaluation:
    """Partial sum of sum n^-s with the integral tail bound N^(1-s)/(s-1)."""
    if not isinstance(s, (int, float)) or s <= 1:
        raise ValueError("zeta_partial needs real s > 1")
    if n_terms < 1:
        raise ValueError("need at least one term")
    total = 0.0
    for lo in range(1, n_terms + 1, _CHUNK):
        hi = min(lo + _CHUNK, n_terms + 1)
        total += float(np.sum(np.arange(lo, hi, dtype=np.float64) ** (-float(s))))
    bound = n_terms ** (1.0 - s) / (s - 1.0)
    return LSeriesEvaluation(s, 1, (), complex(total), n_terms, bound)


def _em_coprime_tail(s: complex, k: int, n0: int) -> tuple[complex, float]:
    """sum n^-s over n > n0 coprime to k, via per-class Euler-Maclaurin.

    Each class contributes integral + f/2 - B2 f'/12 - B4 f'''/720 terms;
    the remainder per class is bounded by the first omitted (B6) term.
    """
    sigma = s.real
    total = 0j
    bound = 0.0
    abs5 = abs(s) * abs(s + 1) * abs(s + 2) * abs(s + 3) * abs(s + 4)
    for r in structure(k).units:
        m = n0 + 1 + (r - n0 - 1) % k  # first n > n0 with n = r mod k
        total += m ** (1 - s) / (k * (s - 1))
        total += m ** (-s) / 2
        total += s * k * m ** (-s - 1) / 12
        total -= s * (s + 1) * (s + 2) * k**3 * m ** (-s - 3) / 720
        per = abs5 * k**5 * m ** (-sigma - 5) / 30240
        if s.imag:
            per *= 2 * (abs(s) + 5) / (sigma + 5)
        bound += per
    return total, bound


def l_direct(s: complex, chi: DirichletCharacter, tol: float = 1e-8) -> LSeriesEvaluation:
    """Truncated sum of chi(n) n^-s with N chosen so the tail bound is < tol."""
    s = complex(s)
    if s.imag == 0:
        s = s.real
        if s <= 1:
            raise ValueError("l_direct needs s > 1; at s = 1 use l_at_one")
        sigma = s
    else:
        sigma = s.real
        if sigma <= 1:
            raise ValueError("l_direct needs Re(s) > 1")
    k = chi.modulus
    table = _complex_table(chi)

    if chi.is_principal():
        n_terms = max(4 * k, 64)
        while True:
            tail, bound = _em_coprime_tail(complex(s), k, n_terms)
            if bound < tol / 2:
                break
            n_terms *= 2
        n = np.arange(1, n_terms + 1)
        coprime = np.gcd(n, k) == 1
        value = complex(np.sum(n[coprime].astype(np.float64) ** (-complex(s)))) + tail
        return LSeriesEvaluation(s, k, chi.exponent_tuple, value, n_terms, bound)

    h = _period_max_partial(chi)
    factor = h * (1 + abs(s) / sigma)
    n_terms = max(k, int(math.ceil((factor / tol) ** (1 / sigma))))
    if n_terms > _MAX_TERMS:
        raise ValueError("tolerance unreachable by direct summation; loosen tol")
    total = 0j
    for lo in range(1, n_terms + 1, _CHUNK):
        hi = min(lo + _CHUNK, n_terms + 1)
        n = np.arange(lo, hi, dtype=np.float64)
        total += complex(np.sum(table[np.arange(lo, hi) % k] * n ** (-complex(s))))
    bound = factor * n_terms ** (-sigma)
    return LSeriesEvaluation(s, k, chi.exponent_tuple, total, n_terms, bound)


def euler_product(s: complex, chi: DirichletCharacter, prime_bound: int) -> LSeriesEvaluation:
    """Product over primes q <= prime_bound, q not dividing k, of
    1/(1 - chi(q) q^-s)."""
    s = complex(s)
    if s.real <= 1:
        raise ValueError("euler_product needs Re(s) > 1")
    k = chi.modulus
    q = _primes_upto(prime_bound)
    q = q[np.gcd(q, k) == 1]
    if len(q):
        table = _complex_table(chi)
        factors = 1.0 / (1.0 - table[q % k] * q.astype(np.float64) ** (-s))
        value = complex(np.prod(factors))
    else:
        value = 1 + 0j
    # |log L - log product| <= sum_{n>P} n^-sigma / (1 - 2^-sigma)
    sigma = s.real
    p_eff = max(prime_bound, 1)
    delta = p_eff ** (1 - sigma) / ((sigma - 1) * (1 - 2.0**-sigma))
    bound = abs(value) * (math.expm1(delta) if delta < 50 else math.inf)
    return LSeriesEvaluation(s, k, chi.exponent_tuple, value, prime_bound, bound)


def log_l_expansion(s: complex, chi: DirichletCharacter, prime_bound: int,
                    j_max: int) -> tuple[complex, complex]:
    """Split log L: (sum chi(q) q^-s, sum over j>=2 of chi(q^j)/(j q^(js))).

    The second component stays below 1 in absolute value for every character
    and every s >= 1.05 (it is dominated by sum 1/(n(n-1)) = 1).
    """
    s = complex(s)
    if s.real <= 1:
        raise ValueError("log_l_expansion needs Re(s) > 1")
    if j_max < 2:
        raise ValueError("need j_max >= 2")
    k = chi.modulus
    q = _primes_upto(prime_bound)
    q = q[np.gcd(q, k) == 1]
    if not len(q):
        return 0j, 0j
    table = _complex_table(chi)
    qf = q.astype(np.float64)
    qs = qf ** (-s)
    main = complex(np.sum(table[q % k] * qs))
    higher = 0j
    q_mod = q % k
    qj_mod = q_mod.copy()
    qjs = qs.copy()
    for j in range(2, j_max + 1):
        qj_mod = qj_mod * q_mod % k
        qjs = qjs * qs
        higher += complex(np.sum(table[qj_mod] * qjs)) / j
    return main, higher


def fundamental_identity_check(k: int, m: int, s: float, prime_bound: int,
                               j_max: int) -> tuple[complex, float, float]:
    """Orthogonality applied to truncated log expansions, term by term.

    lhs: sum over characters of conj(chi(m)) * sum_{q<=P, j<=J} chi(q^j)/(j q^(js))
    rhs: phi(k) * sum over the same (q, j) with q^j = m mod k of q^(-js)/j
    The two agree identically at any truncation, so the residual is pure
    floating-point noise.
    """
    if math.gcd(m % k if k > 1 else 0, k) != 1:
        raise ValueError("m must be a unit mod k")
    if s <= 1:
        raise ValueError("needs s > 1")
    chars = enumerate_characters(k)
    tables = np.vstack([_complex_table(chi) for chi in chars])
    q = _primes_upto(prime_bound)
    if not len(q):
        return 0j, 0.0, 0.0
    qf = q.astype(np.float64)
    qs = qf ** (-float(s))
    q_mod = q % k
    per_char = np.zeros(len(chars), dtype=np.complex128)
    rhs = 0.0
    qj_mod = np.ones_like(q_mod)
    qjs = np.ones_like(qs)
    for j in range(1, j_max + 1):
        qj_mod = qj_mod * q_mod % k
        qjs = qjs * qs
        amp = qjs / j
        per_char += tables[:, qj_mod] @ amp
        rhs += float(np.sum(amp[qj_mod == m % k]))
    rhs *= euler_phi(k)
    conj_at_m = np.conj(tables[:, m % k])
    lhs = complex(conj_at_m @ per_char)
    return lhs, rhs, abs(lhs - rhs)


def l_at_one(chi: DirichletCharacter, tol: float = 1e-6) -> LSeriesEvaluation:
    """L(1, chi) for non-principal chi by summation over full periods.

    Character sums over any k consecutive integers vanish, so the tail past
    N is bounded by k*H/N; N is chosen from 2*k*H/N < tol.  The result is
    asserted nonzero: |value| must exceed ten times the tail bound.
    """
    if chi.is_principal():
        raise ValueError("the principal L-series has a pole at s = 1")
    k = chi.modulus
    h = _period_max_partial(chi)
    n_terms = int(math.ceil(2 * k * h / tol / k)) * k
    if n_terms > _MAX_TERMS:
        raise ValueError("tolerance unreachable; loosen tol")
    table = _complex_table(chi)
    total = 0j
    for lo in range(1, n_terms + 1, _CHUNK):
        hi = min(lo + _CHUNK, n_terms + 1)
        n = np.arange(lo, hi, dtype=np.float64)
        total += complex(np.sum(table[np.arange(lo, hi) % k] / n))
    bound = k * h / n_terms
    if not abs(total) > 10 * bound:
        raise ArithmeticError(
            f"nonvanishing witness failed: |L(1,chi)| = {abs(total):.3e} "
            f"not above 10 x {bound:.3e}")
    return LSeriesEvaluation(1.0, k, chi.exponent_tuple, total, n_terms, bound)


def divergence_profile(k: int, m: int, s_list: list[float],
                       prime_bound: int) -> list[tuple[float, float]]:
    """For each s: the partial sum of q^-s over primes q <= P, q = m mod k."""
    for s in s_list:
        if s <= 1:
            raise ValueError("each s must be > 1")
    q = _primes_upto(prime_bound)
    q = q[q % k == m % k].astype(np.float64)
    return [(float(s), float(np.sum(q ** (-float(s))))) for s in s_list]
