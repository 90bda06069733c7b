"""Dirichlet characters with exact arithmetic, L-series numerics, and
desk-scale evidence for the infinitude of primes in arithmetic progressions."""

__version__ = "0.1.0"

from .arith import Factorization, crt_combine, euler_phi, factorize, gcd, is_prime, mod_pow
from .characters import (
    CharacterClass,
    DirichletCharacter,
    char_conj,
    char_mul,
    character_by_tuple,
    classify,
    enumerate_characters,
    evaluate,
    fourier_invert,
    fourier_transform,
    from_values,
    orthogonality_pair_sum,
    principal_character,
    sum_over_characters,
    sum_over_group,
)
from .historical import (
    ExponentTuple,
    RootChoice,
    alternative_structures,
    character_from_exponent_tuple,
    character_from_roots,
    enumerate_via_tuples,
    representation_independence_check,
)
from .lseries import (
    LSeriesEvaluation,
    divergence_profile,
    euler_product,
    fundamental_identity_check,
    l_at_one,
    l_direct,
    log_l_expansion,
    zeta_partial,
)
from .primes import (
    PrimeTable,
    ResourceLimitError,
    SearchResult,
    count_in_progression,
    kronecker_search,
    pnt_ap_ratio,
    sieve,
)
from .roots import (
    ONE,
    ZERO,
    CharacterValue,
    ExactSum,
    RootOfUnity,
    is_real,
    root_conj,
    root_mul,
    root_pow,
    sum_roots,
    to_complex,
    value_str,
)
from .unit_group import (
    IndexVector,
    NotAUnitError,
    UnitGroupStructure,
    index_vector,
    primitive_root_mod_prime_power,
    reconstruct,
    structure,
)

__all__ = [name for name in dir() if not name.startswith("_")]
