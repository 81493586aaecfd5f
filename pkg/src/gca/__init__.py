"""Exact toolkit for generalized cluster algebras of geometric type."""

from .laurent import (
    AmbientMismatch,
    DivisionByZero,
    EmptyPolynomial,
    LaurentError,
    LaurentPoly,
    StepCapExceeded,
    TermFormatError,
    ZeroSubstitution,
    evaluate,
    gcd,
    leading_term,
    poly_from_terms,
    poly_to_terms,
    try_exact_div,
)
from .seed import (
    ExtendedMatrix,
    FrozenMonomial,
    GeneralizedSeed,
    LaurentViolation,
    SeedError,
    SeedFormatError,
    StringSet,
    ValidationReport,
    Violation,
    apply_sequence,
    exchange_polynomial,
    load_seed,
    mutate_matrix,
    mutate_seed,
    mutate_strings,
    seed_from_obj,
    seed_to_obj,
    validate_seed,
)
from .graph import (
    SeedDigraph,
    acyclic_order,
    build_digraph,
    find_three_cycles,
    is_acyclic,
    reorder_seed,
)
from .basis import (
    CyclicSeed,
    DependenceCertificate,
    IterationCapExceeded,
    LeadingDatum,
    LeadingShapeViolation,
    NoCycle,
    NotInSpan,
    PairCoprimality,
    PbwExpansion,
    ProjectiveData,
    RankResult,
    WitnessResult,
    beta_update_check,
    coprimality_check,
    decode_leading_exponent,
    exchange_partners,
    independence_rank,
    pbw_evaluate,
    pbw_expand,
    projective_sequence,
    proposition_witness,
    standard_monomial_value,
    standard_monomials,
    three_cycle_certificate,
    verify_certificate,
)

__version__ = "0.1.0"
