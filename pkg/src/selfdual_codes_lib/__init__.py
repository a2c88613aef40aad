from __future__ import annotations

from .api import (
    CatalogRecord,
    append_records,
    build_record,
    read_catalog,
    OracleLimits,
    load_env_from_repo_root,
    oracle_limits,
    FieldElement,
    FieldSpec,
    add,
    decode,
    encode,
    inv,
    is_quadratic_residue,
    make_field,
    mul,
    neg,
    power,
    solve_x2_plus_1,
    sub,
    Poly,
    divides,
    format_poly,
    gcd,
    is_irreducible,
    is_self_reciprocal,
    negate_variable,
    parse_poly,
    poly_divmod,
    reciprocal,
    scale_substitute,
    Coset,
    CosetPairing,
    Factorization,
    coset_pairing,
    cosets,
    factor_unity,
    factor_xn_minus_a,
    minimal_poly,
    mult_order,
    ConstacyclicCode,
    ConstacyclicIdeal,
    CyclicDivisorStructure,
    ExponentVector,
    count_selfdual_cyclic,
    count_selfdual_negacyclic,
    cyclic_divisor_structure,
    dual,
    enumerate_selfdual_cyclic,
    enumerate_selfdual_negacyclic,
    generator_matrix,
    is_self_dual,
    make_code,
    mu_apply,
    mu_inverse,
    mu_scale,
    mu_target,
    mu_transport,
    negacyclic_codes_length_2pr,
    negacyclic_factors_via_mu,
    DivisorIterator,
    all_divisors,
    count_divisors_of_degree,
    dual_agrees,
    nullspace_dual,
    oracle_is_self_dual,
    oracle_selfdual_search,
    ClaimVerdict,
    ClaimsConfig,
    cor1_no_selfdual_lengths,
    cor2_char2_unique_cyclic,
    format_claims_table,
    has_engine_oracle_mismatch,
    lemma2_has_sqrt_minus_one,
    lemma4_holds,
    lemma5_holds,
    lemma6_order_congruence,
    lemma7_holds,
    prop2_order_tower,
    run_claims_report,
    thm1_exists_selfdual,
    thm3_exists_selfdual_via_order,
)
from .errors import (
    SelfDualError,
    InvalidInput,
    InvalidCharacteristic,
    InvalidDegree,
    InvalidScale,
    NotCoprime,
    ShapeMismatch,
    HypothesisUnmet,
    ZeroConstantTerm,
    NotMonic,
    NotADivisor,
    EmptyCode,
    FieldMismatch,
    DivisionByZero,
    WildRamification,
    CharacteristicTwoUnsupported,
    NegacyclicTrivialInCharTwo,
    NoSquareRootOfMinusOne,
    OracleRangeExceeded,
    CatalogCorruptError,
)


__version__ = "0.1.0"

__all__ = [
    "CatalogRecord",
    "append_records",
    "build_record",
    "read_catalog",
    "OracleLimits",
    "load_env_from_repo_root",
    "oracle_limits",
    "FieldElement",
    "FieldSpec",
    "add",
    "decode",
    "encode",
    "inv",
    "is_quadratic_residue",
    "make_field",
    "mul",
    "neg",
    "power",
    "solve_x2_plus_1",
    "sub",
    "Poly",
    "divides",
    "format_poly",
    "gcd",
    "is_irreducible",
    "is_self_reciprocal",
    "negate_variable",
    "parse_poly",
    "poly_divmod",
    "reciprocal",
    "scale_substitute",
    "Coset",
    "CosetPairing",
    "Factorization",
    "coset_pairing",
    "cosets",
    "factor_unity",
    "factor_xn_minus_a",
    "minimal_poly",
    "mult_order",
    "ConstacyclicCode",
    "ConstacyclicIdeal",
    "CyclicDivisorStructure",
    "ExponentVector",
    "count_selfdual_cyclic",
    "count_selfdual_negacyclic",
    "cyclic_divisor_structure",
    "dual",
    "enumerate_selfdual_cyclic",
    "enumerate_selfdual_negacyclic",
    "generator_matrix",
    "is_self_dual",
    "make_code",
    "mu_apply",
    "mu_inverse",
    "mu_scale",
    "mu_target",
    "mu_transport",
    "negacyclic_codes_length_2pr",
    "negacyclic_factors_via_mu",
    "DivisorIterator",
    "all_divisors",
    "count_divisors_of_degree",
    "dual_agrees",
    "nullspace_dual",
    "oracle_is_self_dual",
    "oracle_selfdual_search",
    "ClaimVerdict",
    "ClaimsConfig",
    "cor1_no_selfdual_lengths",
    "cor2_char2_unique_cyclic",
    "format_claims_table",
    "has_engine_oracle_mismatch",
    "lemma2_has_sqrt_minus_one",
    "lemma4_holds",
    "lemma5_holds",
    "lemma6_order_congruence",
    "lemma7_holds",
    "prop2_order_tower",
    "run_claims_report",
    "thm1_exists_selfdual",
    "thm3_exists_selfdual_via_order",
    "SelfDualError",
    "InvalidInput",
    "InvalidCharacteristic",
    "InvalidDegree",
    "InvalidScale",
    "NotCoprime",
    "ShapeMismatch",
    "HypothesisUnmet",
    "ZeroConstantTerm",
    "NotMonic",
    "NotADivisor",
    "EmptyCode",
    "FieldMismatch",
    "DivisionByZero",
    "WildRamification",
    "CharacteristicTwoUnsupported",
    "NegacyclicTrivialInCharTwo",
    "NoSquareRootOfMinusOne",
    "OracleRangeExceeded",
    "CatalogCorruptError",
]
