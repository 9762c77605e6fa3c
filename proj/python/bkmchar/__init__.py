"""Exact characters and tensor-product decisions for Borcherds-Kac-Moody algebras."""

from ._core import (
    Algebra,
    AxiomError,
    BraidConsistencyError,
    DominanceError,
    SymmetrizabilityError,
    character,
    components,
    decide_numerator,
    decide_tensor,
    graph_c,
    is_one_dimensional,
    is_special,
    log_coefficient_check,
    numerator,
    oracle_equal_characters,
    pi_lambda,
    tensor_character,
    unique_factorization,
)

__all__ = [
    "Algebra",
    "AxiomError",
    "BraidConsistencyError",
    "DominanceError",
    "SymmetrizabilityError",
    "character",
    "components",
    "decide_numerator",
    "decide_tensor",
    "graph_c",
    "is_one_dimensional",
    "is_special",
    "log_coefficient_check",
    "numerator",
    "oracle_equal_characters",
    "pi_lambda",
    "tensor_character",
    "unique_factorization",
]
