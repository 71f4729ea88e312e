"""Numerical semigroup arithmetic: Apery tables, tangent cone structure,
Hilbert series, two closed-form families, and a brute force oracle.

All computation is exact integer arithmetic.  Start with new_semigroup()
or one of the family constructors, then hand the semigroup to the table,
ladder and oracle functions.  The cli module provides the `aperycone`
command with the same capabilities.
"""

from .core import (
    INT63_MAX,
    AperySet,
    Factorization,
    NumericalSemigroup,
    apery_set,
    contains,
    factorizations,
    frobenius,
    length_set,
    new_semigroup,
    order,
)
from .errors import (
    ColumnOutOfRangeError,
    EmptyInputError,
    GcdNotOneError,
    InvalidGeneratorError,
    NotAFamilyError,
    NotInSemigroupError,
    ParamTooSmallError,
    RangeOverflowError,
    SemigroupError,
    TooLargeError,
    TrivialSemigroupError,
)
from .families import (
    ArslanParams,
    BresinskyParams,
    FamilyParams,
    OrderCensus,
    arslan,
    arslan_apery_closed_form,
    bresinsky,
    bresinsky_apery_closed_form,
    detect_family,
    family_apery_closed_form,
    family_block_layout,
    family_orders_closed_form,
    family_table_closed_form,
    order_census_closed_form,
    verify_uniqueness,
)
from .ladder import (
    ConeDecomposition,
    HilbertSeries,
    Landing,
    LadderProfile,
    cone_decomposition,
    hilbert_function_from_series,
    hilbert_series,
    is_cohen_macaulay,
    is_free,
    ladder_profile,
)
from .oracle import (
    ORACLE_GENERATOR_LIMIT,
    CheckResult,
    VerificationReport,
    brute_apery,
    brute_hilbert_function,
    brute_order,
    full_verify,
)
from .table import (
    AperyTable,
    apery_table,
    hilbert_function,
    n_fold_contains,
    reduction_number,
)

__version__ = "0.1.0"

__all__ = [
    "INT63_MAX",
    "ORACLE_GENERATOR_LIMIT",
    "AperySet",
    "AperyTable",
    "ArslanParams",
    "BresinskyParams",
    "CheckResult",
    "ColumnOutOfRangeError",
    "ConeDecomposition",
    "EmptyInputError",
    "Factorization",
    "FamilyParams",
    "GcdNotOneError",
    "HilbertSeries",
    "InvalidGeneratorError",
    "Landing",
    "LadderProfile",
    "NotAFamilyError",
    "NotInSemigroupError",
    "NumericalSemigroup",
    "OrderCensus",
    "ParamTooSmallError",
    "RangeOverflowError",
    "SemigroupError",
    "TooLargeError",
    "TrivialSemigroupError",
    "VerificationReport",
    "apery_set",
    "apery_table",
    "arslan",
    "arslan_apery_closed_form",
    "bresinsky",
    "bresinsky_apery_closed_form",
    "brute_apery",
    "brute_hilbert_function",
    "brute_order",
    "cone_decomposition",
    "contains",
    "detect_family",
    "factorizations",
    "family_apery_closed_form",
    "family_block_layout",
    "family_orders_closed_form",
    "family_table_closed_form",
    "frobenius",
    "full_verify",
    "hilbert_function",
    "hilbert_function_from_series",
    "hilbert_series",
    "is_cohen_macaulay",
    "is_free",
    "ladder_profile",
    "length_set",
    "n_fold_contains",
    "new_semigroup",
    "order",
    "order_census_closed_form",
    "reduction_number",
    "verify_uniqueness",
]
