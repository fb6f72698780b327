"""Exact quantized Chebyshev polynomials, quiver cluster characters, and seed mutation."""

from .poly import (
    ExactDivisionError,
    LaurentPoly,
    NonInvertibleSubstitutionError,
    ParseError,
    PolyError,
    UnknownVariableError,
    VarTable,
    VarTableMismatchError,
    det,
    exact_div,
    format_poly,
    from_json,
    parse,
    to_json,
)
from .cheb import (
    CheckResult,
    Report,
    first_kind,
    infinite_rank,
    infinite_rank_det,
    rank_p,
    second_kind,
)
from .quiver import (
    OracleLimitError,
    NoCountingPolynomialError,
    Quiver,
    QuiverError,
    Representation,
    euler_form,
    grassmannian_euler,
    subrep_count,
)
from .character import (
    CharacterContext,
    builtin_quivers,
    builtin_reps,
    cluster_character,
    kronecker_quiver,
    type_a_character,
    type_a_quiver,
)
from .mutation import (
    LaurentPhenomenonError,
    Seed,
    basis_family,
    enumerate_variables,
    initial_seed,
    mutate,
)

__all__ = [
    "CharacterContext",
    "CheckResult",
    "ExactDivisionError",
    "LaurentPhenomenonError",
    "LaurentPoly",
    "NoCountingPolynomialError",
    "NonInvertibleSubstitutionError",
    "OracleLimitError",
    "ParseError",
    "PolyError",
    "Quiver",
    "QuiverError",
    "Report",
    "Representation",
    "Seed",
    "UnknownVariableError",
    "VarTable",
    "VarTableMismatchError",
    "basis_family",
    "builtin_quivers",
    "builtin_reps",
    "cluster_character",
    "det",
    "enumerate_variables",
    "euler_form",
    "exact_div",
    "first_kind",
    "format_poly",
    "from_json",
    "grassmannian_euler",
    "infinite_rank",
    "infinite_rank_det",
    "initial_seed",
    "kronecker_quiver",
    "mutate",
    "parse",
    "rank_p",
    "second_kind",
    "subrep_count",
    "to_json",
    "type_a_character",
    "type_a_quiver",
]

__version__ = "0.1.0"
