"""Exact computer algebra for linkage and residual-intersection identities."""

from .groebner import (
    BudgetExceededError,
    GroebnerBasis,
    Ideal,
    NonHomogeneousError,
    UnitIdealError,
    ZeroIdealDivisorError,
    certify_basis,
    codim,
    dimension,
    eliminate,
    groebner_basis,
    ideals_equal,
    intersect,
    is_member,
    min_generators,
    normal_form,
    quotient,
    s_polynomial,
    set_budget,
)
from .parser import ParseError, parse_poly
from .poly import (
    BlockElim,
    GrevLex,
    Lex,
    MonomialOrder,
    Polynomial,
    PolyError,
    Ring,
    RingMismatchError,
    UnknownVariableError,
    compare_monomials,
    order_from_tag,
)

__all__ = [
    "BlockElim",
    "BudgetExceededError",
    "GrevLex",
    "GroebnerBasis",
    "Ideal",
    "Lex",
    "MonomialOrder",
    "NonHomogeneousError",
    "ParseError",
    "Polynomial",
    "PolyError",
    "Ring",
    "RingMismatchError",
    "UnitIdealError",
    "UnknownVariableError",
    "ZeroIdealDivisorError",
    "certify_basis",
    "codim",
    "compare_monomials",
    "dimension",
    "eliminate",
    "groebner_basis",
    "ideals_equal",
    "intersect",
    "is_member",
    "min_generators",
    "normal_form",
    "order_from_tag",
    "parse_poly",
    "quotient",
    "s_polynomial",
    "set_budget",
]

__version__ = "0.1.0"
