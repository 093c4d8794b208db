"""Lyndon words and irreducible polynomials over prime fields."""

from ._irrenum import (
    ConsistencyError,
    ContractViolation,
    DegreeCollapse,
    IrreduciblePolynomials,
    LyndonWords,
    SearchFailed,
    ValidationError,
    compress,
    count_lyndon,
    decompress,
    duval_next,
    is_irreducible,
    is_lyndon,
    is_lyndon_naive,
    next_lyndon,
    verify,
)

__all__ = [
    "ConsistencyError",
    "ContractViolation",
    "DegreeCollapse",
    "IrreduciblePolynomials",
    "LyndonWords",
    "SearchFailed",
    "ValidationError",
    "compress",
    "count_lyndon",
    "decompress",
    "duval_next",
    "is_irreducible",
    "is_lyndon",
    "is_lyndon_naive",
    "lyndon_words",
    "next_lyndon",
    "verify",
]


def lyndon_words(n, q):
    """All Lyndon words of length n over q symbols, as lists of ints."""
    return list(LyndonWords(n, q))
