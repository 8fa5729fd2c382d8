"""Kauffman bracket skein algebra of the one-holed torus."""

from ._skeintorus import (
    BudgetExceeded,
    CacheError,
    Element,
    Engine,
    ParseError,
    T,
    discrepancy,
    opp,
    oracle_product,
    parse,
    rev,
    tw,
)

__all__ = [
    "BudgetExceeded",
    "CacheError",
    "Element",
    "Engine",
    "ParseError",
    "T",
    "discrepancy",
    "opp",
    "oracle_product",
    "parse",
    "rev",
    "tw",
]
