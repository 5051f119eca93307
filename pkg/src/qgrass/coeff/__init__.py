"""Exact coefficient arithmetic: Z[q, q^-1], Q(q) and linear solving."""

from .laurent import (
    ONE,
    Q,
    ZERO,
    LaurentPoly,
    format_laurent,
    laurent_gcd,
    neg_q_pow,
    parse_laurent,
    q_pow,
)
from .linalg import Echelon, NonUnique, NoSolution, SolveError, rf_solve
from .ratfunc import RationalFunction


def lp_arith(a, b, op):
    """Dispatch helper: op is one of 'add', 'mul', 'neg' (neg ignores b)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown op {op!r}")


__all__ = [
    "ONE", "Q", "ZERO", "LaurentPoly", "RationalFunction", "Echelon",
    "NoSolution", "NonUnique", "SolveError", "format_laurent", "laurent_gcd",
    "lp_arith", "neg_q_pow", "parse_laurent", "q_pow", "rf_solve",
]
