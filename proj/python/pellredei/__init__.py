"""Exact Pell equation solutions via continued fractions, hyperbola powers
and Redei rational functions.

Integers are Python ints, rationals are ``fractions.Fraction`` and the point
at infinity of the projective line is ``math.inf``.
"""

from ._core import (
    ConsistencyError,
    DomainError,
    PerfectSquareError,
    UnsupportedError,
    bench,
    convergents,
    correspondence_check,
    dickson,
    eps,
    h_mul,
    h_pow,
    h_pow_redei,
    is_perfect_square,
    isqrt,
    minimal_solution,
    nth_solution,
    odot,
    odot_pow,
    quad_mul,
    quad_norm,
    redei_pair,
    redei_q,
    solutions,
    sqrt_cf,
    tau,
)

__all__ = [
    "ConsistencyError",
    "DomainError",
    "PerfectSquareError",
    "UnsupportedError",
    "bench",
    "convergents",
    "correspondence_check",
    "dickson",
    "eps",
    "h_mul",
    "h_pow",
    "h_pow_redei",
    "is_perfect_square",
    "isqrt",
    "minimal_solution",
    "nth_solution",
    "odot",
    "odot_pow",
    "quad_mul",
    "quad_norm",
    "redei_pair",
    "redei_q",
    "solutions",
    "sqrt_cf",
    "tau",
]
