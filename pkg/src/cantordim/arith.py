"""Operator algebra on fractal dimensions of a shared n-adic family.

Every binary operator is defined twice over: by a gamma-space construction
on the scale factors and by the closed D-space formula it induces,

    add:  gamma_C = gamma_A * gamma_B      D_C = D_A*D_B / (D_A + D_B)
    sub:  gamma_C = gamma_A / gamma_B      D_C = D_A*D_B / (D_B - D_A)
    mul:  gamma_C = gamma_A ** (1/D_B)     D_C = D_A * D_B
    div:  gamma_C = gamma_A ** D_B         D_C = D_A / D_B

and :func:`check_gamma_consistency` recomputes a result along both routes.
The returned dimension is N-independent; the shared arity only materializes
gamma_C for the result.

Validity domains (checked with exact float comparisons, failing closed):
sub requires d_a < d_b/(1+d_b), the D-space image of gamma_A < gamma_B/N;
div requires 0 < d_a <= d_b (equality is admitted and returns the unit
segment). The void set (d = 0) is absorbing for add, sub and mul.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    check_arity,
    check_dimension,
    check_index,
    dimension_from_scale,
    scale_from_dimension,
)
from .errors import DomainError, OpDomainError

__all__ = [
    "OpResult",
    "add",
    "sub",
    "mul",
    "div",
    "int_pow",
    "d_dimension_d_scale",
    "check_gamma_consistency",
    "OPERATORS",
]


@dataclass(frozen=True)
class OpResult:
    """Result dimension plus its realization in the shared n-adic family.

    ``gamma`` is the scale factor of the result for the arity the operator
    was evaluated under; ``underflow`` marks gamma values below the smallest
    positive binary64 (reported as 0.0 while d stays exact).
    """

    d: float
    gamma: float
    underflow: bool = False


def _materialize(n: int, d: float) -> OpResult:
    gamma, underflow = scale_from_dimension(n, d)
    return OpResult(d, gamma, underflow)


def add(d_a: float, d_b: float, n: int) -> OpResult:
    """Harmonic-style sum: 1/D_C = 1/D_A + 1/D_B (gamma_C = gamma_A*gamma_B).

    Total on [0,1]^2; the void set absorbs (0 + anything = 0, including 0+0).
    """
    check_arity(n)
    d_a = check_dimension(d_a)
    d_b = check_dimension(d_b)
    if d_a == 0.0 or d_b == 0.0:
        return OpResult(0.0, 0.0)
    return _materialize(n, d_a * d_b / (d_a + d_b))


def sub(d_a: float, d_b: float, n: int) -> OpResult:
    """Inverse of add: 1/D_C = 1/D_A - 1/D_B (gamma_C = gamma_A/gamma_B).

    Consistent only for d_a < d_b/(1+d_b) (equivalently gamma_A < gamma_B/N,
    keeping gamma_C a proper scale factor); the void set absorbs on either
    side before the predicate applies.
    """
    check_arity(n)
    d_a = check_dimension(d_a)
    d_b = check_dimension(d_b)
    if d_a == 0.0 or d_b == 0.0:
        return OpResult(0.0, 0.0)
    if not d_a < d_b / (1.0 + d_b):
        raise OpDomainError(
            "sub",
            (d_a, d_b),
            "sub_requires_da_lt_db_over_1p_db",
            "subtraction requires D_A < D_B/(1+D_B)",
        )
    return _materialize(n, d_a * d_b / (d_b - d_a))


def mul(d_a: float, d_b: float, n: int) -> OpResult:
    """Product of dimensions (gamma_C = gamma_A**(1/D_B)).

    Total on [0,1]^2; the unit segment is the identity, the void set absorbs.
    """
    check_arity(n)
    d_a = check_dimension(d_a)
    d_b = check_dimension(d_b)
    if d_a == 0.0 or d_b == 0.0:
        return OpResult(0.0, 0.0)
    return _materialize(n, d_a * d_b)


def div(d_a: float, d_b: float, n: int) -> OpResult:
    """Quotient of dimensions (gamma_C = gamma_A**D_B).

    Requires 0 < d_a <= d_b; d_a = d_b returns the unit segment. Zero
    operands are rejected: D_A/0 has no gamma-space meaning and 0/D_B is
    excluded with it by the 0 < d_a precondition.
    """
    check_arity(n)
    d_a = check_dimension(d_a)
    d_b = check_dimension(d_b)
    if d_a == 0.0 or d_b == 0.0:
        raise OpDomainError(
            "div",
            (d_a, d_b),
            "div_requires_nonzero_operands",
            "division requires D_A > 0 and D_B > 0",
        )
    if d_a > d_b:
        raise OpDomainError(
            "div",
            (d_a, d_b),
            "div_requires_da_le_db",
            "division requires D_A <= D_B (the quotient may not exceed 1)",
        )
    return _materialize(n, d_a / d_b)


def int_pow(d_a: float, k: int, n: int) -> OpResult:
    """k-th power of a dimension, k >= 0 (gamma_C = gamma_A**(1/D_A**(k-1))).

    k = 0 returns the unit segment, except for the void set whose zeroth
    power is rejected (its gamma-space definition is meaningless).
    """
    check_arity(n)
    d_a = check_dimension(d_a)
    k = check_index(k, "power exponent")
    if k < 0:
        raise DomainError(f"power exponent must be >= 0, got {k}")
    if k == 0:
        if d_a == 0.0:
            raise OpDomainError(
                "pow",
                (d_a, 0),
                "pow_zero_of_void_undefined",
                "the zeroth power of the void set is undefined",
            )
        return OpResult(1.0, 1.0 / n)
    if k == 1:
        return _materialize(n, d_a)
    if d_a == 0.0:
        return OpResult(0.0, 0.0)
    return _materialize(n, d_a**k)


def d_dimension_d_scale(n: int, gamma: float) -> float:
    """Derivative dD/dgamma = ln(n) / (gamma * ln^2(gamma)) on 0 < gamma < 1/n.

    Strictly positive: the dimension grows with the scale factor. Boundaries
    are excluded (the closed form blows up at 0 and the domain ends at 1/n).
    """
    check_arity(n)
    gamma = float(gamma)
    if math.isnan(gamma) or not 0.0 < gamma < 1.0 / n:
        raise DomainError(f"derivative requires 0 < gamma < 1/{n}, got {gamma!r}")
    lg = math.log(gamma)
    return math.log(n) / (gamma * lg * lg)


# gamma-space constructions keyed by operator tag; mul's 1/D_B exponent is
# taken to its gamma_A**inf = 0 limit at the absorbing D_B = 0
_GAMMA_RULE = {
    "add": lambda ga, gb, b: ga * gb,
    "sub": lambda ga, gb, b: ga / gb,
    "mul": lambda ga, gb, b: ga ** (1.0 / b) if b > 0.0 else 0.0,
    "div": lambda ga, gb, b: ga**b,
}

OPERATORS = {"add": add, "sub": sub, "mul": mul, "div": div}


def check_gamma_consistency(op_tag: str, d_a: float, d_b: float, n: int) -> float:
    """Absolute discrepancy between the D-route and the gamma-route of an operator.

    The gamma route materializes literal scale factors for both operands,
    applies the operator's gamma-space construction as plain float
    arithmetic, and reads the resulting dimension back; no log-space
    shortcut is taken, so the two routes share no intermediate values.
    """
    if op_tag not in OPERATORS:
        raise DomainError(f"unknown operator tag {op_tag!r}")
    d_formula = OPERATORS[op_tag](d_a, d_b, n).d

    ga, ga_under = scale_from_dimension(n, d_a)
    gb, gb_under = scale_from_dimension(n, d_b)
    if ga_under or gb_under:
        raise DomainError("operand gamma underflows binary64; gamma route unavailable")
    if op_tag == "sub" and gb == 0.0:
        raise DomainError("gamma route undefined for a void subtrahend (gamma_A/0)")
    gc = _GAMMA_RULE[op_tag](ga, gb, d_b)
    if gc == 0.0:
        if d_formula > 0.0:
            raise DomainError("result gamma underflows binary64; gamma route unavailable")
        d_gamma = 0.0
    else:
        # pow/divide can overshoot the 1/n bound by one ulp at the U boundary
        d_gamma = dimension_from_scale(n, min(gc, 1.0 / n))
    return abs(d_formula - d_gamma)
