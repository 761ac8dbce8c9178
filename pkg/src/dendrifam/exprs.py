"""Expression trees over generators and the family operations.

Used to express a basis tree in terms of the single-vertex generators
and to evaluate that expression in any target algebra through its
operations object (the basis of universal-morphism evaluation).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

Expr = Union["Gen", "Prec", "Succ", "Dot"]


@dataclass(frozen=True)
class Gen:
    symbol: str


@dataclass(frozen=True)
class Prec:
    omega: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Succ:
    omega: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Dot:
    left: Expr
    right: Expr


def evaluate(expr: Expr, ops, gen: Callable[[str], object]):
    """Evaluate an expression with ``gen`` supplying generator images."""
    if isinstance(expr, Gen):
        return gen(expr.symbol)
    if isinstance(expr, Prec):
        return ops.prec(evaluate(expr.left, ops, gen), evaluate(expr.right, ops, gen),
                        expr.omega)
    if isinstance(expr, Succ):
        return ops.succ(evaluate(expr.left, ops, gen), evaluate(expr.right, ops, gen),
                        expr.omega)
    if isinstance(expr, Dot):
        return ops.dot(evaluate(expr.left, ops, gen), evaluate(expr.right, ops, gen))
    raise TypeError(f"not an expression: {expr!r}")
