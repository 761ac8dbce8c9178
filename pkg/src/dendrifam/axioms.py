"""Axiom residuals, generic over any operations object.

An operations object supplies ``add``, ``scale``, ``zero`` and the
products (``prec``/``succ`` indexed by a semigroup token, plus ``dot``
for the tridendriform case; classical variants take no index).  Each
residual is left-hand side minus right-hand side, so an axiom holds on
an instance exactly when the residual equals ``zero()``.
"""

from __future__ import annotations

from fractions import Fraction

_MINUS_ONE = Fraction(-1)


def _sub(ops, a, b):
    return ops.add(a, ops.scale(_MINUS_ONE, b))


def dendriform_family_hold(ops, x, y, z, alpha, beta, alphabeta) -> bool:
    """Equality form of the three axioms; cheaper than building residuals."""
    if ops.prec(ops.prec(x, y, alpha), z, beta) != \
            ops.prec(x, ops.add(ops.prec(y, z, beta), ops.succ(y, z, alpha)), alphabeta):
        return False
    if ops.prec(ops.succ(x, y, alpha), z, beta) != ops.succ(x, ops.prec(y, z, beta), alpha):
        return False
    return ops.succ(ops.add(ops.prec(x, y, beta), ops.succ(x, y, alpha)), z, alphabeta) == \
        ops.succ(x, ops.succ(y, z, beta), alpha)


def tridendriform_family_hold(ops, x, y, z, alpha, beta, alphabeta) -> bool:
    """Equality form of the seven axioms."""
    if ops.prec(ops.prec(x, y, alpha), z, beta) != \
            ops.prec(x, ops.add(ops.add(ops.prec(y, z, beta), ops.succ(y, z, alpha)),
                                ops.dot(y, z)), alphabeta):
        return False
    if ops.prec(ops.succ(x, y, alpha), z, beta) != ops.succ(x, ops.prec(y, z, beta), alpha):
        return False
    if ops.succ(ops.add(ops.add(ops.prec(x, y, beta), ops.succ(x, y, alpha)),
                        ops.dot(x, y)), z, alphabeta) != \
            ops.succ(x, ops.succ(y, z, beta), alpha):
        return False
    if ops.dot(ops.succ(x, y, alpha), z) != ops.succ(x, ops.dot(y, z), alpha):
        return False
    if ops.dot(ops.prec(x, y, alpha), z) != ops.dot(x, ops.succ(y, z, alpha)):
        return False
    if ops.prec(ops.dot(x, y), z, alpha) != ops.dot(x, ops.prec(y, z, alpha)):
        return False
    return ops.dot(ops.dot(x, y), z) == ops.dot(x, ops.dot(y, z))


def dendriform_family_residuals(ops, x, y, z, alpha, beta, alphabeta):
    """Residuals of the three dendriform family axioms at (x, y, z, alpha, beta)."""
    r1 = _sub(ops,
              ops.prec(ops.prec(x, y, alpha), z, beta),
              ops.prec(x, ops.add(ops.prec(y, z, beta), ops.succ(y, z, alpha)), alphabeta))
    r2 = _sub(ops,
              ops.prec(ops.succ(x, y, alpha), z, beta),
              ops.succ(x, ops.prec(y, z, beta), alpha))
    r3 = _sub(ops,
              ops.succ(ops.add(ops.prec(x, y, beta), ops.succ(x, y, alpha)), z, alphabeta),
              ops.succ(x, ops.succ(y, z, beta), alpha))
    return r1, r2, r3


def tridendriform_family_residuals(ops, x, y, z, alpha, beta, alphabeta):
    """Residuals of the seven tridendriform family axioms."""
    r1 = _sub(ops,
              ops.prec(ops.prec(x, y, alpha), z, beta),
              ops.prec(x, ops.add(ops.add(ops.prec(y, z, beta), ops.succ(y, z, alpha)),
                                  ops.dot(y, z)), alphabeta))
    r2 = _sub(ops,
              ops.prec(ops.succ(x, y, alpha), z, beta),
              ops.succ(x, ops.prec(y, z, beta), alpha))
    r3 = _sub(ops,
              ops.succ(ops.add(ops.add(ops.prec(x, y, beta), ops.succ(x, y, alpha)),
                               ops.dot(x, y)), z, alphabeta),
              ops.succ(x, ops.succ(y, z, beta), alpha))
    r4 = _sub(ops, ops.dot(ops.succ(x, y, alpha), z), ops.succ(x, ops.dot(y, z), alpha))
    r5 = _sub(ops, ops.dot(ops.prec(x, y, alpha), z), ops.dot(x, ops.succ(y, z, alpha)))
    r6 = _sub(ops, ops.prec(ops.dot(x, y), z, alpha), ops.dot(x, ops.prec(y, z, alpha)))
    r7 = _sub(ops, ops.dot(ops.dot(x, y), z), ops.dot(x, ops.dot(y, z)))
    return r1, r2, r3, r4, r5, r6, r7


def classical_dendriform_residuals(ops, x, y, z):
    """Residuals of the three classical dendriform axioms (no family index)."""
    r1 = _sub(ops,
              ops.prec(ops.prec(x, y), z),
              ops.prec(x, ops.add(ops.prec(y, z), ops.succ(y, z))))
    r2 = _sub(ops, ops.prec(ops.succ(x, y), z), ops.succ(x, ops.prec(y, z)))
    r3 = _sub(ops,
              ops.succ(ops.add(ops.prec(x, y), ops.succ(x, y)), z),
              ops.succ(x, ops.succ(y, z)))
    return r1, r2, r3


def classical_tridendriform_residuals(ops, x, y, z):
    """Residuals of the seven classical tridendriform axioms."""
    star_xy = ops.add(ops.add(ops.prec(x, y), ops.succ(x, y)), ops.dot(x, y))
    star_yz = ops.add(ops.add(ops.prec(y, z), ops.succ(y, z)), ops.dot(y, z))
    r1 = _sub(ops, ops.prec(ops.prec(x, y), z), ops.prec(x, star_yz))
    r2 = _sub(ops, ops.prec(ops.succ(x, y), z), ops.succ(x, ops.prec(y, z)))
    r3 = _sub(ops, ops.succ(star_xy, z), ops.succ(x, ops.succ(y, z)))
    r4 = _sub(ops, ops.dot(ops.succ(x, y), z), ops.succ(x, ops.dot(y, z)))
    r5 = _sub(ops, ops.dot(ops.prec(x, y), z), ops.dot(x, ops.succ(y, z)))
    r6 = _sub(ops, ops.prec(ops.dot(x, y), z), ops.dot(x, ops.prec(y, z)))
    r7 = _sub(ops, ops.dot(ops.dot(x, y), z), ops.dot(x, ops.dot(y, z)))
    return r1, r2, r3, r4, r5, r6, r7
