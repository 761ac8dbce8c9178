"""Exact rational scalars: the base ring of every linear combination.

Coefficients are arbitrary-precision rationals kept in canonical form
(gcd(|p|, q) = 1, q >= 1, zero is 0/1), which `fractions.Fraction`
guarantees.  The textual form is `p/q` with the denominator omitted
when it equals 1, e.g. `3`, `-2/5`.
"""

from __future__ import annotations

import re
from fractions import Fraction

Coefficient = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"-?\d+(/\d+)?\Z")


def add(a: Fraction, b: Fraction) -> Fraction:
    return a + b


def mul(a: Fraction, b: Fraction) -> Fraction:
    return a * b


def parse_coefficient(text: str) -> Fraction:
    """Parse `p/q` or `p`; raises ValueError on anything else (incl. q = 0)."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in text:
        p, q = text.split("/")
        if int(q) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(int(p), int(q))
    return Fraction(int(text))


def format_coefficient(c: Fraction) -> str:
    return str(c)
