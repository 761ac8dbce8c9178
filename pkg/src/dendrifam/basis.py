"""Shared basis machinery: the leaf tree, decoration alphabets, spans.

A span (:class:`LinComb`) is a finite formal rational-linear combination
of basis trees, kept normalized: no zero coefficients, no duplicate
trees, terms sorted by the canonical tree order of the ambient algebra.
The bare leaf is representable as a tree but is never a span term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Tuple

from .errors import InvalidElement, LeafOperand


class Leaf:
    """The unique tree with a single leaf, written ``|``; not a basis element."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Leaf"


LEAF = Leaf()


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of decoration symbols; declaration order is canonical."""

    symbols: Tuple[str, ...]

    def __init__(self, symbols: Iterable[str]):
        symbols = tuple(symbols)
        if not symbols:
            raise InvalidElement("alphabet must be nonempty")
        if len(set(symbols)) != len(symbols):
            raise InvalidElement("alphabet symbols must be distinct")
        object.__setattr__(self, "symbols", symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __contains__(self, x):
        return x in self.symbols

    def index(self, x: str) -> int:
        try:
            return self.symbols.index(x)
        except ValueError:
            raise InvalidElement(f"{x!r} is not a declared decoration symbol")


@dataclass(frozen=True)
class LinComb:
    """Normalized linear combination: ordered (coefficient, tree) pairs."""

    terms: Tuple[Tuple[Fraction, Any], ...] = ()

    def is_zero(self) -> bool:
        return not self.terms

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        raise TypeError("spans are added through their algebra, which owns the term order")

    def trees(self):
        return [t for _, t in self.terms]

    def scaled(self, c: Fraction) -> "LinComb":
        c = Fraction(c)
        if c == 0:
            return ZERO_SPAN
        return LinComb(tuple((c * coeff, tree) for coeff, tree in self.terms))


ZERO_SPAN = LinComb()


def span_single(tree, coeff: Fraction = Fraction(1)) -> LinComb:
    if tree is LEAF:
        raise LeafOperand("the leaf | is not a basis element of the free algebra")
    if coeff == 0:
        return ZERO_SPAN
    return LinComb(((Fraction(coeff), tree),))


def normalize(pairs: Iterable[Tuple[Fraction, Any]], key: Callable[[Any], tuple]) -> LinComb:
    """Merge duplicate trees, drop zeros, sort by the canonical order."""
    acc: dict = {}
    for coeff, tree in pairs:
        if tree is LEAF:
            raise LeafOperand("the leaf | is not a basis element of the free algebra")
        acc[tree] = acc.get(tree, Fraction(0)) + coeff
    items = [(c, t) for t, c in acc.items() if c != 0]
    items.sort(key=lambda item: key(item[1]))
    return LinComb(tuple(items))


def span_sum(spans: Iterable[LinComb], key: Callable[[Any], tuple]) -> LinComb:
    pairs = []
    for span in spans:
        pairs.extend(span.terms)
    return normalize(pairs, key)
