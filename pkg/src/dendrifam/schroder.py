"""Typed valently decorated Schröder trees, the basis of the free
tridendriform family algebra.

An internal vertex of arity k+1 carries k decoration symbols and k+1
typed edges to its children, ordered left to right.  Edge typing obeys
the same invariant as for binary trees: identity type iff leaf child.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Tuple, Union

from .basis import LEAF, Alphabet, Leaf
from .errors import ArityMismatch, InfiniteSemigroup, TypingViolation
from .pbtrees import graft_binary
from .semigroups import IDENTITY, ExtElem, Semigroup

SchTree = Union[Leaf, "SchNode"]


@dataclass(frozen=True, eq=False)
class SchNode:
    """Internal vertex: k decorations and k+1 (edge type, child) pairs, k >= 1."""

    decs: Tuple[str, ...]
    children: Tuple[Tuple[ExtElem, SchTree], ...]

    def __post_init__(self):
        if len(self.decs) < 1:
            raise ArityMismatch("a vertex needs at least one decoration")
        if len(self.children) != len(self.decs) + 1:
            raise ArityMismatch(
                f"{len(self.decs)} decorations require {len(self.decs) + 1} children, "
                f"got {len(self.children)}")
        for etype, child in self.children:
            if etype.is_identity != (child is LEAF):
                raise TypingViolation(
                    f"edge {etype} inconsistent with child {child!r}")
        object.__setattr__(self, "_hash", hash((self.decs, self.children)))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, SchNode):
            return NotImplemented
        return (self._hash == other._hash
                and self.decs == other.decs
                and self.children == other.children)

    @property
    def arity(self) -> int:
        return len(self.children)


_INTERNED: dict = {}


def intern_node(decs: Tuple[str, ...], children: Tuple[Tuple[ExtElem, SchTree], ...]) -> SchNode:
    """Construct a vertex, sharing structurally equal trees."""
    key = (decs, children)
    node = _INTERNED.get(key)
    if node is None:
        node = SchNode(decs, children)
        _INTERNED[key] = node
    return node


def graft_nary(children: Sequence[SchTree], decs: Sequence[str],
               types: Sequence[ExtElem]) -> SchNode:
    """Join k+1 trees under a fresh vertex decorated by k symbols."""
    children = tuple(children)
    types = tuple(types)
    if len(children) != len(types):
        raise ArityMismatch(f"{len(children)} children but {len(types)} edge types")
    return intern_node(tuple(decs), tuple(zip(types, children)))


def single_vertex(dec: str) -> SchNode:
    return intern_node((dec,), ((IDENTITY, LEAF), (IDENTITY, LEAF)))


def corolla(decs: Sequence[str]) -> SchNode:
    decs = tuple(decs)
    return intern_node(decs, tuple((IDENTITY, LEAF) for _ in range(len(decs) + 1)))


def decompose_nary(t: SchNode):
    """Inverse of grafting: (children, decorations, edge types)."""
    return (tuple(child for _, child in t.children), t.decs,
            tuple(etype for etype, _ in t.children))


def breadth(t: SchNode) -> int:
    """Arity of the vertex adjacent to the root."""
    return t.arity


@lru_cache(maxsize=None)
def leaves(t: SchTree) -> int:
    if t is LEAF:
        return 1
    return sum(leaves(child) for _, child in t.children)


@lru_cache(maxsize=None)
def depth(t: SchTree) -> int:
    if t is LEAF:
        return 0
    return 1 + max(depth(child) for _, child in t.children)


def decoration_count(t: SchTree) -> int:
    if t is LEAF:
        return 0
    return len(t.decs) + sum(decoration_count(child) for _, child in t.children)


def tree_key(t: SchTree, alphabet: Alphabet, semigroup: Semigroup):
    """Canonical order: leaf count, breadth, decorations, edge types, children."""
    if t is LEAF:
        return (1,)
    return (
        leaves(t),
        t.arity,
        tuple(alphabet.index(x) for x in t.decs),
        tuple(semigroup.ext_key(etype) for etype, _ in t.children),
        tuple(tree_key(child, alphabet, semigroup) for _, child in t.children),
    )


def enumerate_sch(n: int, alphabet: Alphabet, semigroup: Semigroup,
                  max_word: Optional[int] = None) -> list[SchNode]:
    """All basis trees with n+1 leaves, each exactly once, canonically ordered."""
    if n < 1:
        raise ValueError("basis trees need at least two leaves")
    if not semigroup.is_finite and max_word is None:
        raise InfiniteSemigroup("cannot enumerate trees over an infinite semigroup")
    omega = [ExtElem(a) for a in semigroup.elements(max_word)]
    symbols = list(alphabet)
    memo: dict[int, list[SchTree]] = {0: [LEAF]}

    def compositions(total: int, parts: int):
        if parts == 1:
            yield (total,)
            return
        for head in range(total + 1):
            for rest in compositions(total - head, parts - 1):
                yield (head,) + rest

    def dec_tuples(k: int):
        if k == 0:
            yield ()
            return
        for rest in dec_tuples(k - 1):
            for x in symbols:
                yield rest + (x,)

    def build(size: int) -> list[SchTree]:
        if size in memo:
            return memo[size]
        out = []
        for k in range(1, size + 1):
            for split in compositions(size - k, k + 1):
                child_lists = [build(part) for part in split]
                def attach(i, acc):
                    if i == k + 1:
                        for decs in dec_tuples(k):
                            out.append(intern_node(tuple(decs), tuple(acc)))
                        return
                    for child in child_lists[i]:
                        types = [IDENTITY] if child is LEAF else omega
                        for etype in types:
                            attach(i + 1, acc + [(etype, child)])
                attach(0, [])
        memo[size] = out
        return out

    trees = build(n)
    trees.sort(key=lambda t: tree_key(t, alphabet, semigroup))
    return trees


def from_binary(t) -> SchTree:
    """Embed a planar binary tree as the Schröder tree with all vertices binary."""
    if t is LEAF:
        return LEAF
    return intern_node((t.dec,), ((t.left_type, from_binary(t.left)),
                                  (t.right_type, from_binary(t.right))))


def to_binary(t: SchTree):
    """Inverse of the embedding; requires every vertex to be binary."""
    if t is LEAF:
        return LEAF
    if t.arity != 2:
        raise ArityMismatch(f"vertex of arity {t.arity} has no binary counterpart")
    (a1, left), (a2, right) = t.children
    return graft_binary(to_binary(left), t.decs[0], a1, a2, to_binary(right))
