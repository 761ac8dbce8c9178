"""Bit-exact parser and printer for the term grammar.

Trees:        ``|``, ``B[x;a:L,b:R]``, ``S[x1,...,xk;a0:T0,...,ak:Tk]``
Spans:        ``c1*T1 + c2*T2 + ...`` with rational coefficients, or ``0``
Expressions:  ``gen(x)``, ``prec[w](E1,E2)``, ``succ[w](E1,E2)``, ``dot(E1,E2)``

Whitespace between tokens is ignored.  Decoration symbols and semigroup
tokens must be declared up front; anything undeclared is a parse error.
The edge token ``1`` denotes the adjoined identity exactly when the
child below it is a leaf (forced by the typing invariant), so a
semigroup containing an element literally named ``1`` stays parseable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .basis import LEAF, Alphabet, LinComb, normalize, span_single
from .errors import TermSyntaxError
from .exprs import Dot, Expr, Gen, Prec, Succ
from .pbtrees import BinNode, BinTree
from .pbtrees import tree_key as bin_key
from .schroder import SchNode, SchTree
from .schroder import tree_key as sch_key
from .semigroups import ExtElem, IDENTITY, Semigroup

_SYMBOL_CHARS = set("[];:,*+/()|-")


def _tokenize(text: str):
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch in _SYMBOL_CHARS:
            tokens.append(("sym", ch, line, col))
            col += 1
            i += 1
            continue
        if ch.isalnum() or ch == "_":
            start = i
            while i < len(text) and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(("word", text[start:i], line, col))
            col += i - start
            continue
        raise TermSyntaxError(f"unexpected character {ch!r}", line, col)
    tokens.append(("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet, semigroup: Semigroup):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.alphabet = alphabet
        self.semigroup = semigroup

    # -- token plumbing ------------------------------------------------

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message):
        _, value, line, col = self.peek()
        raise TermSyntaxError(f"{message}, found {value!r}" if value else message,
                              line, col)

    def expect_sym(self, symbol):
        kind, value, _, _ = self.peek()
        if kind != "sym" or value != symbol:
            self.fail(f"expected {symbol!r}")
        return self.advance()

    def expect_word(self, what="token"):
        kind, value, _, _ = self.peek()
        if kind != "word":
            self.fail(f"expected {what}")
        return self.advance()[1]

    def at_sym(self, symbol):
        kind, value, _, _ = self.peek()
        return kind == "sym" and value == symbol

    def expect_end(self):
        if self.peek()[0] != "end":
            self.fail("unexpected trailing input")

    # -- pieces ----------------------------------------------------------

    def decoration(self) -> str:
        _, value, line, col = self.peek()
        word = self.expect_word("decoration symbol")
        if word not in self.alphabet:
            raise TermSyntaxError(f"undeclared decoration symbol {word!r}", line, col)
        return word

    def edge_token(self) -> str:
        _, value, line, col = self.peek()
        word = self.expect_word("edge type")
        if word != "1" and not self.semigroup.contains(word):
            raise TermSyntaxError(f"undeclared semigroup element {word!r}", line, col)
        return word

    def resolve_edge(self, token: str, child) -> ExtElem:
        # `1` is the adjoined identity on a leaf edge; on an internal edge it
        # can only be the semigroup element of that name (the constructor
        # rejects the identity there anyway).
        if child is LEAF:
            if token == "1":
                return IDENTITY
            return ExtElem(token)
        if self.semigroup.contains(token):
            return ExtElem(token)
        return IDENTITY

    def rational(self) -> Fraction:
        negative = False
        if self.at_sym("-"):
            self.advance()
            negative = True
        _, value, line, col = self.peek()
        word = self.expect_word("rational")
        if not word.isdigit():
            raise TermSyntaxError(f"expected integer digits, found {word!r}", line, col)
        numerator = -int(word) if negative else int(word)
        if self.at_sym("/"):
            self.advance()
            _, value, line, col = self.peek()
            den = self.expect_word("denominator")
            if not den.isdigit() or int(den) == 0:
                raise TermSyntaxError(f"bad denominator {den!r}", line, col)
            return Fraction(numerator, int(den))
        return Fraction(numerator)

    # -- trees -------------------------------------------------------------

    def bin_tree(self) -> BinTree:
        if self.at_sym("|"):
            self.advance()
            return LEAF
        kind, value, line, col = self.peek()
        if kind == "word" and value == "B":
            self.advance()
            self.expect_sym("[")
            dec = self.decoration()
            self.expect_sym(";")
            left_token = self.edge_token()
            self.expect_sym(":")
            left = self.bin_tree()
            self.expect_sym(",")
            right_token = self.edge_token()
            self.expect_sym(":")
            right = self.bin_tree()
            self.expect_sym("]")
            return BinNode(dec, self.resolve_edge(left_token, left), left,
                           self.resolve_edge(right_token, right), right)
        self.fail("expected a binary tree ('|' or 'B[...]')")

    def sch_tree(self) -> SchTree:
        if self.at_sym("|"):
            self.advance()
            return LEAF
        kind, value, line, col = self.peek()
        if kind == "word" and value == "S":
            self.advance()
            self.expect_sym("[")
            decs = [self.decoration()]
            while self.at_sym(","):
                self.advance()
                decs.append(self.decoration())
            self.expect_sym(";")
            children = []
            token = self.edge_token()
            self.expect_sym(":")
            child = self.sch_tree()
            children.append((self.resolve_edge(token, child), child))
            while self.at_sym(","):
                self.advance()
                token = self.edge_token()
                self.expect_sym(":")
                child = self.sch_tree()
                children.append((self.resolve_edge(token, child), child))
            self.expect_sym("]")
            return SchNode(tuple(decs), tuple(children))
        self.fail("expected a Schröder tree ('|' or 'S[...]')")

    def tree(self, kind: str):
        return self.bin_tree() if kind == "binary" else self.sch_tree()

    # -- spans ---------------------------------------------------------------

    def span(self, kind: str) -> LinComb:
        k, value, _, _ = self.peek()
        if k == "word" and value == "0" and self.tokens[self.pos + 1][0] == "end":
            self.advance()
            return LinComb()
        pairs = [self.span_term(kind)]
        while self.at_sym("+"):
            self.advance()
            pairs.append(self.span_term(kind))
        key = self._key(kind)
        return normalize(pairs, key)

    def span_term(self, kind: str):
        coeff = self.rational()
        self.expect_sym("*")
        t = self.tree(kind)
        if t is LEAF:
            self.fail("the leaf '|' cannot appear in a span")
        return (coeff, t)

    def _key(self, kind: str):
        if kind == "binary":
            return lambda t: bin_key(t, self.alphabet, self.semigroup)
        return lambda t: sch_key(t, self.alphabet, self.semigroup)

    # -- expressions ------------------------------------------------------------

    def expr(self) -> Expr:
        _, value, line, col = self.peek()
        head = self.expect_word("expression head")
        if head == "gen":
            self.expect_sym("(")
            symbol = self.decoration()
            self.expect_sym(")")
            return Gen(symbol)
        if head in ("prec", "succ"):
            self.expect_sym("[")
            _, _, oline, ocol = self.peek()
            omega = self.expect_word("family index")
            if not self.semigroup.contains(omega):
                raise TermSyntaxError(
                    f"undeclared semigroup element {omega!r}", oline, ocol)
            self.expect_sym("]")
            self.expect_sym("(")
            left = self.expr()
            self.expect_sym(",")
            right = self.expr()
            self.expect_sym(")")
            cls = Prec if head == "prec" else Succ
            return cls(omega, left, right)
        if head == "dot":
            self.expect_sym("(")
            left = self.expr()
            self.expect_sym(",")
            right = self.expr()
            self.expect_sym(")")
            return Dot(left, right)
        raise TermSyntaxError(f"unknown expression head {head!r}", line, col)


# -- public parse functions -----------------------------------------------

def parse_tree(text: str, kind: str, alphabet: Alphabet, semigroup: Semigroup):
    parser = _Parser(text, alphabet, semigroup)
    t = parser.tree(kind)
    parser.expect_end()
    return t


def parse_span(text: str, kind: str, alphabet: Alphabet, semigroup: Semigroup) -> LinComb:
    parser = _Parser(text, alphabet, semigroup)
    s = parser.span(kind)
    parser.expect_end()
    return s


def parse_expr(text: str, alphabet: Alphabet, semigroup: Semigroup) -> Expr:
    parser = _Parser(text, alphabet, semigroup)
    e = parser.expr()
    parser.expect_end()
    return e


def parse_operand(text: str, kind: str, alphabet: Alphabet, semigroup: Semigroup):
    """A product operand: a single tree (possibly the leaf) or a span."""
    parser = _Parser(text, alphabet, semigroup)
    k, value, _, _ = parser.peek()
    if (k == "sym" and value == "|") or (k == "word" and value in ("B", "S")):
        t = parser.tree(kind)
        parser.expect_end()
        return t if t is LEAF else span_single(t)
    s = parser.span(kind)
    parser.expect_end()
    return s


def parse_corpus(text: str, kind: str, alphabet: Alphabet, semigroup: Semigroup):
    """Corpus wire format: one term (tree or span) per line, ``#`` comments."""
    terms = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        terms.append(parse_operand(line, kind, alphabet, semigroup))
    return terms


# -- printers -------------------------------------------------------------

def print_tree(t: Union[BinTree, SchTree]) -> str:
    if t is LEAF:
        return "|"
    if isinstance(t, BinNode):
        return (f"B[{t.dec};{t.left_type}:{print_tree(t.left)},"
                f"{t.right_type}:{print_tree(t.right)}]")
    if isinstance(t, SchNode):
        decs = ",".join(t.decs)
        children = ",".join(f"{etype}:{print_tree(child)}"
                            for etype, child in t.children)
        return f"S[{decs};{children}]"
    raise TypeError(f"not a tree: {t!r}")


def print_span(s: LinComb) -> str:
    if s.is_zero():
        return "0"
    return " + ".join(f"{coeff}*{print_tree(tree)}" for coeff, tree in s.terms)


def print_expr(e: Expr) -> str:
    if isinstance(e, Gen):
        return f"gen({e.symbol})"
    if isinstance(e, Prec):
        return f"prec[{e.omega}]({print_expr(e.left)},{print_expr(e.right)})"
    if isinstance(e, Succ):
        return f"succ[{e.omega}]({print_expr(e.left)},{print_expr(e.right)})"
    if isinstance(e, Dot):
        return f"dot({print_expr(e.left)},{print_expr(e.right)})"
    raise TypeError(f"not an expression: {e!r}")
