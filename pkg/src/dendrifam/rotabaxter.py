"""Finite-dimensional Rota-Baxter family algebras and the induced
structures.

An algebra is given by structure constants over the rationals; a
Rota-Baxter family attaches one operator matrix per semigroup element
and a weight.  The family identity

    P_a(x) P_b(y) = P_{ab}( P_a(x) y + x P_b(y) + lambda x y )

is checked exhaustively on basis pairs over a caller-supplied,
product-closed sample of indices; operators outside the sample are an
error, never silently extended.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Tuple

from .basis import LinComb, ZERO_SPAN, normalize
from .errors import AxiomFailure, InvalidElement
from .semigroups import ExtElem, Semigroup

Vector = Tuple[Fraction, ...]
Matrix = Tuple[Tuple[Fraction, ...], ...]


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(c: Fraction, u: Vector) -> Vector:
    return tuple(Fraction(c) * a for a in u)


def vec_zero(dim: int) -> Vector:
    return (Fraction(0),) * dim


def mat_apply(m: Matrix, v: Vector) -> Vector:
    return tuple(sum((row[j] * v[j] for j in range(len(v))), Fraction(0)) for row in m)


@dataclass(frozen=True)
class FiniteAlgebra:
    """Associative algebra e_i e_j = sum_k c[i][j][k] e_k over the rationals."""

    structure: Tuple[Tuple[Tuple[Fraction, ...], ...], ...]

    @property
    def dim(self) -> int:
        return len(self.structure)

    def basis_vector(self, i: int) -> Vector:
        return tuple(Fraction(1) if j == i else Fraction(0) for j in range(self.dim))

    def zero(self) -> Vector:
        return vec_zero(self.dim)

    def mul(self, u: Vector, v: Vector) -> Vector:
        out = [Fraction(0)] * self.dim
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            for j, vj in enumerate(v):
                if vj == 0:
                    continue
                c = ui * vj
                for k, s in enumerate(self.structure[i][j]):
                    if s != 0:
                        out[k] += c * s
        return tuple(out)

    def associativity_counterexample(self) -> Optional[Tuple[int, int, int]]:
        for i in range(self.dim):
            ei = self.basis_vector(i)
            for j in range(self.dim):
                ej = self.basis_vector(j)
                eij = self.mul(ei, ej)
                for k in range(self.dim):
                    ek = self.basis_vector(k)
                    if self.mul(eij, ek) != self.mul(ei, self.mul(ej, ek)):
                        return (i, j, k)
        return None

    def validate(self) -> None:
        witness = self.associativity_counterexample()
        if witness is not None:
            raise AxiomFailure(
                f"structure constants are not associative at basis triple {witness}",
                counterexample=witness)


def pointwise_algebra(dim: int) -> FiniteAlgebra:
    """k^dim with the pointwise (diagonal) product."""
    zero = Fraction(0)
    one = Fraction(1)
    return FiniteAlgebra(tuple(
        tuple(tuple(one if i == j == k else zero for k in range(dim))
              for j in range(dim))
        for i in range(dim)))


def scaled_identity_matrix(dim: int, c: Fraction) -> Matrix:
    c = Fraction(c)
    return tuple(tuple(c if i == j else Fraction(0) for j in range(dim))
                 for i in range(dim))


def cascading_sum_matrix(dim: int, weight: Fraction) -> Matrix:
    """P(a)_i = -weight * sum_{j <= i} a_j, a Rota-Baxter operator on k^dim."""
    weight = Fraction(weight)
    return tuple(tuple(-weight if j <= i else Fraction(0) for j in range(dim))
                 for i in range(dim))


@dataclass(frozen=True)
class RBFamily:
    """An algebra with one operator per sampled semigroup element and a weight."""

    algebra: FiniteAlgebra
    weight: Fraction
    operators: Mapping[str, Matrix]

    def operator(self, omega: str) -> Matrix:
        try:
            return self.operators[omega]
        except KeyError:
            raise InvalidElement(f"no operator declared for index {omega!r}")

    def apply(self, omega: str, v: Vector) -> Vector:
        return mat_apply(self.operator(omega), v)

    def mutated(self, omega: str, row: int, col: int, delta: Fraction) -> "RBFamily":
        """Copy with one matrix entry perturbed; used by mutation tests."""
        m = [list(r) for r in self.operator(omega)]
        m[row][col] += Fraction(delta)
        operators = dict(self.operators)
        operators[omega] = tuple(tuple(r) for r in m)
        return RBFamily(self.algebra, self.weight, operators)


def rb_family_counterexample(rb: RBFamily, semigroup: Semigroup,
                             sample: Iterable[str]) -> Optional[dict]:
    """First (alpha, beta, i, j) violating the family identity, or None."""
    sample = list(sample)
    alg = rb.algebra
    lam = rb.weight
    for alpha in sample:
        for beta in sample:
            alphabeta = semigroup.mul(alpha, beta)
            for i in range(alg.dim):
                a = alg.basis_vector(i)
                pa = rb.apply(alpha, a)
                for j in range(alg.dim):
                    b = alg.basis_vector(j)
                    pb = rb.apply(beta, b)
                    lhs = alg.mul(pa, pb)
                    inner = vec_add(vec_add(alg.mul(pa, b), alg.mul(a, pb)),
                                    vec_scale(lam, alg.mul(a, b)))
                    rhs = rb.apply(alphabeta, inner)
                    if lhs != rhs:
                        return {"alpha": alpha, "beta": beta, "i": i, "j": j,
                                "lhs": lhs, "rhs": rhs}
    return None


def validate_rb_family(rb: RBFamily, semigroup: Semigroup,
                       sample: Iterable[str]) -> None:
    failure = rb_family_counterexample(rb, semigroup, sample)
    if failure is not None:
        raise AxiomFailure(
            "Rota-Baxter family identity fails at "
            f"alpha={failure['alpha']} beta={failure['beta']} "
            f"(e_{failure['i']}, e_{failure['j']})",
            counterexample=failure)


class EtaOps:
    """Dendriform structure induced by a Rota-Baxter family:
    x prec_w y = x P_w(y) + lambda x y,   x succ_w y = P_w(x) y."""

    def __init__(self, rb: RBFamily):
        self.rb = rb

    def prec(self, x: Vector, y: Vector, omega: str) -> Vector:
        alg = self.rb.algebra
        return vec_add(alg.mul(x, self.rb.apply(omega, y)),
                       vec_scale(self.rb.weight, alg.mul(x, y)))

    def succ(self, x: Vector, y: Vector, omega: str) -> Vector:
        return self.rb.algebra.mul(self.rb.apply(omega, x), y)

    def add(self, *values: Vector) -> Vector:
        out = self.zero()
        for v in values:
            out = vec_add(out, v)
        return out

    def scale(self, c: Fraction, v: Vector) -> Vector:
        return vec_scale(c, v)

    def zero(self) -> Vector:
        return self.rb.algebra.zero()


class EpsilonOps:
    """Tridendriform structure induced by a Rota-Baxter family:
    x prec_w y = x P_w(y),  x succ_w y = P_w(x) y,  x . y = lambda x y."""

    def __init__(self, rb: RBFamily):
        self.rb = rb

    def prec(self, x: Vector, y: Vector, omega: str) -> Vector:
        return self.rb.algebra.mul(x, self.rb.apply(omega, y))

    def succ(self, x: Vector, y: Vector, omega: str) -> Vector:
        return self.rb.algebra.mul(self.rb.apply(omega, x), y)

    def dot(self, x: Vector, y: Vector) -> Vector:
        return vec_scale(self.rb.weight, self.rb.algebra.mul(x, y))

    def add(self, *values: Vector) -> Vector:
        out = self.zero()
        for v in values:
            out = vec_add(out, v)
        return out

    def scale(self, c: Fraction, v: Vector) -> Vector:
        return vec_scale(c, v)

    def zero(self) -> Vector:
        return self.rb.algebra.zero()


def eta(rb: RBFamily) -> EtaOps:
    """Dendriform operations object over a validated Rota-Baxter family."""
    return EtaOps(rb)


def epsilon(rb: RBFamily, semigroup: Semigroup, sample: Iterable[str]) -> EpsilonOps:
    """Tridendriform operations object over a validated Rota-Baxter family.

    The seven axioms are checked exhaustively on basis triples over the
    sampled index pairs before the structure is handed out; a failure
    signals a wrong formula choice and raises AxiomFailure.
    """
    from .tridendriform import validate_tridendriform_ops

    ops = EpsilonOps(rb)
    sample = list(sample)
    elements = [rb.algebra.basis_vector(i) for i in range(rb.algebra.dim)]
    triples = [(a, b, semigroup.mul(a, b)) for a in sample for b in sample]
    validate_tridendriform_ops(ops, elements, triples)
    return ops


class TensorRB:
    """The single Rota-Baxter operator P(x (x) w) = P_w(x) (x) w on spans of
    (basis index, semigroup element) pairs."""

    def __init__(self, rb: RBFamily, semigroup: Semigroup):
        self.rb = rb
        self.semigroup = semigroup

    def _key(self, pair):
        index, token = pair
        return (index,) + tuple(self.semigroup.element_key(token))

    def basis(self, i: int, omega: str) -> LinComb:
        return normalize([(Fraction(1), (i, omega))], self._key)

    def zero(self) -> LinComb:
        return ZERO_SPAN

    def add(self, *spans: LinComb) -> LinComb:
        pairs = []
        for s in spans:
            pairs.extend(s.terms)
        return normalize(pairs, self._key)

    def scale(self, c: Fraction, s: LinComb) -> LinComb:
        return s.scaled(c)

    def mul(self, u: LinComb, v: LinComb) -> LinComb:
        alg = self.rb.algebra
        pairs = []
        for cu, (i, a) in u.terms:
            for cv, (j, b) in v.terms:
                ab = self.semigroup.mul(a, b)
                product = alg.mul(alg.basis_vector(i), alg.basis_vector(j))
                for k, coeff in enumerate(product):
                    if coeff != 0:
                        pairs.append((cu * cv * coeff, (k, ab)))
        return normalize(pairs, self._key)

    def apply(self, u: LinComb) -> LinComb:
        pairs = []
        for c, (i, a) in u.terms:
            image = self.rb.apply(a, self.rb.algebra.basis_vector(i))
            for j, coeff in enumerate(image):
                if coeff != 0:
                    pairs.append((c * coeff, (j, a)))
        return normalize(pairs, self._key)


def tensor_rb_counterexample(rb: RBFamily, semigroup: Semigroup,
                             sample: Iterable[str]) -> Optional[dict]:
    """First sampled basis pair violating the weight-lambda identity, or None."""
    op = TensorRB(rb, semigroup)
    sample = list(sample)
    lam = rb.weight
    basis = [(i, a) for a in sample for i in range(rb.algebra.dim)]
    for i, a in basis:
        u = op.basis(i, a)
        pu = op.apply(u)
        for j, b in basis:
            v = op.basis(j, b)
            pv = op.apply(v)
            lhs = op.mul(pu, pv)
            inner = op.add(op.mul(pu, v), op.mul(u, pv), op.scale(lam, op.mul(u, v)))
            rhs = op.apply(inner)
            if lhs != rhs:
                return {"alpha": a, "beta": b, "i": i, "j": j,
                        "lhs": lhs, "rhs": rhs}
    return None


def tensor_rb(rb: RBFamily, semigroup: Semigroup, sample: Iterable[str]) -> TensorRB:
    """Construct and verify the tensor Rota-Baxter operator on the sample."""
    failure = tensor_rb_counterexample(rb, semigroup, sample)
    if failure is not None:
        raise AxiomFailure(
            "tensor Rota-Baxter identity fails at "
            f"alpha={failure['alpha']} beta={failure['beta']} "
            f"(e_{failure['i']}, e_{failure['j']})",
            counterexample=failure)
    return TensorRB(rb, semigroup)


class TensorDendriform:
    """Classical (index-free) dendriform products on spans of
    (binary tree, semigroup element) pairs over the free family algebra:
    (x (x) a) prec (y (x) b) = (x prec_b y) (x) ab, and mirrored for succ."""

    def __init__(self, family):
        self.family = family
        self.semigroup = family.semigroup

    def _key(self, pair):
        tree, token = pair
        return (self.family.key(tree),) + tuple(self.semigroup.element_key(token))

    def element(self, tree, omega: str) -> LinComb:
        self.semigroup.require(omega)
        return normalize([(Fraction(1), (tree, omega))], self._key)

    def zero(self) -> LinComb:
        return ZERO_SPAN

    def add(self, *spans: LinComb) -> LinComb:
        pairs = []
        for s in spans:
            pairs.extend(s.terms)
        return normalize(pairs, self._key)

    def scale(self, c: Fraction, s: LinComb) -> LinComb:
        return s.scaled(c)

    def _combine(self, product_trees, u: LinComb, v: LinComb, use_left_index: bool):
        pairs = []
        for cu, (t1, a) in u.terms:
            for cv, (t2, b) in v.terms:
                ab = self.semigroup.mul(a, b)
                index = ExtElem(a if use_left_index else b)
                inner = product_trees(t1, t2, index)
                pairs.extend((cu * cv * cs, (s, ab)) for cs, s in inner.terms)
        return normalize(pairs, self._key)

    def prec(self, u: LinComb, v: LinComb) -> LinComb:
        return self._combine(self.family._prec_trees, u, v, use_left_index=False)

    def succ(self, u: LinComb, v: LinComb) -> LinComb:
        return self._combine(self.family._succ_trees, u, v, use_left_index=True)


class TensorTridendriform(TensorDendriform):
    """Classical tridendriform products on (Schröder tree, element) pairs,
    adding (x (x) a) . (y (x) b) = (x . y) (x) ab."""

    def dot(self, u: LinComb, v: LinComb) -> LinComb:
        pairs = []
        for cu, (t1, a) in u.terms:
            for cv, (t2, b) in v.terms:
                ab = self.semigroup.mul(a, b)
                inner = self.family._dot_trees(t1, t2)
                pairs.extend((cu * cv * cs, (s, ab)) for cs, s in inner.terms)
        return normalize(pairs, self._key)


def tensor_dendriform(family) -> TensorDendriform:
    return TensorDendriform(family)


def tensor_tridendriform(family) -> TensorTridendriform:
    return TensorTridendriform(family)


# -- the definition file format ------------------------------------------

def parse_rb_text(text: str):
    """Parse an algebra/operator definition file.

    Line format: ``dim=<d>``; structure constants ``sc i j k coeff`` (absent
    entries are zero); operator matrices ``op <omega> v11 v12 ...`` with d*d
    rationals row-major.  ``#`` comments and blank lines are ignored.
    Returns (FiniteAlgebra, {omega: matrix}).
    """
    from .rationals import parse_coefficient

    dim = None
    constants: dict = {}
    operators: dict = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("dim="):
            dim = int(line[len("dim="):])
            if dim < 1:
                raise InvalidElement("dim must be >= 1")
            continue
        parts = line.split()
        if parts[0] == "sc":
            if dim is None:
                raise InvalidElement("dim= must precede sc lines")
            if len(parts) != 5:
                raise InvalidElement(f"bad structure-constant line: {raw!r}")
            i, j, k = (int(p) for p in parts[1:4])
            if not all(0 <= v < dim for v in (i, j, k)):
                raise InvalidElement(f"basis index out of range: {raw!r}")
            constants[(i, j, k)] = parse_coefficient(parts[4])
            continue
        if parts[0] == "op":
            if dim is None:
                raise InvalidElement("dim= must precede op lines")
            if len(parts) != 2 + dim * dim:
                raise InvalidElement(
                    f"operator for {parts[1]!r} needs {dim * dim} entries")
            values = [parse_coefficient(p) for p in parts[2:]]
            operators[parts[1]] = tuple(
                tuple(values[r * dim + c] for c in range(dim)) for r in range(dim))
            continue
        raise InvalidElement(f"unrecognised line in algebra file: {raw!r}")
    if dim is None:
        raise InvalidElement("algebra file must declare dim=")
    zero = Fraction(0)
    structure = tuple(
        tuple(tuple(constants.get((i, j, k), zero) for k in range(dim))
              for j in range(dim))
        for i in range(dim))
    return FiniteAlgebra(structure), operators


def parse_rb_file(path):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_rb_text(handle.read())


def parse_map_text(text: str, dim: int) -> dict:
    """Parse a generator-image map: one ``<symbol> <basis index>`` per line."""
    images = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InvalidElement(f"bad map line: {raw!r}")
        symbol, index = parts[0], int(parts[1])
        if not 0 <= index < dim:
            raise InvalidElement(f"basis index out of range: {raw!r}")
        images[symbol] = index
    if not images:
        raise InvalidElement("map file declares no generator images")
    return images


def parse_map_file(path, dim: int) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_map_text(handle.read(), dim)
