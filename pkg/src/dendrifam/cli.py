"""Command-line front end.

Subcommands: ``enumerate`` (basis trees), ``product`` (the indexed
products on parsed terms), ``check`` (axiom and identity sweeps) and
``extend`` (universal-morphism evaluation into an induced structure).

Exit codes: 0 success, 1 verified counterexample or axiom failure,
2 usage/config/parse error, 3 semantic misuse.  Sweeps stream progress
to stderr; stdout carries only the results.
"""

from __future__ import annotations

import argparse
import sys

from . import axioms
from .basis import LEAF, Alphabet
from .dendriform import FreeDendriformFamily
from .errors import AlgebraError, AxiomFailure, IdentityMisuse, LeafOperand
from .pbtrees import enumerate_bin
from .rationals import parse_coefficient
from .rotabaxter import (RBFamily, eta, epsilon, parse_map_file, parse_rb_file,
                         rb_family_counterexample, tensor_dendriform,
                         tensor_rb_counterexample, tensor_tridendriform)
from .schroder import enumerate_sch
from .semigroups import Semigroup, from_config_file
from .termio import parse_operand, print_span, print_tree
from .tridendriform import FreeTridendriformFamily, gamma

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_CONFIG = 2
EXIT_MISUSE = 3

_PROGRESS_EVERY = 5000


def _parse_semigroup(text: str) -> Semigroup:
    if text == "trivial":
        return Semigroup.trivial()
    if text.startswith("cyclic:"):
        return Semigroup.cyclic(int(text[len("cyclic:"):]))
    if text.startswith("free:"):
        gens = [g for g in text[len("free:"):].split(",") if g]
        return Semigroup.free(gens)
    semigroup = from_config_file(text)
    semigroup.validate()
    return semigroup


def _parse_alphabet(text: str) -> Alphabet:
    return Alphabet([s for s in text.split(",") if s])


def _config(args):
    return _parse_alphabet(args.alphabet), _parse_semigroup(args.semigroup)


def _vector_text(v) -> str:
    return " ".join(str(c) for c in v)


class _Progress:
    def __init__(self, total: int):
        self.total = total
        self.done = 0

    def tick(self):
        self.done += 1
        if self.done % _PROGRESS_EVERY == 0:
            print(f"progress {self.done}/{self.total}", file=sys.stderr)


def _trees_up_to(kind: str, max_leaves: int, alphabet, semigroup, max_word):
    if max_leaves < 2:
        raise ValueError("--max-leaves must be at least 2")
    trees = []
    enumerate_fn = enumerate_bin if kind == "binary" else enumerate_sch
    for n in range(1, max_leaves):
        trees.extend(enumerate_fn(n, alphabet, semigroup, max_word))
    return trees


def _infer_kind(op: str, *texts: str) -> str:
    for text in texts:
        binary_at = text.find("B[")
        schroder_at = text.find("S[")
        if binary_at != -1 and (schroder_at == -1 or binary_at < schroder_at):
            return "binary"
        if schroder_at != -1:
            return "schroder"
    return "schroder" if op == "dot" else "binary"


# -- subcommands -------------------------------------------------------------

def cmd_enumerate(args) -> int:
    alphabet, semigroup = _config(args)
    if args.n < 1:
        raise ValueError("n must be at least 1")
    enumerate_fn = enumerate_bin if args.kind == "binary" else enumerate_sch
    trees = enumerate_fn(args.n, alphabet, semigroup, args.max_word)
    for t in trees:
        print(print_tree(t))
    print(f"count={len(trees)}")
    return EXIT_OK


def cmd_product(args) -> int:
    alphabet, semigroup = _config(args)
    if args.op == "dot" and args.omega is not None:
        raise ValueError("dot takes no --omega")
    if args.op != "dot" and args.omega is None:
        raise ValueError(f"{args.op} requires --omega")
    kind = _infer_kind(args.op, args.lhs, args.rhs)
    if args.op == "dot" and kind == "binary":
        raise ValueError("dot is defined on Schröder terms only")
    lhs = parse_operand(args.lhs, kind, alphabet, semigroup)
    rhs = parse_operand(args.rhs, kind, alphabet, semigroup)
    if kind == "binary":
        algebra = FreeDendriformFamily(alphabet, semigroup)
    else:
        algebra = FreeTridendriformFamily(alphabet, semigroup)
    if args.op == "dot":
        result = algebra.dot(lhs, rhs)
    elif args.op == "prec":
        result = algebra.prec(lhs, rhs, args.omega)
    else:
        result = algebra.succ(lhs, rhs, args.omega)
    print(print_span(result))
    return EXIT_OK


def _check_family_axioms(args, kind: str) -> int:
    alphabet, semigroup = _config(args)
    trees = _trees_up_to(kind, args.max_leaves, alphabet, semigroup, args.max_word)
    omega = semigroup.elements(args.max_word)
    if kind == "binary":
        algebra = FreeDendriformFamily(alphabet, semigroup)
        names = ["ddf1", "ddf2", "ddf3"]
    else:
        algebra = FreeTridendriformFamily(alphabet, semigroup)
        names = [f"tdf{i}" for i in range(1, 8)]
    total = len(trees) ** 3 * len(omega) ** 2
    progress = _Progress(total)
    for t in trees:
        for u in trees:
            for w in trees:
                for alpha in omega:
                    for beta in omega:
                        progress.tick()
                        if algebra.axioms_hold(t, u, w, alpha, beta):
                            continue
                        residuals = algebra.axiom_residuals(t, u, w, alpha, beta)
                        for name, residual in zip(names, residuals):
                            if not residual.is_zero():
                                print(f"counterexample suite={args.suite} axiom={name} "
                                      f"T={print_tree(t)} U={print_tree(u)} "
                                      f"W={print_tree(w)} alpha={alpha} beta={beta} "
                                      f"residual={print_span(residual)}")
                                return EXIT_COUNTEREXAMPLE
    print(f"instances={total} failures=0")
    return EXIT_OK


def _load_rb(args) -> RBFamily:
    if not args.rb_file:
        raise ValueError("this suite requires --rb-file")
    algebra, operators = parse_rb_file(args.rb_file)
    algebra.validate()
    weight = parse_coefficient(args.weight)
    return RBFamily(algebra, weight, operators)


def _rb_sample(rb: RBFamily, semigroup: Semigroup) -> list:
    sample = sorted(rb.operators.keys(), key=semigroup.element_key)
    for a in sample:
        semigroup.require(a)
        for b in sample:
            ab = semigroup.mul(a, b)
            if ab not in rb.operators:
                raise ValueError(
                    f"operator sample is not product-closed: {a}*{b} = {ab} "
                    "has no declared operator")
    return sample


def _check_rb(args) -> int:
    _, semigroup = _config(args)
    rb = _load_rb(args)
    sample = _rb_sample(rb, semigroup)
    total = (len(sample) * rb.algebra.dim) ** 2
    failure = rb_family_counterexample(rb, semigroup, sample)
    if failure is not None:
        print(f"counterexample suite=rb alpha={failure['alpha']} "
              f"beta={failure['beta']} i={failure['i']} j={failure['j']} "
              f"lhs={_vector_text(failure['lhs'])} rhs={_vector_text(failure['rhs'])}")
        return EXIT_COUNTEREXAMPLE
    print(f"instances={total} failures=0")
    return EXIT_OK


def _check_tensor_rb(args) -> int:
    _, semigroup = _config(args)
    rb = _load_rb(args)
    sample = _rb_sample(rb, semigroup)
    total = (len(sample) * rb.algebra.dim) ** 2
    failure = tensor_rb_counterexample(rb, semigroup, sample)
    if failure is not None:
        print(f"counterexample suite=tensor-rb alpha={failure['alpha']} "
              f"beta={failure['beta']} i={failure['i']} j={failure['j']} "
              f"lhs={print_span(failure['lhs'])} rhs={print_span(failure['rhs'])}")
        return EXIT_COUNTEREXAMPLE
    print(f"instances={total} failures=0")
    return EXIT_OK


def _check_tensor_family(args, kind: str) -> int:
    alphabet, semigroup = _config(args)
    trees = _trees_up_to(kind, args.max_leaves, alphabet, semigroup, args.max_word)
    omega = semigroup.elements(args.max_word)
    if kind == "binary":
        tensor = tensor_dendriform(FreeDendriformFamily(alphabet, semigroup))
        residual_fn = axioms.classical_dendriform_residuals
        names = ["dd1", "dd2", "dd3"]
    else:
        tensor = tensor_tridendriform(FreeTridendriformFamily(alphabet, semigroup))
        residual_fn = axioms.classical_tridendriform_residuals
        names = [f"td{i}" for i in range(1, 8)]
    elements = [(t, w) for t in trees for w in omega]
    total = len(elements) ** 3
    progress = _Progress(total)
    zero = tensor.zero()
    for t1, w1 in elements:
        x = tensor.element(t1, w1)
        for t2, w2 in elements:
            y = tensor.element(t2, w2)
            for t3, w3 in elements:
                z = tensor.element(t3, w3)
                progress.tick()
                for name, residual in zip(names, residual_fn(tensor, x, y, z)):
                    if residual != zero:
                        print(f"counterexample suite={args.suite} axiom={name} "
                              f"x={print_tree(t1)}(x){w1} y={print_tree(t2)}(x){w2} "
                              f"z={print_tree(t3)}(x){w3}")
                        return EXIT_COUNTEREXAMPLE
    print(f"instances={total} failures=0")
    return EXIT_OK


def _check_diagram(args) -> int:
    _, semigroup = _config(args)
    rb = _load_rb(args)
    sample = _rb_sample(rb, semigroup)
    failure = rb_family_counterexample(rb, semigroup, sample)
    if failure is not None:
        print(f"counterexample suite=diagram alpha={failure['alpha']} "
              f"beta={failure['beta']} i={failure['i']} j={failure['j']} "
              "reason=not-a-Rota-Baxter-family")
        return EXIT_COUNTEREXAMPLE
    through_epsilon = gamma(epsilon(rb, semigroup, sample))
    direct = eta(rb)
    dim = rb.algebra.dim
    total = dim * dim * len(sample)
    for i in range(dim):
        x = rb.algebra.basis_vector(i)
        for j in range(dim):
            y = rb.algebra.basis_vector(j)
            for w in sample:
                for name in ("prec", "succ"):
                    left = getattr(through_epsilon, name)(x, y, w)
                    right = getattr(direct, name)(x, y, w)
                    if left != right:
                        print(f"counterexample suite=diagram op={name} i={i} j={j} "
                              f"omega={w} gamma.epsilon={_vector_text(left)} "
                              f"eta={_vector_text(right)}")
                        return EXIT_COUNTEREXAMPLE
    print(f"instances={total} failures=0")
    return EXIT_OK


def cmd_check(args) -> int:
    suite = args.suite
    if suite == "dendriform":
        return _check_family_axioms(args, "binary")
    if suite == "tridendriform":
        return _check_family_axioms(args, "schroder")
    if suite == "rb":
        return _check_rb(args)
    if suite == "tensor-rb":
        return _check_tensor_rb(args)
    if suite == "tensor-dend":
        return _check_tensor_family(args, "binary")
    if suite == "tensor-tridend":
        return _check_tensor_family(args, "schroder")
    if suite == "diagram":
        return _check_diagram(args)
    raise ValueError(f"unknown suite {suite!r}")


def cmd_extend(args) -> int:
    alphabet, semigroup = _config(args)
    rb = _load_rb(args)
    sample = _rb_sample(rb, semigroup)
    images = parse_map_file(args.map_file, rb.algebra.dim)
    missing = [x for x in alphabet if x not in images]
    if missing:
        raise ValueError(f"map file has no image for generators: {missing}")
    f = {x: rb.algebra.basis_vector(i) for x, i in images.items()}
    index_triples = [(a, b, semigroup.mul(a, b)) for a in sample for b in sample]
    if args.functor == "eta":
        from .dendriform import validate_dendriform_ops

        validate_rb = rb_family_counterexample(rb, semigroup, sample)
        if validate_rb is not None:
            raise AxiomFailure("the supplied family is not Rota-Baxter",
                               counterexample=validate_rb)
        ops = eta(rb)
        elements = [rb.algebra.basis_vector(i) for i in range(rb.algebra.dim)]
        validate_dendriform_ops(ops, elements, index_triples)
        algebra = FreeDendriformFamily(alphabet, semigroup)
        span = parse_operand(args.term, "binary", alphabet, semigroup)
    else:
        ops = epsilon(rb, semigroup, sample)
        algebra = FreeTridendriformFamily(alphabet, semigroup)
        span = parse_operand(args.term, "schroder", alphabet, semigroup)
    if span is LEAF:
        raise LeafOperand("the leaf has no image under the universal morphism")
    print(_vector_text(algebra.extend(f, ops, span)))
    return EXIT_OK


# -- argument parsing ---------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet", required=True,
                        help="comma-separated decoration symbols, in order")
    common.add_argument("--semigroup", required=True,
                        help="trivial | cyclic:N | free:g1,g2 | path to config file")
    common.add_argument("--max-word", type=int, default=None,
                        help="word-length bound for free semigroups")

    parser = argparse.ArgumentParser(prog="dendrifam")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common],
                       help="list basis trees with n+1 leaves")
    p.add_argument("kind", choices=["binary", "schroder"])
    p.add_argument("n", type=int)
    p.set_defaults(run=cmd_enumerate)

    p = sub.add_parser("product", parents=[common],
                       help="compute prec/succ/dot on two terms")
    p.add_argument("op", choices=["prec", "succ", "dot"])
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.add_argument("--omega", default=None, help="family index (prec/succ only)")
    p.set_defaults(run=cmd_product)

    p = sub.add_parser("check", parents=[common], help="run an axiom or identity sweep")
    p.add_argument("--suite", required=True,
                   choices=["dendriform", "tridendriform", "rb", "tensor-rb",
                            "tensor-dend", "tensor-tridend", "diagram"])
    p.add_argument("--max-leaves", type=int, default=2)
    p.add_argument("--rb-file", default=None)
    p.add_argument("--lambda", dest="weight", default="1")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("extend", parents=[common],
                       help="evaluate the universal morphism on a term")
    p.add_argument("--functor", required=True, choices=["eta", "epsilon"])
    p.add_argument("--rb-file", required=True)
    p.add_argument("--lambda", dest="weight", default="1")
    p.add_argument("--map-file", required=True)
    p.add_argument("term")
    p.set_defaults(run=cmd_extend)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (IdentityMisuse, LeafOperand) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISUSE
    except AxiomFailure as exc:
        print(f"axiom failure: {exc}")
        return EXIT_COUNTEREXAMPLE
    except (AlgebraError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
