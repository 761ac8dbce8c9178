from fractions import Fraction

import pytest

from dendrifam.cli import main
from dendrifam.rotabaxter import EtaOps, RBFamily, cascading_sum_matrix, pointwise_algebra

RB_K3 = """\
dim=3
sc 0 0 0 1
sc 1 1 1 1
sc 2 2 2 1
op 0 -1 0 0 -1 -1 0 -1 -1 -1
op 1 -1 0 0 -1 -1 0 -1 -1 -1
"""

RB_K3_PERTURBED = RB_K3.replace("op 0 -1 0 0", "op 0 -1 1 0")

MAP_XY = "x 0\ny 1\n"


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def rb_file(tmp_path):
    path = tmp_path / "rb.txt"
    path.write_text(RB_K3)
    return str(path)


@pytest.fixture
def bad_rb_file(tmp_path):
    path = tmp_path / "rb-bad.txt"
    path.write_text(RB_K3_PERTURBED)
    return str(path)


@pytest.fixture
def map_file(tmp_path):
    path = tmp_path / "map.txt"
    path.write_text(MAP_XY)
    return str(path)


# -- enumerate ------------------------------------------------------------------

def test_enumerate_binary(capsys):
    code, out, _ = run(capsys, "enumerate", "binary", "2",
                       "--alphabet", "x", "--semigroup", "trivial")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "count=2"
    assert len(lines) == 3


def test_enumerate_schroder(capsys):
    code, out, _ = run(capsys, "enumerate", "schroder", "2",
                       "--alphabet", "x", "--semigroup", "trivial")
    assert code == 0
    assert out.strip().splitlines()[-1] == "count=3"


def test_enumerate_zero_rejected(capsys):
    code, _, err = run(capsys, "enumerate", "binary", "0",
                       "--alphabet", "x", "--semigroup", "trivial")
    assert code == 2 and "error" in err


def test_enumerate_free_needs_bound(capsys):
    code, _, _ = run(capsys, "enumerate", "binary", "2",
                     "--alphabet", "x", "--semigroup", "free:a")
    assert code == 2
    code, out, _ = run(capsys, "enumerate", "binary", "2",
                       "--alphabet", "x", "--semigroup", "free:a", "--max-word", "1")
    assert code == 0 and out.strip().splitlines()[-1] == "count=2"


def test_enumerate_semigroup_config_file(capsys, tmp_path):
    cfg = tmp_path / "sg.cfg"
    cfg.write_text("kind=table\n,e,g\ne,e,g\ng,g,e\n")
    code, out, _ = run(capsys, "enumerate", "binary", "2",
                       "--alphabet", "x", "--semigroup", str(cfg))
    assert code == 0 and out.strip().splitlines()[-1] == "count=4"


# -- product --------------------------------------------------------------------

def test_product_prec_golden(capsys):
    code, out, _ = run(capsys, "product", "prec", "--omega", "w",
                       "B[x;1:|,1:|]", "B[y;1:|,1:|]",
                       "--alphabet", "x,y", "--semigroup", "free:w")
    assert code == 0
    assert out.strip() == "1*B[x;1:|,w:B[y;1:|,1:|]]"


def test_product_dot_golden(capsys):
    code, out, _ = run(capsys, "product", "dot",
                       "S[x;1:|,1:|]", "S[y;1:|,1:|]",
                       "--alphabet", "x,y", "--semigroup", "trivial")
    assert code == 0
    assert out.strip() == "1*S[x,y;1:|,1:|,1:|]"


def test_product_dot_rejects_omega(capsys):
    code, _, _ = run(capsys, "product", "dot", "--omega", "0",
                     "S[x;1:|,1:|]", "S[y;1:|,1:|]",
                     "--alphabet", "x,y", "--semigroup", "trivial")
    assert code == 2


def test_product_prec_requires_omega(capsys):
    code, _, _ = run(capsys, "product", "prec",
                     "B[x;1:|,1:|]", "B[y;1:|,1:|]",
                     "--alphabet", "x,y", "--semigroup", "trivial")
    assert code == 2


def test_product_identity_index_is_misuse(capsys):
    code, _, _ = run(capsys, "product", "prec", "--omega", "1",
                     "B[x;1:|,1:|]", "B[y;1:|,1:|]",
                     "--alphabet", "x,y", "--semigroup", "free:a")
    assert code == 3


def test_product_parse_and_typing_errors(capsys):
    code, _, _ = run(capsys, "product", "prec", "--omega", "a",
                     "B[x;a:|,1:|]", "B[y;1:|,1:|]",
                     "--alphabet", "x,y", "--semigroup", "free:a")
    assert code == 2
    code, _, _ = run(capsys, "product", "prec", "--omega", "a",
                     "B[q;1:|,1:|]", "B[y;1:|,1:|]",
                     "--alphabet", "x,y", "--semigroup", "free:a")
    assert code == 2


def test_product_leaf_operands(capsys):
    code, out, _ = run(capsys, "product", "prec", "--omega", "0",
                       "B[x;1:|,1:|]", "|",
                       "--alphabet", "x", "--semigroup", "trivial")
    assert code == 0 and out.strip() == "1*B[x;1:|,1:|]"
    code, out, _ = run(capsys, "product", "prec", "--omega", "0",
                       "|", "B[x;1:|,1:|]",
                       "--alphabet", "x", "--semigroup", "trivial")
    assert code == 0 and out.strip() == "0"
    code, _, _ = run(capsys, "product", "prec", "--omega", "0", "|", "|",
                     "--alphabet", "x", "--semigroup", "trivial")
    assert code == 3


def test_product_span_operands(capsys):
    code, out, _ = run(capsys, "product", "succ", "--omega", "0",
                       "1*B[x;1:|,1:|] + 1*B[y;1:|,1:|]", "B[x;1:|,1:|]",
                       "--alphabet", "x,y", "--semigroup", "trivial")
    assert code == 0
    assert out.strip() == ("1*B[x;0:B[x;1:|,1:|],1:|]"
                           " + 1*B[x;0:B[y;1:|,1:|],1:|]")


# -- check ----------------------------------------------------------------------

def test_check_dendriform(capsys):
    code, out, _ = run(capsys, "check", "--suite", "dendriform",
                       "--alphabet", "x,y", "--semigroup", "cyclic:2",
                       "--max-leaves", "2")
    assert code == 0 and out.strip() == "instances=32 failures=0"


def test_check_tridendriform(capsys):
    code, out, _ = run(capsys, "check", "--suite", "tridendriform",
                       "--alphabet", "x,y", "--semigroup", "cyclic:2",
                       "--max-leaves", "2")
    assert code == 0 and out.strip() == "instances=32 failures=0"


def test_check_deterministic(capsys):
    args = ("check", "--suite", "dendriform", "--alphabet", "x,y",
            "--semigroup", "cyclic:2", "--max-leaves", "2")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_check_rb(capsys, rb_file):
    code, out, _ = run(capsys, "check", "--suite", "rb",
                       "--alphabet", "x", "--semigroup", "cyclic:2",
                       "--rb-file", rb_file, "--lambda", "1")
    assert code == 0 and out.strip() == "instances=36 failures=0"


def test_check_rb_counterexample(capsys, bad_rb_file):
    code, out, _ = run(capsys, "check", "--suite", "rb",
                       "--alphabet", "x", "--semigroup", "cyclic:2",
                       "--rb-file", bad_rb_file, "--lambda", "1")
    assert code == 1
    assert out.startswith("counterexample suite=rb")
    assert "alpha=" in out and "lhs=" in out


def test_check_tensor_rb(capsys, rb_file):
    code, out, _ = run(capsys, "check", "--suite", "tensor-rb",
                       "--alphabet", "x", "--semigroup", "cyclic:2",
                       "--rb-file", rb_file, "--lambda", "1")
    assert code == 0 and out.strip() == "instances=36 failures=0"


def test_check_diagram(capsys, rb_file):
    code, out, _ = run(capsys, "check", "--suite", "diagram",
                       "--alphabet", "x", "--semigroup", "cyclic:2",
                       "--rb-file", rb_file, "--lambda", "1")
    assert code == 0 and out.strip() == "instances=18 failures=0"


def test_check_tensor_families(capsys):
    code, out, _ = run(capsys, "check", "--suite", "tensor-dend",
                       "--alphabet", "x,y", "--semigroup", "cyclic:2",
                       "--max-leaves", "2")
    assert code == 0 and out.strip() == "instances=64 failures=0"
    code, out, _ = run(capsys, "check", "--suite", "tensor-tridend",
                       "--alphabet", "x,y", "--semigroup", "cyclic:2",
                       "--max-leaves", "2")
    assert code == 0 and out.strip() == "instances=64 failures=0"


def test_check_missing_rb_file(capsys):
    code, _, _ = run(capsys, "check", "--suite", "rb",
                     "--alphabet", "x", "--semigroup", "cyclic:2")
    assert code == 2


# -- extend --------------------------------------------------------------------------

def test_extend_generator_image(capsys, rb_file, map_file):
    code, out, _ = run(capsys, "extend", "--functor", "eta",
                       "--rb-file", rb_file, "--lambda", "1",
                       "--map-file", map_file, "B[x;1:|,1:|]",
                       "--alphabet", "x,y", "--semigroup", "cyclic:2")
    assert code == 0 and out.strip() == "1 0 0"


def test_extend_is_morphism_via_two_invocations(capsys, rb_file, map_file):
    # first invocation: the free product;  second: its image under extend
    code, product_text, _ = run(capsys, "product", "prec", "--omega", "1",
                                "B[x;1:|,1:|]", "B[y;1:|,1:|]",
                                "--alphabet", "x,y", "--semigroup", "cyclic:2")
    assert code == 0
    code, image_text, _ = run(capsys, "extend", "--functor", "eta",
                              "--rb-file", rb_file, "--lambda", "1",
                              "--map-file", map_file, product_text.strip(),
                              "--alphabet", "x,y", "--semigroup", "cyclic:2")
    assert code == 0
    rb = RBFamily(pointwise_algebra(3), Fraction(1),
                  {w: cascading_sum_matrix(3, Fraction(1)) for w in ("0", "1")})
    ops = EtaOps(rb)
    expected = ops.prec(rb.algebra.basis_vector(0), rb.algebra.basis_vector(1), "1")
    assert image_text.strip() == " ".join(str(c) for c in expected)


def test_extend_epsilon(capsys, rb_file, map_file):
    code, out, _ = run(capsys, "extend", "--functor", "epsilon",
                       "--rb-file", rb_file, "--lambda", "1",
                       "--map-file", map_file, "S[x,y;1:|,1:|,1:|]",
                       "--alphabet", "x,y", "--semigroup", "cyclic:2")
    assert code == 0
    rb = RBFamily(pointwise_algebra(3), Fraction(1),
                  {w: cascading_sum_matrix(3, Fraction(1)) for w in ("0", "1")})
    expected = rb.algebra.mul(rb.algebra.basis_vector(0), rb.algebra.basis_vector(1))
    assert out.strip() == " ".join(str(c) for c in expected)


def test_extend_epsilon_rejects_invalid_family(capsys, bad_rb_file, map_file):
    code, out, _ = run(capsys, "extend", "--functor", "epsilon",
                       "--rb-file", bad_rb_file, "--lambda", "1",
                       "--map-file", map_file, "S[x;1:|,1:|]",
                       "--alphabet", "x,y", "--semigroup", "cyclic:2")
    assert code == 1 and "axiom failure" in out


def test_extend_malformed_map_file(capsys, rb_file, tmp_path):
    bad_map = tmp_path / "bad-map.txt"
    bad_map.write_text("x zero\n")
    code, _, _ = run(capsys, "extend", "--functor", "eta",
                     "--rb-file", rb_file, "--lambda", "1",
                     "--map-file", str(bad_map), "B[x;1:|,1:|]",
                     "--alphabet", "x,y", "--semigroup", "cyclic:2")
    assert code == 2


def test_extend_missing_generator_image(capsys, rb_file, tmp_path):
    partial = tmp_path / "partial.txt"
    partial.write_text("x 0\n")
    code, _, _ = run(capsys, "extend", "--functor", "eta",
                     "--rb-file", rb_file, "--lambda", "1",
                     "--map-file", str(partial), "B[x;1:|,1:|]",
                     "--alphabet", "x,y", "--semigroup", "cyclic:2")
    assert code == 2
