import numpy as np
import pytest

from tests.conftest import bundled, random_corpus
from truthsem import _pykernel
from truthsem.graph import closure
from truthsem.kleene import Hypothesis, TV, jump
from truthsem.program import BACKEND, available_backends, compile_program, evaluate_batch, find_fixed_points, jump_batch

BACKENDS = available_backends()


def test_python_backend_always_available():
    assert BACKENDS["python"] is _pykernel
    assert BACKEND in ("compiled", "python")


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_fixed_points_on_bundled(name):
    th, rep = bundled("truthteller")
    prog = compile_program(rep.graph, th)
    fixed = find_fixed_points(prog, BACKENDS[name])
    assert fixed.tolist() == [[0], [1], [2]]


def test_backends_agree_on_random_theories():
    if "compiled" not in BACKENDS:
        pytest.skip("compiled kernel not built")
    for th in random_corpus()[:60]:
        g = closure((), th)
        prog = compile_program(g, th)
        a = find_fixed_points(prog, BACKENDS["compiled"])
        b = find_fixed_points(prog, BACKENDS["python"])
        assert np.array_equal(a, b)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_batch_jump_matches_recursive_jump(name):
    rng = np.random.default_rng(7)
    for th in random_corpus()[:40]:
        g = closure((), th)
        prog = compile_program(g, th)
        n = len(g.t_core)
        hyps = rng.integers(0, 3, size=(12, n), dtype=np.int8)
        got = jump_batch(prog, hyps, BACKENDS[name])
        for row, out in zip(hyps, got):
            h = Hypothesis(g.t_core, tuple(TV(int(v)) for v in row))
            assert tuple(int(v) for v in jump(h, th, g).values) == tuple(int(v) for v in out)


def test_full_program_evaluates_every_node():
    th, rep = bundled("grounded")
    prog = compile_program(rep.graph, th, full=True)
    vals = evaluate_batch(prog, np.zeros((1, len(prog.core)), dtype=np.int8))
    assert vals.shape == (1, len(rep.graph.nodes))


def test_empty_core():
    from truthsem.model import Signature, Theory
    from truthsem.syntax import PredApp

    th = Theory(Signature(predicates={"Q": 0}, sentence_constants=("A",)), pred_interp={"Q": frozenset()},
                constant_bindings={"A": PredApp("Q", ())})
    g = closure((), th)
    for kern in BACKENDS.values():
        fixed = find_fixed_points(compile_program(g, th), kern)
        assert fixed.shape == (1, 0)


def test_environment_forces_python_backend():
    import os
    import subprocess
    import sys

    env = dict(os.environ, TRUTHSEM_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from truthsem.program import BACKEND; print(BACKEND)"],
                         capture_output=True, text=True, env=env, check=True).stdout
    assert out.strip() == "python"
