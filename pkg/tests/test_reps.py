import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsymp import linalg
from qsymp.autos import OpTri, Tri, compile_word, lambda_tri
from qsymp.exactnum import Poly, Scalar
from qsymp.generators import random_tame_word
from qsymp.pathalg import NcPoly
from qsymp.reps import (NonHomogeneousError, act_endo, act_word, cm_point, evaluate,
                        from_vform, gl_act, in_fiber, in_Mn, is_regss, moment_mu,
                        random_fiber_point, to_vform)

from helpers import necklace


def M(rows):
    return linalg.mat(rows)


def test_cm_point_example():
    pt = cm_point(2, 1, [0, 1], [3, 4])
    assert pt.B == M([[3, 1], [-1, 4]])
    assert in_fiber(pt) and in_Mn(pt)
    X, Y, v, w = to_vform(pt)
    assert moment_mu(X, Y, v, w) == linalg.identity(2)


def test_cm_point_rejects_collisions():
    with pytest.raises(ValueError):
        cm_point(2, 1, [1, 1], [0, 0])
    with pytest.raises(ValueError):
        cm_point(2, 0, [0, 1], [0, 0])


def test_sample_point_vform(sample_point):
    X, Y, v, w = to_vform(sample_point)
    assert X == M([[0, 0], [0, 1]])
    assert Y == M([[1, 4], [-1, 5]])
    assert v == M([[1, 0], [1, -1]])
    assert w == M([[1, 4], [0, 3]])
    assert in_fiber(sample_point) and not in_Mn(sample_point)
    assert from_vform(X, Y, v, w) == sample_point


def test_evaluate_paths(sample_point):
    pt = sample_point
    assert evaluate(NcPoly.arrow("x") * NcPoly.arrow("y"), pt) == linalg.matmul(pt.X1, pt.Y1)
    # x* x is a loop at vertex 2, hence a 1 x 1 matrix
    assert evaluate(NcPoly.arrow("x*") * NcPoly.arrow("x"), pt) == linalg.matmul(pt.Y2, pt.X1)
    with pytest.raises(NonHomogeneousError):
        evaluate(NcPoly.arrow("a") + NcPoly.arrow("x"), pt)


def test_lambda_aab_action(sample_point):
    pt = sample_point
    mm, add = linalg.matmul, linalg.matadd
    got = act_endo(lambda_tri(necklace({"aab": 1})), pt)
    assert got.B == add(add(pt.B, mm(mm(pt.A, pt.X1), pt.Y1)), mm(mm(pt.X1, pt.Y1), pt.A))
    assert got.X2 == add(pt.X2, mm(mm(pt.A, pt.A), pt.X1))
    assert got.Y2 == add(pt.Y2, mm(pt.Y1, mm(pt.A, pt.A)))


def test_regss():
    assert is_regss(M([[1, 0], [0, 2]]))
    assert not is_regss(M([[1, 1], [0, 1]]))
    assert not is_regss(M([[0, 1], [0, 0]]))
    assert is_regss(M([[0, -1], [1, 0]]))  # eigenvalues +-i


def test_charpoly_examples():
    assert linalg.charpoly(M([[2, 1, 0], [1, 3, 1], [0, 1, 4]])) == Poly([-18, 24, -9, 1])
    assert linalg.charpoly(M([[1, 2], [3, 4]])) == Poly([-2, -5, 1])


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3))
def test_word_action_is_right_action(seed, n):
    rng = random.Random(seed)
    pt = random_fiber_point(n, rng=rng, word_len=2)
    word = random_tame_word(rng, 2, max_terms=2, max_len=2)
    stepwise = act_word(word, pt)
    assert stepwise == act_endo(compile_word(word), pt)
    assert in_fiber(stepwise)


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10**6))
def test_gl_action_keeps_fiber(seed):
    rng = random.Random(seed)
    pt = random_fiber_point(3, rng=rng)
    g = M([[1, 2, 0], [0, 1, 0], [1, 0, 1]])
    assert in_fiber(gl_act(g, pt))


def test_fiber_for_complex_tau():
    tau = Scalar(1, 2)
    pt = cm_point(2, tau, [0, 1], [1, 2])
    assert in_fiber(pt)
    word = [OpTri(necklace({"a*b*": 1}, starred=True)), Tri(necklace({"ab": 1}))]
    assert in_fiber(act_word(word, pt))
