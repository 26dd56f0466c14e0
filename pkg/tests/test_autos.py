import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsymp.autos import (FOURIER_DATA, Aff, AffineData, OpTri, Tri, affine_endo, compile_word,
                         compose, fourier, fourier_inverse, identity_endo, in_p_subgroup,
                         invert_word, is_symplectic, lambda_op, lambda_tri, necklace_from_poly,
                         ptaut_equal, z_lambda)
from qsymp.exactnum import Poly, Scalar
from qsymp.generators import random_affine, random_necklace, random_tame_word
from qsymp.pathalg import STARRED, UNSTARRED, NcPoly

from helpers import necklace

seeds = st.integers(0, 10**6)


def test_lambda_aab_images():
    phi = lambda_tri(necklace({"aab": 1}))
    x, y = NcPoly.arrow("x"), NcPoly.arrow("y")
    a = NcPoly.arrow("a")
    assert phi["a*"] == NcPoly.arrow("a*") + a * x * y + x * y * a
    assert phi["x*"] == NcPoly.arrow("x*") + y * a * a
    assert phi["y*"] == NcPoly.arrow("y*") + a * a * x
    for r in ("a", "x", "y"):
        assert phi[r] == NcPoly.arrow(r)


def test_lambda_rejects_wrong_alphabet():
    with pytest.raises(ValueError):
        lambda_tri(necklace({"a*": 1}, starred=True))
    with pytest.raises(ValueError):
        lambda_op(necklace({"a": 1}))


def test_affine_validation():
    with pytest.raises(ValueError):
        AffineData(((2, 0), (0, 1)), (0, 0), ((1, 0), (0, 1)))
    with pytest.raises(ValueError):
        AffineData(((1, 0), (0, 1)), (0, 0), ((1, 1), (1, 1)))


def test_fourier_inverse_pair():
    assert compose(fourier(), fourier_inverse()) == identity_endo()
    assert is_symplectic(fourier())
    assert fourier()["a"] == -NcPoly.arrow("a*")
    assert fourier()["a*"] == NcPoly.arrow("a")


def test_z_lambda_is_central_scaling():
    z = z_lambda(3)
    assert z["x"] == NcPoly.arrow("x").scale(3)
    assert z["y"] == NcPoly.arrow("y").scale(Scalar(1) / 3)
    assert ptaut_equal(identity_endo(), z) == 3
    assert ptaut_equal(identity_endo(), fourier()) is None


def test_necklace_from_poly():
    p = Poly([1, 0, 2])
    assert necklace_from_poly(p, "unstarred") == necklace({"b": 1, "aab": 2})
    assert necklace_from_poly(p, "starred", with_b=False) == necklace({"a*a*": 2}, starred=True)


@pytest.mark.parametrize("gen, ok", [
    (Tri(necklace({"aab": 1, "b": 2})), True),
    (Tri(necklace({"aa": 1})), True),
    (Tri(necklace({"abab": 1})), False),
    (OpTri(necklace({"a*b*": 1}, starred=True)), True),
    (Aff(FOURIER_DATA), True),
    (Aff(AffineData(((1, 0), (0, 1)), (1, 0), ((1, 0), (0, 1)))), False),
    (Aff(AffineData(((1, 1), (0, 1)), (0, 0), ((1, 0), (0, 1)))), False),
])
def test_in_p_subgroup(gen, ok):
    assert in_p_subgroup(gen) is ok


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_generators_symplectic(seed):
    rng = random.Random(seed)
    assert is_symplectic(lambda_tri(random_necklace(rng, UNSTARRED, 3, 4)))
    assert is_symplectic(lambda_op(random_necklace(rng, STARRED, 3, 4)))
    assert is_symplectic(affine_endo(random_affine(rng)))


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_lambda_additive(seed):
    rng = random.Random(seed)
    f, g = random_necklace(rng, UNSTARRED, 2, 3), random_necklace(rng, UNSTARRED, 2, 3)
    assert compose(lambda_tri(f), lambda_tri(g)) == lambda_tri(f + g)
    assert compose(lambda_tri(f), lambda_tri(-f)) == identity_endo()


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_word_inverse(seed):
    rng = random.Random(seed)
    word = random_tame_word(rng, 2, max_terms=2, max_len=2)
    assert compile_word(word + invert_word(word)) == identity_endo()


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_affine_inverse(seed):
    d = random_affine(random.Random(seed))
    assert compose(affine_endo(d), affine_endo(d.inverse())) == identity_endo()
