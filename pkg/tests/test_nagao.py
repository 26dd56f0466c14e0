import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsymp.autos import compose, identity_endo, ptaut_equal
from qsymp.exactnum import Poly, Scalar
from qsymp.nagao import (SWAP, GammaElem, NonUnitDeterminant, NotInB2, b2_split, gamma_mul,
                         i_map, is_alternating, j1, j2, j3, k_map, lower, nagao_decompose,
                         pm_mul, polymat, reassemble, upper, valid_word)
from qsymp.pathalg import NcPoly
from qsymp.suites import random_unit_polymat

z = Poly.z()
seeds = st.integers(0, 10**6)


def test_upper_unit_decomposes_through_swap():
    word = nagao_decompose(upper(z))
    assert word == [("C", SWAP), ("B", lower(z)), ("C", SWAP)]
    assert reassemble(word) == upper(z)


def test_constant_is_single_factor():
    m = polymat([[1, 2], [3, 4]])
    assert nagao_decompose(m) == [("C", m)]


def test_non_unit_determinant():
    with pytest.raises(NonUnitDeterminant):
        nagao_decompose(polymat([[z, 0], [0, 1]]))
    with pytest.raises(NonUnitDeterminant):
        nagao_decompose(polymat([[1, 1], [1, 1]]))


def test_b2_split():
    u, diag = b2_split(polymat([[2, 0], [z, 3]]))
    assert u == z * Poly.const(Scalar(1) / 2)
    assert diag == (2, 3)
    with pytest.raises(NotInB2):
        b2_split(polymat([[z, 0], [0, 1]]))


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_roundtrip_and_alternation(seed):
    m = random_unit_polymat(random.Random(seed), 6, 3)
    word = nagao_decompose(m)
    assert reassemble(word) == m
    assert is_alternating(word) and valid_word(word)


def test_j1_matches_j2_on_constants():
    b = ((Scalar(2), Scalar(0)), (Scalar(-1), Scalar(3)))
    assert j1(b) == j2(b)


def test_k_of_upper_unitriangular():
    phi = k_map(upper(z))
    x, y, xs, ys, as_ = (NcPoly.arrow(r) for r in ("x", "y", "x*", "y*", "a*"))
    assert phi["x*"] == xs - y * as_
    assert phi["y*"] == ys - as_ * x
    for r in ("a*", "x", "y"):
        assert phi[r] == NcPoly.arrow(r)
    # the loop a picks up the image of b
    assert phi["a"] == NcPoly.arrow("a") + x * y


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_k_is_homomorphism(seed):
    rng = random.Random(seed)
    m1, m2 = random_unit_polymat(rng, 3, 2), random_unit_polymat(rng, 3, 2)
    assert k_map(pm_mul(m1, m2)) == compose(k_map(m1), k_map(m2))


def test_k_identity():
    assert k_map(polymat([[1, 0], [0, 1]])) == identity_endo()


def test_j3_rejects_constant_term():
    with pytest.raises(ValueError):
        j3(Poly([1, 1]))
    assert compose(j3(z), j3(-z)) == identity_endo()


def test_gamma_projective_normalisation():
    g = GammaElem(z, polymat([[2, 0], [0, 2]]))
    assert g.M == polymat([[1, 0], [0, 1]])
    assert ptaut_equal(i_map(g), i_map(GammaElem(z, polymat([[1, 0], [0, 1]])))) == 1


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_i_is_projective_homomorphism(seed):
    rng = random.Random(seed)
    g1 = GammaElem(Poly([0, rng.randint(-2, 2)]), random_unit_polymat(rng, 2, 2))
    g2 = GammaElem(Poly([0, 0, rng.randint(-2, 2)]), random_unit_polymat(rng, 2, 2))
    assert ptaut_equal(compose(i_map(g1), i_map(g2)), i_map(gamma_mul(g1, g2))) is not None
