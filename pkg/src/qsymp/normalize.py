"""Move a fiber point with a regular semisimple X or Y into the slice v_2 = 0, w_2 = 0.

Only generators from the restricted family checked by ``autos.in_p_subgroup`` are
used: Fourier-type affine maps, column mixes (I, T), Lambda(-p(a) b) and
Lambda'(-q(a*) b*).  The output is verified before it is returned.
"""

import random

from . import linalg
from .autos import (FOURIER_DATA, Aff, AffineData, OpTri, Tri, in_p_subgroup,
                    necklace_from_poly)
from .exactnum import Poly
from .generators import random_p_generator
from .linalg import SingularMatrixError, matmul
from .reps import act_endo, act_word, in_fiber, in_Mn, is_regss, random_invertible, to_vform


class NotRegularSemisimple(ValueError):
    pass


class NormalizationFailed(RuntimeError):
    pass


def _krylov_columns(X, v1, n):
    cols = [v1]
    for _ in range(n - 1):
        cols.append(matmul(X, cols[-1]))
    return linalg.hstack(*cols)


def _kill_v2(pt):
    """Tri(-p(a) b) with p(X) v_1 = -v_2, found from the Krylov basis of v_1."""
    X, _, v, _ = to_vform(pt)
    n = pt.n
    v1, v2 = linalg.column(v, 0), linalg.column(v, 1)
    K = _krylov_columns(X, v1, n)
    coeffs = linalg.solve(K, linalg.matneg(v2))
    p = Poly([c[0] for c in coeffs])
    if p.is_zero():
        return None
    return Tri(-necklace_from_poly(p, "unstarred"))


def _kill_w2(pt):
    """OpTri(-q(a*) b*) with w_1 q(Y) = w_2, from the row Krylov basis of w_1."""
    _, Y, _, w = to_vform(pt)
    n = pt.n
    w1, w2 = linalg.row(w, 0), linalg.row(w, 1)
    rows = [w1]
    for _ in range(n - 1):
        rows.append(matmul(rows[-1], Y))
    L = linalg.vstack(*rows)
    coeffs = linalg.solve(linalg.transpose(L), linalg.transpose(w2))
    q = Poly([c[0] for c in coeffs])
    if q.is_zero():
        return None
    return OpTri(-necklace_from_poly(q, "starred"))


def _attempt(pt):
    """One deterministic pass; raises SingularMatrixError when a system degenerates."""
    word = []
    for step in (_kill_v2, _kill_w2):
        g = step(pt)
        if g is not None:
            word.append(g)
            pt = act_endo(g.compile(), pt)
    return word, pt


def normalize_to_Mn(pt, seed=0, max_attempts=24):
    """Return (word, gl, result) with result = word applied to pt and result in M_n.

    ``gl`` is always the identity: no conjugation is needed because the Krylov
    systems are solved directly in the given basis.
    """
    n = pt.n
    gl = linalg.identity(n)
    if in_Mn(pt):
        return [], gl, pt
    if not in_fiber(pt):
        raise NormalizationFailed("point is not in the moment fiber")
    start = pt
    word = []
    if not is_regss(pt.A):
        if not is_regss(pt.B):
            raise NotRegularSemisimple("neither X nor Y is regular semisimple")
        g = Aff(FOURIER_DATA.inverse())
        word.append(g)
        pt = act_endo(g.compile(), pt)

    rng = random.Random(f"normalize:{seed}")
    for attempt in range(max_attempts):
        try:
            tail, result = _attempt(pt)
        except SingularMatrixError:
            # column mix first; a general restricted generator if that keeps failing
            if attempt % 3 < 2:
                g = Aff(AffineData(linalg.identity(2), (0, 0), random_invertible(rng, 2, 2)))
            else:
                g = random_p_generator(rng, max_deg=1)
            word.append(g)
            pt = act_endo(g.compile(), pt)
            continue
        word.extend(tail)
        _self_check(start, word, result)
        return word, gl, result
    raise NormalizationFailed(f"no nonsingular system after {max_attempts} attempts")


def _self_check(start, word, result):
    if not in_Mn(result):
        raise NormalizationFailed("result is not in M_n")
    if not in_fiber(result):
        raise NormalizationFailed("result left the moment fiber")
    if not all(in_p_subgroup(g) for g in word):
        raise NormalizationFailed("word uses a generator outside the allowed family")
    if act_word(word, start) != result:
        raise NormalizationFailed("the word does not reproduce the result")
