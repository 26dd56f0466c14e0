"""Seeded random objects for the verification suites and property tests."""

from . import linalg
from .autos import FOURIER_DATA, Aff, AffineData, OpTri, Tri, necklace_from_poly
from .exactnum import Poly, Scalar
from .pathalg import STARRED, UNSTARRED, NecklaceElem
from .reps import random_invertible, random_scalar


def random_small_int(rng, bound=3, nonzero=False):
    while True:
        k = rng.randint(-bound, bound)
        if k or not nonzero:
            return k


def random_necklace(rng, alphabet, max_terms=4, max_len=6, min_len=1):
    """Random nonzero necklace element with up to ``max_terms`` words."""
    while True:
        terms = []
        for _ in range(rng.randint(1, max_terms)):
            length = rng.randint(min_len, max_len)
            word = tuple(rng.choice(alphabet) for _ in range(length))
            terms.append((word, Scalar(random_small_int(rng, nonzero=True)) / rng.randint(1, 2)))
        f = NecklaceElem(alphabet, terms)
        if f:
            return f


def random_sl2(rng, steps=3):
    m = linalg.identity(2)
    for _ in range(steps):
        k = random_small_int(rng, 2)
        e = ((1, k), (0, 1)) if rng.random() < 0.5 else ((1, 0), (k, 1))
        m = linalg.matmul(m, linalg.mat(e))
    return m


def random_affine(rng, translate=True):
    t = (random_scalar(rng, 2), random_scalar(rng, 2)) if translate else (0, 0)
    return AffineData(random_sl2(rng), t, random_invertible(rng, 2, bound=2))


def random_generator(rng, max_terms=2, max_len=3):
    kind = rng.choice(("tri", "optri", "aff"))
    if kind == "tri":
        return Tri(random_necklace(rng, UNSTARRED, max_terms, max_len))
    if kind == "optri":
        return OpTri(random_necklace(rng, STARRED, max_terms, max_len))
    return Aff(random_affine(rng))


def random_tame_word(rng, length, max_terms=2, max_len=3):
    return [random_generator(rng, max_terms, max_len) for _ in range(length)]


def random_poly(rng, max_deg, zero_constant=False, bound=3):
    coeffs = [Scalar(random_small_int(rng, bound)) for _ in range(max_deg + 1)]
    if zero_constant:
        coeffs[0] = Scalar(0)
    return Poly(coeffs)


def random_p_generator(rng, max_deg=2):
    """A generator from the restricted family used when normalising points."""
    kind = rng.choice(("tri", "optri", "aff"))
    if kind == "aff":
        s = linalg.identity(2)
        for _ in range(rng.randint(0, 3)):
            s = linalg.matmul(s, FOURIER_DATA.S)
        return Aff(AffineData(s, (0, 0), random_invertible(rng, 2, bound=2)))
    mode = "unstarred" if kind == "tri" else "starred"
    with_b = rng.random() < 0.7
    while True:
        p = random_poly(rng, max_deg, zero_constant=not with_b)
        f = necklace_from_poly(p, mode, with_b=with_b)
        if f:
            return Tri(f) if kind == "tri" else OpTri(f)


def random_p_word(rng, length, max_deg=2):
    return [random_p_generator(rng, max_deg) for _ in range(length)]
