"""2x2 polynomial matrices, their amalgamated factorisation, and the maps into TAut.

GL2(K[z]) is the free product of GL2(K) and the lower-triangular group B2(K[z])
amalgamated over B2(K).  ``nagao_decompose`` writes a unit-determinant matrix as
an alternating product of constant factors (tag ``"C"``) and lower-triangular
factors with constant diagonal (tag ``"B"``).
"""

from dataclasses import dataclass
from functools import reduce

from . import linalg
from .autos import (AffineData, affine_endo, compose, identity_endo, lambda_op,
                    necklace_from_poly)
from .exactnum import Poly, as_scalar

P0 = Poly()
P1 = Poly.const(1)


class NonUnitDeterminant(ValueError):
    pass


class NotInB2(ValueError):
    pass


def polymat(entries):
    """Coerce a 2x2 nested structure (Poly, Scalar, int or coefficient list) to a PolyMat2."""
    def coerce(e):
        if isinstance(e, Poly):
            return e
        if isinstance(e, (list, tuple)):
            return Poly(e)
        return Poly.const(e)

    rows = tuple(tuple(coerce(e) for e in row) for row in entries)
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise ValueError("PolyMat2 must be 2 x 2")
    return rows


def pm_mul(m, n):
    return tuple(tuple(m[i][0] * n[0][j] + m[i][1] * n[1][j] for j in range(2))
                 for i in range(2))


def pm_det(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def pm_identity():
    return ((P1, P0), (P0, P1))


def pm_scale(m, c):
    c = as_scalar(c)
    return tuple(tuple(e * Poly.const(c) for e in row) for row in m)


def is_constant(m):
    return all(e.degree <= 0 for row in m for e in row)


def to_constant(m):
    return tuple(tuple(e.coeff(0) for e in row) for row in m)


def from_constant(c):
    return polymat(c)


def check_unit(m):
    d = pm_det(m)
    if d.degree != 0:
        raise NonUnitDeterminant(f"determinant {d} is not a nonzero constant")
    return d.coeff(0)


def lower(h):
    return ((P1, P0), (h, P1))


def upper(h):
    return ((P1, h), (P0, P1))


SWAP = ((P0, P1), (P1, P0))


def is_b2(m):
    return (m[0][1].is_zero() and m[0][0].degree == 0 and m[1][1].degree == 0)


def b2_split(m):
    """[[d1, 0], [m, d2]] = [[1, 0], [u, 1]] * diag(d1, d2); returns (u, (d1, d2))."""
    if not is_b2(m):
        raise NotInB2("matrix is not lower triangular with constant nonzero diagonal")
    d1, d2 = m[0][0].coeff(0), m[1][1].coeff(0)
    return m[1][0] * Poly.const(d1.inverse()), (d1, d2)


# ---------------------------------------------------------------------------
# factorisation


def _raw_factors(m):
    """Row-reduce the first column by Euclid; returns factors whose product is m."""
    ops = []
    cur = m
    while True:
        a, c = cur[0][0], cur[1][0]
        if a.is_zero() or c.is_zero():
            break
        if c.degree >= a.degree:
            q, _ = divmod(c, a)
            ops.append(("lower", q))
            cur = pm_mul(lower(-q), cur)
        else:
            q, _ = divmod(a, c)
            ops.append(("upper", q))
            cur = pm_mul(upper(-q), cur)
    if cur[1][0].is_zero():
        # upper triangular with constant diagonal
        h = cur[0][1] * Poly.const(cur[1][1].coeff(0).inverse())
        ops.append(("upper", h))
        cur = pm_mul(upper(-h), cur)
    else:
        # [[0, c12], [c21, m22]] with c12 constant
        h = cur[1][1] * Poly.const(-cur[0][1].coeff(0).inverse())
        ops.append(("lower", -h))
        cur = pm_mul(lower(h), cur)
    if not is_constant(cur):
        raise ArithmeticError("reduction did not reach a constant matrix")
    factors = []
    for kind, h in ops:
        if kind == "lower":
            factors.append(("B", lower(h)))
        else:
            factors.extend([("C", SWAP), ("B", lower(h)), ("C", SWAP)])
    factors.append(("C", cur))
    return factors


def _normalise(factors):
    changed = True
    while changed:
        changed = False
        out = []
        for tag, m in factors:
            if tag == "B" and is_constant(m):
                tag = "C"
                changed = True
            if out and out[-1][0] == tag:
                out[-1] = (tag, pm_mul(out[-1][1], m))
                changed = True
            else:
                out.append((tag, m))
        # a constant lower-triangular factor is absorbed by a neighbouring B
        for i, (tag, m) in enumerate(out):
            if tag == "C" and is_b2(m) and len(out) > 1:
                if i + 1 < len(out) and out[i + 1][0] == "B":
                    out[i + 1] = ("B", pm_mul(m, out[i + 1][1]))
                else:
                    out[i - 1] = ("B", pm_mul(out[i - 1][1], m))
                del out[i]
                changed = True
                break
        # drop identity constants between factors
        out = [(t, m) for t, m in out if not (t == "C" and m == pm_identity() and len(out) > 1)]
        factors = out
    return factors or [("C", pm_identity())]


def nagao_decompose(m):
    m = polymat(m)
    check_unit(m)
    if is_constant(m):
        return [("C", m)]
    return _normalise(_raw_factors(m))


def reassemble(word):
    return reduce(pm_mul, (m for _, m in word), pm_identity())


def is_alternating(word):
    return all(a[0] != b[0] for a, b in zip(word, word[1:]))


def valid_word(word):
    """Alternation plus the B-factor shape constraint."""
    if not is_alternating(word):
        return False
    for tag, m in word:
        if tag == "B" and not is_b2(m):
            return False
        if tag == "C" and (not is_constant(m) or not linalg.det(to_constant(m))):
            return False
    return True


# ---------------------------------------------------------------------------
# maps into the automorphism group


def j1(T):
    """Constant matrix T -> affine automorphism (I, T^t)."""
    T = linalg.mat(T)
    if not linalg.det(T):
        raise linalg.SingularMatrixError("T is singular")
    return affine_endo(AffineData(linalg.identity(2), (0, 0), linalg.transpose(T)))


def j2(m):
    u, (d1, d2) = b2_split(polymat(m))
    unip = lambda_op(-necklace_from_poly(u, "starred"))
    return compose(unip, j1(linalg.diag([d1, d2])))


def j3(p):
    p = p if isinstance(p, Poly) else Poly(p)
    if p.coeff(0):
        raise ValueError("p must have zero constant term")
    return lambda_op(-necklace_from_poly(p, "starred", with_b=False))


def k_map(m):
    word = nagao_decompose(m)
    images = (j1(to_constant(f)) if tag == "C" else j2(f) for tag, f in word)
    return reduce(compose, images, identity_endo())


@dataclass(frozen=True)
class GammaElem:
    """(p, M): p has zero constant term; M is stored up to scalars, normalised."""

    p: Poly
    M: tuple

    def __post_init__(self):
        p = self.p if isinstance(self.p, Poly) else Poly(self.p)
        if p.coeff(0):
            raise ValueError("p must have zero constant term")
        M = polymat(self.M)
        check_unit(M)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "M", normalise_projective(M))


def normalise_projective(m):
    """Scale so the first nonzero entry (row-major) is monic."""
    for row in m:
        for e in row:
            if not e.is_zero():
                return pm_scale(m, e.lc().inverse())
    raise NonUnitDeterminant("zero matrix")


def gamma_mul(g1, g2):
    return GammaElem(g1.p + g2.p, pm_mul(g1.M, g2.M))


def i_map(g):
    return compose(j3(g.p), k_map(g.M))


__all__ = [
    "polymat", "pm_mul", "pm_det", "pm_identity", "lower", "upper", "SWAP",
    "b2_split", "nagao_decompose", "reassemble", "is_alternating", "valid_word",
    "j1", "j2", "j3", "k_map", "GammaElem", "gamma_mul", "i_map",
    "normalise_projective", "NonUnitDeterminant", "NotInB2",
]
