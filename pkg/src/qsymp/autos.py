"""Tame symplectic automorphisms of the path algebra.

An ``EndoA`` stores the images of the six arrows.  ``compose(phi, psi)`` is
substitution: ``compose(phi, psi)(r) = phi(psi(r))``.  On representation points
this is a right action, so a word of generators ``[g1, g2, ...]`` applied in that
order compiles to ``compose(g1, compose(g2, ...))``.
"""

from dataclasses import dataclass
from functools import reduce

from . import linalg
from .exactnum import ONE, as_scalar
from .pathalg import (ARROWS, E1, E2, ENDPOINTS, STARRED, UNSTARRED, NcPoly,
                      NecklaceElem, necklace_derive, substitute_loops,
                      symplectic_element)


class EndoA:
    """Algebra endomorphism given by the images of the six arrows."""

    __slots__ = ("images",)

    def __init__(self, images):
        imgs = {}
        for r in ARROWS:
            u = images.get(r, NcPoly.arrow(r))
            ends = u.endpoints()
            if ends and ends != {ENDPOINTS[r]}:
                raise ValueError(f"image of {r} has endpoints {ends}, expected {ENDPOINTS[r]}")
            imgs[r] = u
        object.__setattr__(self, "images", imgs)

    def __setattr__(self, name, value):
        raise AttributeError("EndoA is immutable")

    def __getitem__(self, arrow):
        return self.images[arrow]

    def __eq__(self, other):
        return isinstance(other, EndoA) and self.images == other.images

    def __hash__(self):
        return hash(tuple(self.images[r] for r in ARROWS))

    def apply(self, u):
        """Extend to the whole algebra multiplicatively and linearly."""
        out = NcPoly()
        cache = {}
        for p, c in u.terms.items():
            if p == E1 or p == E2:
                out = out + NcPoly({p: c})
                continue
            img = cache.get(p)
            if img is None:
                img = reduce(lambda acc, r: acc * self.images[r], p[1:], self.images[p[0]])
                cache[p] = img
            out = out + img.scale(c)
        return out

    def __repr__(self):
        return "EndoA(" + ", ".join(f"{r}↦{self.images[r]}" for r in ARROWS) + ")"


def identity_endo():
    return EndoA({})


def compose(phi, psi):
    """Substitution ``r -> phi(psi(r))``."""
    return EndoA({r: phi.apply(psi[r]) for r in ARROWS})


def compose_all(maps):
    return reduce(compose, maps, identity_endo())


def is_symplectic(phi):
    c = symplectic_element()
    return phi.apply(c) == c


def _e1(c=ONE):
    return NcPoly({E1: c})


def lambda_tri(f):
    """Strictly triangular generator: fixes a, x, y."""
    if f.alphabet != UNSTARRED:
        raise ValueError("lambda_tri expects a necklace over {a, b}")
    da = substitute_loops(necklace_derive(f, "a"), "unstarred")
    db = substitute_loops(necklace_derive(f, "b"), "unstarred")
    x, y = NcPoly.arrow("x"), NcPoly.arrow("y")
    return EndoA({
        "a*": NcPoly.arrow("a*") + da,
        "x*": NcPoly.arrow("x*") + y * db,
        "y*": NcPoly.arrow("y*") + db * x,
    })


def lambda_op(f):
    """Strictly op-triangular generator: fixes a*, x*, y*."""
    if f.alphabet != STARRED:
        raise ValueError("lambda_op expects a necklace over {a*, b*}")
    da = substitute_loops(necklace_derive(f, "a*"), "starred")
    db = substitute_loops(necklace_derive(f, "b*"), "starred")
    xs, ys = NcPoly.arrow("x*"), NcPoly.arrow("y*")
    return EndoA({
        "a": NcPoly.arrow("a") + da,
        "x": NcPoly.arrow("x") + db * ys,
        "y": NcPoly.arrow("y") + xs * db,
    })


def _det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


@dataclass(frozen=True)
class AffineData:
    """S in SL2 acting on span(a, a*), translation t, and T in GL2 on the x/y arrows."""

    S: tuple
    t: tuple
    T: tuple

    def __post_init__(self):
        S = linalg.mat(self.S)
        T = linalg.mat(self.T)
        t = tuple(as_scalar(v) for v in self.t)
        if linalg.shape(S) != (2, 2) or linalg.shape(T) != (2, 2) or len(t) != 2:
            raise ValueError("affine data needs 2x2 S, 2x2 T and a pair t")
        if _det2(S) != 1:
            raise ValueError("det S must be 1")
        if not _det2(T):
            raise linalg.SingularMatrixError("T is singular")
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "T", T)
        object.__setattr__(self, "t", t)

    def inverse(self):
        Si = linalg.inverse(self.S)
        ti = linalg.matneg(linalg.matmul(Si, tuple((v,) for v in self.t)))
        return AffineData(Si, (ti[0][0], ti[1][0]), linalg.inverse(self.T))


def affine_endo(d):
    """(a; a*) -> S (a; a*) + t e1, (-x; y*) -> T (-x; y*), (x*  y) -> (x*  y) T^-1."""
    (s11, s12), (s21, s22) = d.S
    (t11, t12), (t21, t22) = d.T
    (r11, r12), (r21, r22) = linalg.inverse(d.T)
    a, as_ = NcPoly.arrow("a"), NcPoly.arrow("a*")
    x, ys = NcPoly.arrow("x"), NcPoly.arrow("y*")
    xs, y = NcPoly.arrow("x*"), NcPoly.arrow("y")
    return EndoA({
        "a": a.scale(s11) + as_.scale(s12) + _e1(d.t[0]),
        "a*": a.scale(s21) + as_.scale(s22) + _e1(d.t[1]),
        "x": x.scale(t11) - ys.scale(t12),
        "y*": ys.scale(t22) - x.scale(t21),
        "x*": xs.scale(r11) + y.scale(r21),
        "y": xs.scale(r12) + y.scale(r22),
    })


FOURIER_DATA = AffineData(((0, -1), (1, 0)), (0, 0), ((0, 1), (-1, 0)))


def fourier():
    return affine_endo(FOURIER_DATA)


def fourier_inverse():
    return affine_endo(FOURIER_DATA.inverse())


def z_lambda(lam):
    lam = as_scalar(lam)
    return affine_endo(AffineData(linalg.identity(2), (0, 0), linalg.diag([lam, lam])))


def ptaut_equal(phi, psi):
    """Return lam with psi = compose(phi, z_lam), or None."""
    if phi["a"] != psi["a"] or phi["a*"] != psi["a*"]:
        return None
    fx, gx = phi["x"], psi["x"]
    if not fx or not gx:
        return None
    path, c = min(fx.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
    if path not in gx.terms:
        return None
    lam = gx.terms[path] / c
    inv = lam.inverse()
    for r, s in (("x", lam), ("y*", lam), ("x*", inv), ("y", inv)):
        if psi[r] != phi[r].scale(s):
            return None
    return lam


# ---------------------------------------------------------------------------
# words in tame generators


@dataclass(frozen=True)
class Tri:
    f: NecklaceElem

    def compile(self):
        return lambda_tri(self.f)

    def inverse(self):
        return Tri(-self.f)


@dataclass(frozen=True)
class OpTri:
    f: NecklaceElem

    def compile(self):
        return lambda_op(self.f)

    def inverse(self):
        return OpTri(-self.f)


@dataclass(frozen=True)
class Aff:
    d: AffineData

    def compile(self):
        return affine_endo(self.d)

    def inverse(self):
        return Aff(self.d.inverse())


def compile_word(word):
    """Compile generators listed in the order they act on points."""
    return compose_all(g.compile() for g in word)


def invert_word(word):
    return [g.inverse() for g in reversed(word)]


_FOURIER_POWERS = None


def _s_fourier_powers():
    global _FOURIER_POWERS
    if _FOURIER_POWERS is None:
        s = FOURIER_DATA.S
        powers = [linalg.identity(2)]
        for _ in range(3):
            powers.append(linalg.matmul(powers[-1], s))
        _FOURIER_POWERS = powers
    return _FOURIER_POWERS


def in_p_subgroup(gen):
    """Whether a generator is one of the restricted kinds allowed during normalisation.

    Triangular generators must be built from words a^k (k >= 1) or a^k b,
    op-triangular ones from a*^k (k >= 1) or a*^k b*, and affine ones must have
    t = 0 with S a power of the Fourier rotation.
    """
    if isinstance(gen, Tri):
        return all(_shape_ok(w, "a", "b") for w in gen.f.terms)
    if isinstance(gen, OpTri):
        return all(_shape_ok(w, "a*", "b*") for w in gen.f.terms)
    if isinstance(gen, Aff):
        return (not any(gen.d.t)) and any(gen.d.S == s for s in _s_fourier_powers())
    return False


def _shape_ok(word, a, b):
    if all(x == a for x in word):
        return len(word) >= 1
    return word[-1] == b and all(x == a for x in word[:-1])


def necklace_from_poly(p, mode, with_b=True):
    """p(a) b  (or p(a*) b* when ``mode == "starred"``) as a necklace element."""
    alphabet = UNSTARRED if mode == "unstarred" else STARRED
    a, b = alphabet
    terms = {}
    for k, c in enumerate(p.coeffs):
        if c:
            word = (a,) * k + ((b,) if with_b else ())
            if word:
                terms[word] = c
    return NecklaceElem(alphabet, terms)


__all__ = [
    "EndoA", "identity_endo", "compose", "compose_all", "is_symplectic",
    "lambda_tri", "lambda_op", "AffineData", "affine_endo", "fourier",
    "fourier_inverse", "z_lambda", "ptaut_equal", "Tri", "OpTri", "Aff",
    "compile_word", "invert_word", "in_p_subgroup", "necklace_from_poly",
    "FOURIER_DATA",
]
