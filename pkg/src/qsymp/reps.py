"""Representation points with dimension vector (n, 1) and the actions on them."""

import random
from dataclasses import dataclass

from . import linalg
from .exactnum import ONE, Scalar, as_scalar, poly_gcd
from .linalg import matadd, matmul, matneg, matsub
from .pathalg import E1, E2


@dataclass(frozen=True)
class RepPoint:
    """(A, B, X1, X2, Y1, Y2): A, B are n x n, X1, X2 are n x 1, Y1, Y2 are 1 x n."""

    n: int
    tau: Scalar
    A: tuple
    B: tuple
    X1: tuple
    X2: tuple
    Y1: tuple
    Y2: tuple

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise ValueError("n must be positive")
        object.__setattr__(self, "tau", as_scalar(self.tau))
        expected = {"A": (n, n), "B": (n, n), "X1": (n, 1), "X2": (n, 1),
                    "Y1": (1, n), "Y2": (1, n)}
        for name, shp in expected.items():
            m = linalg.mat(getattr(self, name))
            if linalg.shape(m) != shp:
                raise ValueError(f"{name} has shape {linalg.shape(m)}, expected {shp}")
            object.__setattr__(self, name, m)

    def arrow_matrix(self, name):
        return {
            "a": self.A, "a*": self.B, "x": self.X1, "y*": self.X2,
            "y": self.Y1, "x*": self.Y2,
        }[name]

    def replace(self, **kw):
        data = {k: getattr(self, k) for k in ("n", "tau", "A", "B", "X1", "X2", "Y1", "Y2")}
        data.update(kw)
        return RepPoint(**data)


def to_vform(pt):
    """Return (X, Y, v, w) with v = [X1 | -X2] (n x 2) and w = [Y2 ; Y1] (2 x n)."""
    v = linalg.hstack(pt.X1, matneg(pt.X2))
    w = linalg.vstack(pt.Y2, pt.Y1)
    return pt.A, pt.B, v, w


def from_vform(X, Y, v, w, tau=ONE):
    X, Y, v, w = (linalg.mat(m) for m in (X, Y, v, w))
    n = len(X)
    if linalg.shape(v) != (n, 2) or linalg.shape(w) != (2, n):
        raise ValueError("v must be n x 2 and w must be 2 x n")
    return RepPoint(n, tau, X, Y, linalg.column(v, 0), matneg(linalg.column(v, 1)),
                    linalg.row(w, 1), linalg.row(w, 0))


def moment_mu(X, Y, v, w):
    return matadd(linalg.commutator(X, Y), matmul(v, w))


def moment_nu(pt):
    first = matsub(matadd(linalg.commutator(pt.A, pt.B), matmul(pt.X1, pt.Y2)),
                   matmul(pt.X2, pt.Y1))
    second = matsub(matmul(pt.Y1, pt.X2), matmul(pt.Y2, pt.X1))[0][0]
    return first, second


def in_fiber(pt):
    first, second = moment_nu(pt)
    return (first == linalg.matscale(linalg.identity(pt.n), pt.tau)
            and second == -pt.tau * pt.n)


def in_Mn(pt):
    return linalg.is_zero(pt.X2) and linalg.is_zero(pt.Y1)


class NonHomogeneousError(ValueError):
    pass


def _path_matrix(path, pt, memo):
    """Product of arrow matrices along ``path`` in written order, memoised on suffixes."""
    hit = memo.get(path)
    if hit is not None:
        return hit
    if path == E1:
        out = linalg.identity(pt.n)
    elif path == E2:
        out = ((ONE,),)
    elif len(path) == 1:
        out = pt.arrow_matrix(path[0])
    else:
        out = matmul(pt.arrow_matrix(path[0]), _path_matrix(path[1:], pt, memo))
    memo[path] = out
    return out


def evaluate(u, pt, memo=None):
    """Evaluate an endpoint-homogeneous NcPoly at a point."""
    ends = u.endpoints()
    if len(ends) > 1:
        raise NonHomogeneousError(f"mixed endpoints {ends}")
    if memo is None:
        memo = {}
    if not ends:
        return None
    (src, tgt), = ends
    dim = {1: pt.n, 2: 1}
    out = linalg.zeros(dim[tgt], dim[src])
    for p, c in u.terms.items():
        out = matadd(out, linalg.matscale(_path_matrix(p, pt, memo), c))
    return out


def _evaluate_or_zero(u, pt, shp, memo):
    m = evaluate(u, pt, memo)
    return linalg.zeros(*shp) if m is None else m


def act_endo(phi, pt):
    """Send pt to (phi(a)(pt), phi(a*)(pt), ...) -- a right action."""
    memo = {}
    n = pt.n
    shapes = {"a": (n, n), "a*": (n, n), "x": (n, 1), "y*": (n, 1), "y": (1, n), "x*": (1, n)}
    img = {r: _evaluate_or_zero(phi[r], pt, shapes[r], memo) for r in shapes}
    return RepPoint(n, pt.tau, img["a"], img["a*"], img["x"], img["y*"], img["y"], img["x*"])


def act_word(word, pt):
    """Apply tame generators one at a time, in word order.

    Equal to ``act_endo(compile_word(word), pt)`` by the right-action law, but
    avoids the term growth of composing the generators symbolically.
    """
    for g in word:
        pt = act_endo(g.compile(), pt)
    return pt


def gl_act(g, pt):
    g = linalg.mat(g)
    gi = linalg.inverse(g)
    return RepPoint(pt.n, pt.tau, matmul(matmul(g, pt.A), gi), matmul(matmul(g, pt.B), gi),
                    matmul(g, pt.X1), matmul(g, pt.X2), matmul(pt.Y1, gi), matmul(pt.Y2, gi))


def cm_point(n, tau, x, p):
    """Calogero-Moser point: A = diag(x), B_ij = -tau/(x_i - x_j), v = (1, 0), w = (tau, 0)."""
    tau = as_scalar(tau)
    if not tau:
        raise ValueError("tau must be nonzero")
    x = [as_scalar(v) for v in x]
    p = [as_scalar(v) for v in p]
    if len(x) != n or len(p) != n:
        raise ValueError("x and p must have length n")
    if len(set(x)) != n:
        raise ValueError("x entries must be pairwise distinct")
    B = tuple(tuple(p[i] if i == j else -tau / (x[i] - x[j]) for j in range(n))
              for i in range(n))
    ones_col = tuple((ONE,) for _ in range(n))
    return RepPoint(n, tau, linalg.diag(x), B, ones_col, linalg.zeros(n, 1),
                    linalg.zeros(1, n), ((tau,) * n,))


def charpoly(m):
    return linalg.charpoly(m)


def is_regss(m):
    """Distinct eigenvalues (hence diagonalisable): the characteristic polynomial is squarefree."""
    cp = linalg.charpoly(m)
    return poly_gcd(cp, cp.derivative()).degree == 0


def random_scalar(rng, bound=5, complex_part=False):
    out = Scalar(rng.randint(-bound, bound)) / rng.randint(1, 3)
    if complex_part and rng.random() < 0.3:
        out = out + Scalar(0, rng.randint(-bound, bound)) / rng.randint(1, 3)
    return out


def random_invertible(rng, n, bound=3):
    while True:
        g = tuple(tuple(Scalar(rng.randint(-bound, bound)) for _ in range(n)) for _ in range(n))
        if linalg.det(g):
            return g


def random_cm_point(rng, n, tau=ONE):
    xs = set()
    while len(xs) < n:
        xs.add(random_scalar(rng, bound=6))
    x = sorted(xs, key=lambda s: (s.re, s.im))
    p = [random_scalar(rng, complex_part=True) for _ in range(n)]
    return cm_point(n, tau, x, p)


def random_fiber_point(n, tau=ONE, seed=0, rng=None, word_len=4):
    """Scrambled Calogero-Moser point; membership in the fiber is checked, not assumed."""
    # deferred: generators imports this module
    from .generators import random_tame_word

    if rng is None:
        rng = random.Random(f"fiber:{n}:{tau}:{seed}")
    pt = random_cm_point(rng, n, tau)
    word = random_tame_word(rng, rng.randint(1, word_len), max_terms=2, max_len=3)
    pt = act_word(word, pt)
    pt = gl_act(random_invertible(rng, n), pt)
    if not in_fiber(pt):
        raise AssertionError("scrambled point left the moment fiber")
    return pt


__all__ = [
    "RepPoint", "to_vform", "from_vform", "moment_mu", "moment_nu", "in_fiber",
    "in_Mn", "evaluate", "act_endo", "act_word", "gl_act", "cm_point", "charpoly", "is_regss",
    "random_fiber_point", "random_cm_point", "random_scalar", "random_invertible",
    "NonHomogeneousError",
]
