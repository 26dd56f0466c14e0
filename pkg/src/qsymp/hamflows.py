"""Hamiltonians on V_{n,2}, their exact Poisson brackets, and closed-form flows.

Coordinates are (X, Y, v, w) with v of shape n x 2 and w of shape 2 x n.  Write
P = v e12 w = v_1 w_2 and Q = v e21 w = v_2 w_1 (v_i a column of v, w_i a row of
w).  The Hamiltonians are

* ``J(k, alpha) = tr Y^k v alpha w``
* ``H(f) = tr f(X, P)`` for f over {a, b}
* ``Hp(f) = tr f(Y, Q)`` for f over {a*, b*}

The flow of a function h is taken along dX_ij/dt = dh/dY_ji, dY_ji/dt = -dh/dX_ij,
dv_ij/dt = dh/dw_ji, dw_ji/dt = -dh/dv_ij.
"""

from dataclasses import dataclass

from . import linalg
from .exactnum import ONE, ZERO, Dual, as_scalar
from .linalg import matadd, matmul, matpow, matscale, matsub
from .pathalg import FOUR_LETTERS, STARRED, UNSTARRED, NecklaceElem
from .reps import from_vform, to_vform


@dataclass(frozen=True)
class J:
    k: int
    alpha: tuple

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be nonnegative")
        a = linalg.mat(self.alpha)
        if linalg.shape(a) != (2, 2):
            raise ValueError("alpha must be 2 x 2")
        object.__setattr__(self, "alpha", a)


@dataclass(frozen=True, eq=False)
class H:
    f: NecklaceElem

    def __post_init__(self):
        if self.f.alphabet != UNSTARRED:
            raise ValueError("H expects a necklace over {a, b}")


@dataclass(frozen=True, eq=False)
class Hp:
    f: NecklaceElem

    def __post_init__(self):
        if self.f.alphabet != STARRED:
            raise ValueError("Hp expects a necklace over {a*, b*}")


def _trace_word(word, mats, n):
    """Trace of the product of ``mats[letter]`` along ``word``."""
    if not word:
        return as_scalar(n)
    out = mats[word[0]]
    for letter in word[1:]:
        out = matmul(out, mats[letter])
    return linalg.trace(out)


def _outer(col, row_):
    return tuple(tuple(c * r for r in row_) for c in col)


def _p_q(v, w):
    v1 = [r[0] for r in v]
    v2 = [r[1] for r in v]
    return _outer(v1, w[1]), _outer(v2, w[0])


def _value(h, X, Y, v, w):
    n = len(X)
    if isinstance(h, J):
        return linalg.trace(matmul(matmul(matpow(Y, h.k), v), matmul(h.alpha, w)))
    P, Q = _p_q(v, w)
    if isinstance(h, H):
        mats = {"a": X, "b": P}
    elif isinstance(h, Hp):
        mats = {"a*": Y, "b*": Q}
    else:
        raise TypeError(f"unknown Hamiltonian {h!r}")
    acc = ZERO
    for word, c in h.f.terms.items():
        acc = acc + _trace_word(word, mats, n) * c
    return acc


def eval_ham(h, pt):
    return _value(h, *to_vform(pt))


def _coordinates(n):
    for name, (r, c) in (("X", (n, n)), ("Y", (n, n)), ("v", (n, 2)), ("w", (2, n))):
        for i in range(r):
            for j in range(c):
                yield name, i, j


def gradient(h, pt):
    """All first partial derivatives, computed exactly by dual numbers."""
    base = dict(zip("XYvw", to_vform(pt)))
    lifted = {k: tuple(tuple(Dual(x) for x in r) for r in m) for k, m in base.items()}
    grad = {}
    for name, i, j in _coordinates(pt.n):
        m = [list(r) for r in lifted[name]]
        m[i][j] = Dual(base[name][i][j], ONE)
        args = dict(lifted)
        args[name] = tuple(tuple(r) for r in m)
        val = _value(h, args["X"], args["Y"], args["v"], args["w"])
        grad[(name, i, j)] = val.der if isinstance(val, Dual) else ZERO
    return grad


def bracket_from_gradients(g1, g2, n):
    """{f, g} = sum dF/dY_ji dG/dX_ij - dF/dX_ij dG/dY_ji + (v, w analogue)."""
    acc = ZERO
    for i in range(n):
        for j in range(n):
            acc = acc + g1[("Y", j, i)] * g2[("X", i, j)] - g1[("X", i, j)] * g2[("Y", j, i)]
    for i in range(n):
        for j in range(2):
            acc = acc + g1[("w", j, i)] * g2[("v", i, j)] - g1[("v", i, j)] * g2[("w", j, i)]
    return acc


def poisson_bracket(h1, h2, pt, cache=None):
    """Exact Poisson bracket at a point; ``cache`` may hold gradients keyed by id(h)."""
    if cache is None:
        cache = {}
    grads = []
    for h in (h1, h2):
        key = id(h)
        if key not in cache:
            cache[key] = (h, gradient(h, pt))
        grads.append(cache[key][1])
    return bracket_from_gradients(grads[0], grads[1], pt.n)


def vector_field(h, pt):
    """Velocity (dX, dY, dv, dw) of the flow of h at pt, from exact gradients."""
    g = gradient(h, pt)
    n = pt.n
    dX = tuple(tuple(g[("Y", j, i)] for j in range(n)) for i in range(n))
    dY = tuple(tuple(-g[("X", j, i)] for j in range(n)) for i in range(n))
    dv = tuple(tuple(g[("w", j, i)] for j in range(2)) for i in range(n))
    dw = tuple(tuple(-g[("v", j, i)] for j in range(n)) for i in range(2))
    return dX, dY, dv, dw


# ---------------------------------------------------------------------------
# closed-form flows


def _blocks(word, a, b):
    """Split a cyclic word into blocks a^k b^l; returns [(k, l), ...]."""
    if b not in word:
        return [(len(word), 0)]
    if a not in word:
        return [(0, len(word))]
    start = next(i for i in range(len(word)) if word[i] == a and word[i - 1] == b)
    w = word[start:] + word[:start]
    blocks = []
    i = 0
    while i < len(w):
        k = 0
        while i < len(w) and w[i] == a:
            k += 1
            i += 1
        ell = 0
        while i < len(w) and w[i] == b:
            ell += 1
            i += 1
        blocks.append((k, ell))
    return blocks


def _block_sums(word, a, b, M, N):
    """Gradient sums of tr(word) in the letters a -> M and b -> N.

    Returns (Da, Sb) where, with blocks B_j = M^{k_j} N^{l_j} and R_j the cyclic
    product of the other blocks starting after j,
    Da = sum_j sum_{i=1..k_j} M^{k_j-i} N^{l_j} R_j M^{i-1} and
    Sb = sum_j sum_{i=1..l_j} N^{l_j-i} R_j M^{k_j} N^{i-1}.
    """
    n = len(M)
    blocks = _blocks(word, a, b)
    mats = [matmul(matpow(M, k), matpow(N, ell)) for k, ell in blocks]
    Da = linalg.zeros(n, n)
    Sb = linalg.zeros(n, n)
    r = len(blocks)
    for j, (k, ell) in enumerate(blocks):
        R = linalg.identity(n)
        for s in range(1, r):
            R = matmul(R, mats[(j + s) % r])
        for i in range(1, k + 1):
            term = matmul(matmul(matpow(M, k - i), matpow(N, ell)), matmul(R, matpow(M, i - 1)))
            Da = matadd(Da, term)
        for i in range(1, ell + 1):
            term = matmul(matmul(matpow(N, ell - i), R), matmul(matpow(M, k), matpow(N, i - 1)))
            Sb = matadd(Sb, term)
    return Da, Sb


def _weighted_sums(f, a, b, M, N):
    n = len(M)
    Da = linalg.zeros(n, n)
    Sb = linalg.zeros(n, n)
    for word, c in f.terms.items():
        da, sb = _block_sums(word, a, b, M, N)
        Da = matadd(Da, matscale(da, c))
        Sb = matadd(Sb, matscale(sb, c))
    return Da, Sb


def _split_v_w(v, w):
    v1 = linalg.column(v, 0)
    v2 = linalg.column(v, 1)
    return v1, v2, linalg.row(w, 0), linalg.row(w, 1)


def flow_H(f, t, pt):
    """Time-t flow of H(f): X, v_1, w_2 stay fixed; Y, v_2, w_1 move linearly in t."""
    if f.alphabet != UNSTARRED:
        raise ValueError("flow_H expects a necklace over {a, b}")
    t = as_scalar(t)
    X, Y, v, w = to_vform(pt)
    v1, v2, w1, w2 = _split_v_w(v, w)
    P, _ = _p_q(v, w)
    Da, Sb = _weighted_sums(f, "a", "b", X, P)
    Y_t = matsub(Y, matscale(Da, t))
    v2_t = matadd(v2, matscale(matmul(Sb, v1), t))
    w1_t = matsub(w1, matscale(matmul(w2, Sb), t))
    return from_vform(X, Y_t, linalg.hstack(v1, v2_t), linalg.vstack(w1_t, w2), pt.tau)


def flow_Hp(f, t, pt):
    """Time-t flow of Hp(f): Y, v_2, w_1 stay fixed; X, v_1, w_2 move linearly in t."""
    if f.alphabet != STARRED:
        raise ValueError("flow_Hp expects a necklace over {a*, b*}")
    t = as_scalar(t)
    X, Y, v, w = to_vform(pt)
    v1, v2, w1, w2 = _split_v_w(v, w)
    _, Q = _p_q(v, w)
    Ea, Sb = _weighted_sums(f, "a*", "b*", Y, Q)
    X_t = matadd(X, matscale(Ea, t))
    v1_t = matadd(v1, matscale(matmul(Sb, v2), t))
    w2_t = matsub(w2, matscale(matmul(w1, Sb), t))
    return from_vform(X_t, Y, linalg.hstack(v1_t, v2), linalg.vstack(w1, w2_t), pt.tau)


def flow(h, t, pt):
    """Flow of a Hamiltonian; J(k, c e21) is routed to Hp(c a*^k b*)."""
    if isinstance(h, H):
        return flow_H(h.f, t, pt)
    if isinstance(h, Hp):
        return flow_Hp(h.f, t, pt)
    if isinstance(h, J):
        (a11, a12), (a21, a22) = h.alpha
        if not (a11 or a12 or a22):
            word = ("a*",) * h.k + ("b*",)
            return flow_Hp(NecklaceElem(STARRED, [(word, a21)]), t, pt)
        if not (a11 or a21 or a22) and h.k == 0:
            return flow_H(NecklaceElem(UNSTARRED, [(("b",), a12)]), t, pt)
    raise ValueError("no polynomial flow is available for this Hamiltonian")


def verify_flow_theorem(f, pt):
    """Unit-time flow of H(f) against Lambda(-f) (or Hp(f) against Lambda'(-f))."""
    from .autos import lambda_op, lambda_tri
    from .reps import act_endo

    if f.alphabet == UNSTARRED:
        return flow_H(f, 1, pt) == act_endo(lambda_tri(-f), pt)
    if f.alphabet == STARRED:
        return flow_Hp(f, 1, pt) == act_endo(lambda_op(-f), pt)
    raise ValueError("alphabet must be {a, b} or {a*, b*}")


def sign_twist_b(f):
    """f(a*, b*) -> f(a*, -b*): flips the sign of every word with an odd number of b*."""
    return NecklaceElem(f.alphabet, {
        w: (-c if sum(1 for x in w if x == f.alphabet[1]) % 2 else c)
        for w, c in f.terms.items()})


# ---------------------------------------------------------------------------
# four-letter necklaces


def psi_eval(g, pt):
    """Evaluate a four-letter necklace at a -> X, b -> P, a* -> Y, b* -> Q."""
    if g.alphabet != FOUR_LETTERS:
        raise ValueError("psi_eval expects a four-letter necklace")
    X, Y, v, w = to_vform(pt)
    P, Q = _p_q(v, w)
    mats = {"a": X, "b": P, "a*": Y, "b*": Q}
    acc = ZERO
    for word, c in g.terms.items():
        acc = acc + _trace_word(word, mats, pt.n) * c
    return acc


def lie_morphism_sides(f1, f2, pt):
    """Both sides of {H(f1), Hp(f2)} = psi([f1, f2]) + n * (dropped constant)."""
    from .pathalg import necklace_bracket

    lhs = poisson_bracket(H(f1), Hp(f2), pt)
    value, const = necklace_bracket(f1, f2)
    return lhs, psi_eval(value, pt) + const * pt.n
