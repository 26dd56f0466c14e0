"""Seeded verification suites, one per identity, with byte-stable reports."""

import random
import time
from dataclasses import dataclass, field

from . import linalg
from .autos import (compile_word, compose, fourier, fourier_inverse,
                    is_symplectic, lambda_op, lambda_tri, ptaut_equal)
from .exactnum import Poly, Scalar
from .generators import (random_necklace, random_p_word, random_poly,
                         random_small_int, random_tame_word)
from .hamflows import (H, J, eval_ham, flow_H, flow_Hp, lie_morphism_sides,
                       poisson_bracket)
from .nagao import (GammaElem, gamma_mul, i_map, j1, j2, j3, k_map, lower,
                    nagao_decompose, pm_identity, pm_mul, polymat, reassemble,
                    upper, valid_word)
from .normalize import NormalizationFailed, NotRegularSemisimple, normalize_to_Mn
from .pathalg import E1, STARRED, UNSTARRED, NcPoly, NecklaceElem, necklace_derive
from .reps import (act_endo, act_word, in_fiber, in_Mn, random_cm_point,
                   random_fiber_point, random_invertible)
from .serialize import necklace_to_json, poly_to_json, polymat_to_json, tameword_to_json


class UnknownSuite(ValueError):
    pass


@dataclass
class VerificationReport:
    suite: str
    trials: int
    seed: int
    params: dict
    checks: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self):
        return not self.failures

    def to_json(self, timing=False):
        out = {"suite": self.suite, "trials": self.trials, "seed": self.seed,
               "params": self.params, "checks": self.checks, "passed": self.passed,
               "failures": sorted(self.failures, key=lambda f: (f["trial"], f["check"]))}
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def summary(self, timing=False):
        status = "PASS" if self.passed else "FAIL"
        line = (f"{status} {self.suite}: {self.checks} checks, {len(self.failures)} failures "
                f"(trials={self.trials}, seed={self.seed})")
        if timing:
            line += f" [{self.elapsed:.2f}s]"
        return line


class _Trial:
    """Collects check outcomes for one trial."""

    def __init__(self, index):
        self.index = index
        self.checks = 0
        self.failures = []

    def check(self, name, ok, inputs=None, expected=None, actual=None):
        self.checks += 1
        if not ok:
            self.failures.append({"trial": self.index, "check": name, "inputs": inputs or {},
                                  "expected": expected, "actual": actual})
        return ok


def trial_rng(seed, suite, trial):
    return random.Random(f"{seed}:{suite}:{trial}")


def _fiber_point(rng, n_max):
    n = rng.randint(1, n_max)
    return random_fiber_point(n, rng=rng)


def _diff_fields(p, q):
    return [k for k in ("A", "B", "X1", "X2", "Y1", "Y2") if getattr(p, k) != getattr(q, k)]


# -- suites -----------------------------------------------------------------


def suite_flow_theorem(t, rng, n_max, deg_max):
    pt = _fiber_point(rng, n_max)
    f = random_necklace(rng, UNSTARRED, 4, deg_max)
    lhs, rhs = flow_H(f, 1, pt), act_endo(lambda_tri(-f), pt)
    t.check("flow_H(f,1) = Lambda(-f)", lhs == rhs,
            {"f": necklace_to_json(f), "n": pt.n}, "equal points", _diff_fields(lhs, rhs))
    g = random_necklace(rng, STARRED, 4, deg_max)
    lhs, rhs = flow_Hp(g, 1, pt), act_endo(lambda_op(-g), pt)
    t.check("flow_Hp(f,1) = Lambda'(-f)", lhs == rhs,
            {"f": necklace_to_json(g), "n": pt.n}, "equal points", _diff_fields(lhs, rhs))


def suite_symplecticity(t, rng, n_max, deg_max):
    word = random_tame_word(rng, rng.randint(1, 5), max_terms=2, max_len=min(deg_max, 2))
    t.check("compiled word preserves c", is_symplectic(compile_word(word)),
            {"word": tameword_to_json(word)})


ELEMENTARY = [tuple(tuple(Scalar(x) for x in row) for row in m) for m in
              ([[1 if (r, c) == (i, j) else 0 for c in range(2)] for r in range(2)]
               for i in range(2) for j in range(2))]


def suite_poisson_structure(t, rng, n_max, deg_max):
    pt = _fiber_point(rng, min(n_max, 3))
    cache = {}
    hams = {(k, a): J(k, ELEMENTARY[a]) for k in range(deg_max + 1) for a in range(4)}
    for (m, a), h1 in hams.items():
        for (ell, b), h2 in hams.items():
            if m + ell > deg_max:
                continue
            comm = linalg.commutator(ELEMENTARY[a], ELEMENTARY[b])
            lhs = poisson_bracket(h1, h2, pt, cache)
            rhs = eval_ham(J(m + ell, comm), pt)
            t.check("{J(m,alpha),J(l,beta)} = J(m+l,[alpha,beta])", lhs == rhs,
                    {"m": m, "l": ell, "alpha": a, "beta": b, "n": pt.n}, str(rhs), str(lhs))


def suite_h_commute(t, rng, n_max, deg_max):
    pt = _fiber_point(rng, min(n_max, 3))
    f1 = random_necklace(rng, UNSTARRED, 3, min(deg_max, 4))
    f2 = random_necklace(rng, UNSTARRED, 3, min(deg_max, 4))
    val = poisson_bracket(H(f1), H(f2), pt)
    t.check("{H(f1),H(f2)} = 0", not val,
            {"f1": necklace_to_json(f1), "f2": necklace_to_json(f2)}, "0", str(val))


def suite_lie_morphism(t, rng, n_max, deg_max):
    pt = _fiber_point(rng, min(n_max, 3))
    f1 = random_necklace(rng, UNSTARRED, 2, min(deg_max, 3))
    f2 = random_necklace(rng, STARRED, 2, min(deg_max, 3))
    lhs, rhs = lie_morphism_sides(f1, f2, pt)
    t.check("{H(f1),Hp(f2)} = psi([f1,f2]) + n*const", lhs == rhs,
            {"f1": necklace_to_json(f1), "f2": necklace_to_json(f2), "n": pt.n},
            str(rhs), str(lhs))


def suite_t_opt(t, rng, n_max, deg_max):
    f = random_necklace(rng, UNSTARRED, 4, deg_max)
    lhs = lambda_op(f.mirror())
    rhs = compose(fourier_inverse(), compose(lambda_tri(-f), fourier()))
    t.check("Lambda'(f(a*,b*)) = F-conjugate of Lambda(-f(a,b))", lhs == rhs,
            {"f": necklace_to_json(f)})


def _random_matrix_generator(rng, deg):
    r = rng.random()
    if r < 0.35:
        return lower(random_poly(rng, rng.randint(0, deg)))
    if r < 0.7:
        return upper(random_poly(rng, rng.randint(0, deg)))
    return polymat(random_invertible(rng, 2, 2))


def random_unit_polymat(rng, max_factors, deg):
    m = pm_identity()
    for _ in range(rng.randint(1, max_factors)):
        m = pm_mul(m, _random_matrix_generator(rng, deg))
    return m


def _max_degree(m):
    return max(e.degree for row in m for e in row)


def suite_nagao_roundtrip(t, rng, n_max, deg_max):
    m = random_unit_polymat(rng, 8, deg_max)
    while _max_degree(m) > deg_max:
        m = random_unit_polymat(rng, 8, deg_max)
    word = nagao_decompose(m)
    t.check("reassemble(decompose(M)) = M", reassemble(word) == m, {"M": polymat_to_json(m)})
    t.check("factors alternate", valid_word(word), {"M": polymat_to_json(m)})


def _random_b2_const(rng):
    return ((Scalar(random_small_int(rng, 3, nonzero=True)), Scalar(0)),
            (Scalar(random_small_int(rng, 3)), Scalar(random_small_int(rng, 3, nonzero=True))))


def suite_amalgamation(t, rng, n_max, deg_max):
    for _ in range(2):
        b = _random_b2_const(rng)
        t.check("j1 = j2 on constant lower-triangular matrices", j1(b) == j2(b),
                {"B": linalg.fmt(b)})
    m1 = random_unit_polymat(rng, 4, 2)
    m2 = random_unit_polymat(rng, 4, 2)
    t.check("k(M1 M2) = k(M1) k(M2)", k_map(pm_mul(m1, m2)) == compose(k_map(m1), k_map(m2)),
            {"M1": polymat_to_json(m1), "M2": polymat_to_json(m2)})


def _random_gamma(rng):
    return GammaElem(random_poly(rng, 3, zero_constant=True), random_unit_polymat(rng, 3, 2))


def suite_i_homomorphism(t, rng, n_max, deg_max):
    g1, g2 = _random_gamma(rng), _random_gamma(rng)
    lam = ptaut_equal(compose(i_map(g1), i_map(g2)), i_map(gamma_mul(g1, g2)))
    t.check("i(g1 g2) = i(g1) i(g2) up to scaling", lam is not None,
            {"g1": {"p": poly_to_json(g1.p), "M": polymat_to_json(g1.M)},
             "g2": {"p": poly_to_json(g2.p), "M": polymat_to_json(g2.M)}})
    jp, km = j3(g1.p), k_map(g2.M)
    t.check("j3(p) commutes with k(M)", compose(jp, km) == compose(km, jp),
            {"p": poly_to_json(g1.p), "M": polymat_to_json(g2.M)})


def _word_poly(spec):
    return NecklaceElem.parse(UNSTARRED, spec)


def suite_goldens(t, rng, n_max, deg_max):
    # derivative examples
    d1 = necklace_derive(_word_poly({"aab": 1}), "a")
    t.check("d/da (aab) = ab + ba", d1.terms == {("a", "b"): 1, ("b", "a"): 1})
    d2 = necklace_derive(_word_poly({"aaab": 1}), "a")
    t.check("d/da (aaab) = aab + aba + baa",
            d2.terms == {("a", "a", "b"): 1, ("a", "b", "a"): 1, ("b", "a", "a"): 1})
    # action of Lambda(aab) on a point
    pt = _fiber_point(rng, n_max)
    mm, add = linalg.matmul, linalg.matadd
    A, B, X1, X2, Y1, Y2 = pt.A, pt.B, pt.X1, pt.X2, pt.Y1, pt.Y2
    expected = pt.replace(B=add(add(B, mm(mm(A, X1), Y1)), mm(mm(X1, Y1), A)),
                          X2=add(X2, mm(mm(A, A), X1)), Y2=add(Y2, mm(Y1, mm(A, A))))
    got = act_endo(lambda_tri(_word_poly({"aab": 1})), pt)
    t.check("Lambda(aab) acts by B+AX1Y1+X1Y1A, X2+A^2X1, Y2+Y1A^2", got == expected,
            {"n": pt.n}, "equal points", _diff_fields(expected, got))
    # image of an upper unitriangular matrix
    p = random_poly(rng, 2, zero_constant=False)
    if p.is_zero():
        p = Poly([1])
    phi = k_map(upper(p))
    p_astar = _poly_in_astar(p)
    exp_xs = NcPoly.arrow("x*") - NcPoly.arrow("y") * p_astar
    exp_ys = NcPoly.arrow("y*") - p_astar * NcPoly.arrow("x")
    t.check("k([[1,p],[0,1]]): x* -> x* - y p(a*)", phi["x*"] == exp_xs,
            {"p": poly_to_json(p)}, str(exp_xs), str(phi["x*"]))
    t.check("k([[1,p],[0,1]]): y* -> y* - p(a*) x", phi["y*"] == exp_ys,
            {"p": poly_to_json(p)}, str(exp_ys), str(phi["y*"]))
    t.check("k([[1,p],[0,1]]) fixes a*, x, y",
            all(phi[r] == NcPoly.arrow(r) for r in ("a*", "x", "y")), {"p": poly_to_json(p)})


def _poly_in_astar(p):
    terms = {}
    for k, c in enumerate(p.coeffs):
        if c:
            terms[E1 if k == 0 else ("a*",) * k] = c
    return NcPoly(terms)


def suite_normalization(t, rng, n_max, deg_max):
    n = rng.randint(1, n_max)
    base = random_cm_point(rng, n)
    word = random_p_word(rng, rng.randint(1, 4))
    pt = act_word(word, base)
    inputs = {"n": n, "scramble": tameword_to_json(word)}
    try:
        _, _, result = normalize_to_Mn(pt, seed=t.index)
    except (NormalizationFailed, NotRegularSemisimple) as exc:
        t.check("normalize_to_Mn succeeds", False, inputs, "success", f"{type(exc).__name__}: {exc}")
        return
    t.check("result in M_n", in_Mn(result), inputs)
    t.check("result in the fiber", in_fiber(result), inputs)


SUITES = {
    "flow_theorem": suite_flow_theorem,
    "symplecticity": suite_symplecticity,
    "poisson_structure": suite_poisson_structure,
    "h_commute": suite_h_commute,
    "lie_morphism": suite_lie_morphism,
    "t_opt": suite_t_opt,
    "nagao_roundtrip": suite_nagao_roundtrip,
    "amalgamation": suite_amalgamation,
    "i_homomorphism": suite_i_homomorphism,
    "goldens": suite_goldens,
    "normalization": suite_normalization,
}


def run_suite(name, n_max=4, deg_max=6, trials=25, seed=42):
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    fn = SUITES[name]
    report = VerificationReport(name, trials, seed, {"n_max": n_max, "deg_max": deg_max})
    start = time.perf_counter()
    for i in range(trials):
        t = _Trial(i)
        fn(t, trial_rng(seed, name, i), n_max, deg_max)
        report.checks += t.checks
        report.failures.extend(t.failures)
    report.elapsed = time.perf_counter() - start
    return report
