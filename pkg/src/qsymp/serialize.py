"""JSON forms for every value the CLI reads or writes.

Numbers are always exact strings such as ``"1/2"`` or ``"1/2+3/4i"``.
"""

from .autos import Aff, AffineData, EndoA, OpTri, Tri
from .exactnum import Poly, Scalar
from .hamflows import H, Hp, J
from .nagao import GammaElem, polymat
from .pathalg import (ARROWS, FOUR_LETTERS, STARRED, UNSTARRED, NcPoly, NecklaceElem,
                      PathError, tokenize_word, validate_path)
from .reps import RepPoint


class InputError(ValueError):
    """Malformed JSON input."""


def _require(cond, msg):
    if not cond:
        raise InputError(msg)


def scalar_to_json(s):
    return str(s)


def scalar_from_json(x):
    if isinstance(x, bool) or isinstance(x, float):
        raise InputError(f"numbers must be exact strings or integers, got {x!r}")
    try:
        return Scalar.parse(x)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def matrix_to_json(m):
    return [[scalar_to_json(x) for x in row] for row in m]


def matrix_from_json(x, shape=None):
    _require(isinstance(x, list), "matrix must be a list")
    if shape is not None and x and not isinstance(x[0], list):
        # flat list for a row or column vector
        r, c = shape
        _require(len(x) == r * c, f"expected {r * c} entries")
        flat = [scalar_from_json(v) for v in x]
        return tuple(tuple(flat[i * c:(i + 1) * c]) for i in range(r))
    rows = []
    for row in x:
        _require(isinstance(row, list), "matrix rows must be lists")
        rows.append(tuple(scalar_from_json(v) for v in row))
    _require(len({len(r) for r in rows}) <= 1, "ragged matrix")
    if shape is not None:
        _require((len(rows), len(rows[0]) if rows else 0) == tuple(shape),
                 f"expected shape {shape}")
    return tuple(rows)


def poly_to_json(p):
    return [scalar_to_json(c) for c in p.coeffs]


def poly_from_json(x):
    _require(isinstance(x, list), "polynomial must be a coefficient list")
    return Poly([scalar_from_json(c) for c in x])


def ncpoly_to_json(u):
    return [{"coeff": scalar_to_json(c), "word": list(p)} for p, c in u.sorted_terms()]


def ncpoly_from_json(x):
    _require(isinstance(x, list), "NcPoly must be a term list")
    terms = {}
    for t in x:
        _require(isinstance(t, dict) and "word" in t and "coeff" in t, "bad NcPoly term")
        try:
            p = validate_path(tuple(t["word"]))
        except PathError as exc:
            raise InputError(str(exc)) from None
        terms[p] = terms.get(p, Scalar(0)) + scalar_from_json(t["coeff"])
    return NcPoly(terms)


_ALPHABETS = {tuple(a): a for a in (UNSTARRED, STARRED, FOUR_LETTERS)}


def necklace_to_json(f):
    return {"alphabet": list(f.alphabet),
            "terms": [{"coeff": scalar_to_json(c), "word": list(w)} for w, c in f.sorted_terms()]}


def necklace_from_json(x, alphabet=None):
    _require(isinstance(x, dict) and "terms" in x, "necklace needs a terms list")
    alpha = tuple(x.get("alphabet", alphabet or ()))
    _require(alpha in _ALPHABETS, f"unknown alphabet {alpha}")
    _require(alphabet is None or alpha == tuple(alphabet), f"expected alphabet {alphabet}")
    terms = []
    for t in x["terms"]:
        _require(isinstance(t, dict) and "word" in t and "coeff" in t, "bad necklace term")
        word = t["word"]
        try:
            word = tokenize_word(word, alpha) if isinstance(word, str) else tuple(word)
            terms.append((word, scalar_from_json(t["coeff"])))
        except ValueError as exc:
            raise InputError(str(exc)) from None
    try:
        return NecklaceElem(alpha, terms)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def endo_to_json(phi):
    return {r: ncpoly_to_json(phi[r]) for r in ARROWS}


def endo_from_json(x):
    _require(isinstance(x, dict), "EndoA must be an object keyed by arrow")
    try:
        return EndoA({r: ncpoly_from_json(x[r]) for r in ARROWS if r in x})
    except ValueError as exc:
        raise InputError(str(exc)) from None


def affine_to_json(d):
    return {"S": matrix_to_json(d.S), "t": [scalar_to_json(v) for v in d.t],
            "T": matrix_to_json(d.T)}


def tameword_to_json(word):
    out = []
    for g in word:
        if isinstance(g, Tri):
            out.append({"kind": "tri", "f": necklace_to_json(g.f)})
        elif isinstance(g, OpTri):
            out.append({"kind": "optri", "f": necklace_to_json(g.f)})
        else:
            out.append({"kind": "aff", **affine_to_json(g.d)})
    return out


def tameword_from_json(x):
    _require(isinstance(x, list), "TameWord must be a list")
    word = []
    for g in x:
        _require(isinstance(g, dict) and "kind" in g, "generator needs a kind")
        kind = g["kind"]
        if kind == "tri":
            word.append(Tri(necklace_from_json(g["f"], UNSTARRED)))
        elif kind == "optri":
            word.append(OpTri(necklace_from_json(g["f"], STARRED)))
        elif kind == "aff":
            try:
                d = AffineData(matrix_from_json(g["S"], (2, 2)),
                               tuple(scalar_from_json(v) for v in g.get("t", ["0", "0"])),
                               matrix_from_json(g["T"], (2, 2)))
            except (KeyError, ValueError) as exc:
                raise InputError(f"bad affine generator: {exc}") from None
            word.append(Aff(d))
        else:
            raise InputError(f"unknown generator kind {kind!r}")
    return word


_POINT_SHAPES = {"A": "nn", "B": "nn", "X1": "n1", "X2": "n1", "Y1": "1n", "Y2": "1n"}


def point_to_json(pt):
    out = {"n": pt.n, "tau": scalar_to_json(pt.tau)}
    for k in _POINT_SHAPES:
        out[k] = matrix_to_json(getattr(pt, k))
    return out


def point_from_json(x):
    _require(isinstance(x, dict), "RepPoint must be an object")
    try:
        n = int(x["n"])
        _require(n >= 1, "n must be positive")
        fields = {}
        for k, spec in _POINT_SHAPES.items():
            shp = tuple(n if ch == "n" else 1 for ch in spec)
            fields[k] = matrix_from_json(x[k], shp)
        return RepPoint(n, scalar_from_json(x.get("tau", "1")), **fields)
    except KeyError as exc:
        raise InputError(f"missing field {exc}") from None
    except (TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(str(exc)) from None


def hamspec_to_json(h):
    if isinstance(h, J):
        return {"kind": "J", "k": h.k, "alpha": matrix_to_json(h.alpha)}
    kind = "H" if isinstance(h, H) else "Hp"
    return {"kind": kind, "f": necklace_to_json(h.f)}


def hamspec_from_json(x):
    _require(isinstance(x, dict) and "kind" in x, "HamSpec needs a kind")
    kind = x["kind"]
    try:
        if kind == "J":
            return J(int(x["k"]), matrix_from_json(x["alpha"], (2, 2)))
        if kind == "H":
            return H(necklace_from_json(x["f"], UNSTARRED))
        if kind == "Hp":
            return Hp(necklace_from_json(x["f"], STARRED))
    except KeyError as exc:
        raise InputError(f"missing field {exc}") from None
    raise InputError(f"unknown Hamiltonian kind {kind!r}")


def polymat_to_json(m):
    return [[poly_to_json(e) for e in row] for row in m]


def polymat_from_json(x):
    _require(isinstance(x, list) and len(x) == 2 and all(isinstance(r, list) and len(r) == 2 for r in x),
             "PolyMat2 must be a 2x2 array of coefficient lists")
    return polymat([[poly_from_json(e) for e in row] for row in x])


def nagao_word_to_json(word):
    return [{"tag": tag, "matrix": polymat_to_json(m)} for tag, m in word]


def nagao_word_from_json(x):
    _require(isinstance(x, list), "NagaoWord must be a list")
    out = []
    for f in x:
        _require(isinstance(f, dict) and f.get("tag") in ("C", "B"), "factor needs tag C or B")
        out.append((f["tag"], polymat_from_json(f["matrix"])))
    return out


def gamma_to_json(g):
    return {"p": poly_to_json(g.p), "M": polymat_to_json(g.M)}


def gamma_from_json(x):
    _require(isinstance(x, dict) and "p" in x and "M" in x, "GammaElem needs p and M")
    try:
        return GammaElem(poly_from_json(x["p"]), polymat_from_json(x["M"]))
    except InputError:
        raise
    except ValueError as exc:
        raise InputError(str(exc)) from None

