"""Path algebra of the doubled two-vertex quiver and necklace words.

Paths are tuples of arrow names read function-style: ``("x", "y")`` is the path
that traverses ``y`` first and then ``x``.  Evaluated on a representation the
word r1 r2 ... rk becomes the matrix product M(r1) M(r2) ... M(rk).  The trivial
paths are ``("e1",)`` and ``("e2",)``.
"""

from .exactnum import ONE, ZERO, as_scalar

ARROWS = ("a", "a*", "x", "x*", "y", "y*")

# arrow -> (source, target)
ENDPOINTS = {
    "a": (1, 1),
    "a*": (1, 1),
    "x": (2, 1),
    "x*": (1, 2),
    "y": (1, 2),
    "y*": (2, 1),
}

E1 = ("e1",)
E2 = ("e2",)
_TRIVIAL = {E1: 1, E2: 2}

UNSTARRED = ("a", "b")
STARRED = ("a*", "b*")
FOUR_LETTERS = ("a", "b", "a*", "b*")


class PathError(ValueError):
    pass


def path_source(p):
    if p in _TRIVIAL:
        return _TRIVIAL[p]
    return ENDPOINTS[p[-1]][0]


def path_target(p):
    if p in _TRIVIAL:
        return _TRIVIAL[p]
    return ENDPOINTS[p[0]][1]


def validate_path(p):
    p = tuple(p)
    if p in _TRIVIAL:
        return p
    if not p:
        raise PathError("empty path; use e1 or e2")
    for r in p:
        if r not in ENDPOINTS:
            raise PathError(f"unknown arrow {r!r}")
    for left, right in zip(p, p[1:]):
        if ENDPOINTS[left][0] != ENDPOINTS[right][1]:
            raise PathError(f"arrows {left} and {right} do not compose")
    return p


def path_mul(p, q):
    """Concatenate ``p`` after ``q``; ``None`` stands for the zero path."""
    if path_source(p) != path_target(q):
        return None
    if p in _TRIVIAL:
        return q
    if q in _TRIVIAL:
        return p
    return p + q


class NcPoly:
    """Finite linear combination of paths with nonzero Scalar coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for p, c in terms.items():
                c = as_scalar(c)
                if c:
                    clean[p] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, terms):
        obj = object.__new__(cls)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("NcPoly is immutable")

    @classmethod
    def path(cls, p, coeff=ONE):
        return cls({validate_path(p): coeff})

    @classmethod
    def arrow(cls, name):
        return cls.path((name,))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        out = dict(self.terms)
        for p, c in other.terms.items():
            s = out.get(p, ZERO) + c
            if s:
                out[p] = s
            else:
                out.pop(p, None)
        return NcPoly._raw(out)

    def __neg__(self):
        return NcPoly._raw({p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_scalar(c)
        if not c:
            return NcPoly()
        return NcPoly._raw({p: x * c for p, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, NcPoly):
            return self.scale(other)
        out = {}
        for p, c in self.terms.items():
            for q, d in other.terms.items():
                pq = path_mul(p, q)
                if pq is None:
                    continue
                s = out.get(pq, ZERO) + c * d
                if s:
                    out[pq] = s
                else:
                    out.pop(pq, None)
        return NcPoly._raw(out)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self.terms.items())))
        return self._hash

    def endpoints(self):
        """Set of (source, target) pairs occurring in the support."""
        return {(path_source(p), path_target(p)) for p in self.terms}

    def is_homogeneous(self):
        return len(self.endpoints()) <= 1

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def degree(self):
        return max((0 if p in _TRIVIAL else len(p) for p in self.terms), default=-1)

    def __repr__(self):
        return f"NcPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for p, c in self.sorted_terms():
            word = "·".join(p) if p not in _TRIVIAL else p[0]
            if c == 1:
                parts.append(word)
            elif c == -1:
                parts.append("-" + word)
            else:
                cs = str(c) if c.is_real() else f"({c})"
                parts.append(f"{cs}*{word}")
        return " + ".join(parts).replace("+ -", "- ")


def ncp_arith(op, u, v):
    """Ring operations of the path algebra: ``op`` in {"add", "mul", "scale"}."""
    if op == "add":
        return u + v
    if op == "mul":
        return u * v
    if op == "scale":
        return u.scale(v)
    raise ValueError(f"unknown operation {op!r}")


def symplectic_element():
    """c = [a,a*] + [x,x*] + [y,y*]."""
    terms = {}
    for r, s in (("a", "a*"), ("x", "x*"), ("y", "y*")):
        terms[(r, s)] = ONE
        terms[(s, r)] = -ONE
    return NcPoly(terms)


def corner(u, vertex):
    e = NcPoly.path(E1 if vertex == 1 else E2)
    return e * u * e


# ---------------------------------------------------------------------------
# words in two letters and their cyclic classes


class FreePoly2:
    """Plain (non-cyclic) words over a two-letter alphabet with coefficients."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet, terms=None):
        self.alphabet = tuple(alphabet)
        clean = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            for letter in w:
                if letter not in self.alphabet:
                    raise ValueError(f"letter {letter!r} not in {self.alphabet}")
            c = as_scalar(c)
            if c:
                clean[w] = clean.get(w, ZERO) + c
                if not clean[w]:
                    del clean[w]
        self.terms = clean

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return FreePoly2(self.alphabet, out)

    def __mul__(self, other):
        out = {}
        for w, c in self.terms.items():
            for v, d in other.terms.items():
                out[w + v] = out.get(w + v, ZERO) + c * d
        return FreePoly2(self.alphabet + tuple(x for x in other.alphabet if x not in self.alphabet), out)

    def __eq__(self, other):
        return isinstance(other, FreePoly2) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        items = sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
        return "FreePoly2(" + " + ".join(f"{c}*{''.join(w) or '1'}" for w, c in items) + ")"


def canonical_rotation(word, alphabet):
    """Lexicographically least rotation, letters ordered as in ``alphabet``."""
    if not word:
        return ()
    rank = {letter: i for i, letter in enumerate(alphabet)}
    keyed = tuple(rank[x] for x in word)
    best = min(range(len(word)), key=lambda i: keyed[i:] + keyed[:i])
    return tuple(word[best:] + word[:best])


class NecklaceElem:
    """Linear combination of cyclic words, constants dropped (the space L2)."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet, terms=None):
        self.alphabet = tuple(alphabet)
        clean = {}
        for w, c in (terms.items() if isinstance(terms, dict) else (terms or [])):
            w = tuple(w)
            for letter in w:
                if letter not in self.alphabet:
                    raise ValueError(f"letter {letter!r} not in {self.alphabet}")
            if not w:
                continue
            key = canonical_rotation(w, self.alphabet)
            clean[key] = clean.get(key, ZERO) + as_scalar(c)
        self.terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def parse(cls, alphabet, spec):
        """Build from ``{"aab": 1, "ab": -2}``-style dicts (two-letter alphabets)."""
        terms = []
        for text, c in spec.items():
            terms.append((tokenize_word(text, alphabet), c))
        return cls(alphabet, terms)

    def __add__(self, other):
        if self.alphabet != other.alphabet:
            raise ValueError("alphabet mismatch")
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return NecklaceElem(self.alphabet, out)

    def __neg__(self):
        return NecklaceElem(self.alphabet, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_scalar(c)
        return NecklaceElem(self.alphabet, {w: x * c for w, x in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, NecklaceElem) and self.alphabet == other.alphabet
                and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def mirror(self):
        """Swap a <-> a*, b <-> b* (two-letter alphabets only)."""
        if self.alphabet == UNSTARRED:
            table, target = dict(zip(UNSTARRED, STARRED)), STARRED
        elif self.alphabet == STARRED:
            table, target = dict(zip(STARRED, UNSTARRED)), UNSTARRED
        else:
            raise ValueError("mirror needs a two-letter alphabet")
        return NecklaceElem(target, {tuple(table[x] for x in w): c for w, c in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def __repr__(self):
        if not self.terms:
            return "NecklaceElem(0)"
        return "NecklaceElem(" + " + ".join(
            f"{c}*({''.join(w)})" for w, c in self.sorted_terms()) + ")"


def tokenize_word(text, alphabet):
    """Split ``"aa*bb*"`` into letters of ``alphabet`` (longest match first)."""
    letters = sorted(alphabet, key=len, reverse=True)
    out = []
    i = 0
    while i < len(text):
        for letter in letters:
            if text.startswith(letter, i):
                out.append(letter)
                i += len(letter)
                break
        else:
            raise ValueError(f"cannot read {text!r} over {alphabet}")
    return tuple(out)


def necklace_derive(f, letter):
    """Necklace derivative: rotate each occurrence of ``letter`` to the front and drop it."""
    if letter not in f.alphabet:
        raise ValueError(f"letter {letter!r} not in {f.alphabet}")
    out = {}
    for w, c in f.terms.items():
        for i, x in enumerate(w):
            if x == letter:
                rest = w[i + 1:] + w[:i]
                out[rest] = out.get(rest, ZERO) + c
    return FreePoly2(f.alphabet, out)


def substitute_loops(g, mode):
    """Realise a two-letter word as a loop at vertex 1: b = x·y, b* = y*·x*."""
    if mode == "unstarred":
        alphabet, table = UNSTARRED, {"a": ("a",), "b": ("x", "y")}
    elif mode == "starred":
        alphabet, table = STARRED, {"a*": ("a*",), "b*": ("y*", "x*")}
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if g.alphabet != alphabet:
        raise ValueError(f"alphabet mismatch: expected {alphabet}, got {g.alphabet}")
    out = {}
    for w, c in g.terms.items():
        path = E1 if not w else sum((table[x] for x in w), ())
        out[path] = out.get(path, ZERO) + c
    return NcPoly(out)


# Fixed by matching {H(a^2), H'(a*^2)} against psi of the bracket; see
# tests/test_hamflows.py::test_bracket_sign_calibration.
BRACKET_SIGN = -1


def necklace_bracket(f, g):
    """Necklace Lie bracket of f in L2 with g in L2^op.

    Returns ``(value, constant)``: the cyclic projection onto four-letter words
    and the coefficient of the empty word, which L2 does not retain.
    """
    if f.alphabet != UNSTARRED or g.alphabet != STARRED:
        raise ValueError("necklace_bracket expects f over {a,b} and g over {a*,b*}")
    pairs = ((necklace_derive(f, "a"), necklace_derive(g, "a*")),
             (necklace_derive(f, "b"), necklace_derive(g, "b*")))
    out = {}
    const = ZERO
    for df, dg in pairs:
        for u, c in df.terms.items():
            for v, d in dg.terms.items():
                coeff = c * d * BRACKET_SIGN
                w = u + v
                if not w:
                    const = const + coeff
                    continue
                key = canonical_rotation(w, FOUR_LETTERS)
                out[key] = out.get(key, ZERO) + coeff
    return NecklaceElem(FOUR_LETTERS, out), const
