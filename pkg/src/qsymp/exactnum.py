"""Exact arithmetic over the Gaussian rationals Q(i).

``Scalar`` is the ground field, ``Poly`` is K[z] and ``Dual`` carries a single
infinitesimal so that partial derivatives come out exactly.
"""

from fractions import Fraction

from gmpy2 import mpq

__all__ = [
    "Scalar",
    "Poly",
    "Dual",
    "ZERO",
    "ONE",
    "as_scalar",
    "poly_divmod",
    "poly_gcd",
    "poly_interpolate",
]

_MPQ = type(mpq(0))
_Q0 = mpq(0)
_Q1 = mpq(1)


def _q(value):
    if isinstance(value, _MPQ):
        return value
    if isinstance(value, (int, Fraction)):
        return mpq(value)
    if isinstance(value, str):
        return mpq(Fraction(value.strip()))
    raise TypeError(f"cannot convert {value!r} to a rational")


class Scalar:
    """An element re + im*i of Q(i), always in reduced form."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _q(re))
        object.__setattr__(self, "im", _q(im))

    @classmethod
    def _raw(cls, re, im):
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, int):
                return Scalar._raw(self.re + other, self.im)
            return NotImplemented
        return Scalar._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, int):
                return Scalar._raw(self.re - other, self.im)
            return NotImplemented
        return Scalar._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        if isinstance(other, int):
            return Scalar._raw(other - self.re, -self.im)
        return NotImplemented

    def __neg__(self):
        return Scalar._raw(-self.re, -self.im)

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, int):
                return Scalar._raw(self.re * other, self.im * other)
            return NotImplemented
        if not self.im and not other.im:
            return Scalar._raw(self.re * other.re, _Q0)
        return Scalar._raw(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inverse(self):
        if not self.im:
            if not self.re:
                raise ZeroDivisionError("inverse of zero Scalar")
            return Scalar._raw(_Q1 / self.re, _Q0)
        norm = self.re * self.re + self.im * self.im
        return Scalar._raw(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, int):
            return Scalar(other) * self.inverse()
        return NotImplemented

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self):
        return Scalar._raw(self.re, -self.im)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(Fraction(int(self.re.numerator), int(self.re.denominator)))
        return hash((str(self.re), str(self.im)))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self):
        return not self.im

    # -- text form ---------------------------------------------------------

    def __str__(self):
        re_s = _fmt_q(self.re)
        if not self.im:
            return re_s
        im = self.im
        if im == 1:
            im_s = "i"
        elif im == -1:
            im_s = "-i"
        else:
            im_s = _fmt_q(im) + "i"
        if not self.re:
            return im_s
        if im_s.startswith("-"):
            return re_s + im_s
        return re_s + "+" + im_s

    def __repr__(self):
        return f"Scalar('{self}')"

    @classmethod
    def parse(cls, text):
        """Parse ``"a/b"``, ``"a/b+c/d i"``, ``"2i"``, ``"-i"`` and friends."""
        if isinstance(text, Scalar):
            return text
        if isinstance(text, (int, Fraction, _MPQ)):
            return cls(text)
        if not isinstance(text, str):
            raise ValueError(f"not a Scalar literal: {text!r}")
        s = text.replace(" ", "").replace("*i", "i")
        try:
            if not s.endswith("i"):
                return cls(Fraction(s))
            body = s[:-1]
            cut = max(body.rfind("+"), body.rfind("-"))
            re_s, im_s = (body[:cut], body[cut:]) if cut > 0 else ("0", body)
            if im_s in ("", "+"):
                im_s = "1"
            elif im_s == "-":
                im_s = "-1"
            return cls(Fraction(re_s), Fraction(im_s))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a Scalar literal: {text!r}") from None


def _fmt_q(q):
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


ZERO = Scalar(0)
ONE = Scalar(1)


def as_scalar(value):
    """Coerce ints, Fractions and literal strings to ``Scalar``."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, str):
        return Scalar.parse(value)
    return Scalar(value)


class Dual:
    """val + der*eps with eps**2 = 0; der is the exact directional derivative."""

    __slots__ = ("val", "der")

    def __init__(self, val, der=ZERO):
        self.val = val
        self.der = der

    def __add__(self, other):
        if isinstance(other, Dual):
            return Dual(self.val + other.val, self.der + other.der)
        return Dual(self.val + other, self.der)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Dual):
            return Dual(self.val - other.val, self.der - other.der)
        return Dual(self.val - other, self.der)

    def __rsub__(self, other):
        return Dual(other - self.val, -self.der)

    def __neg__(self):
        return Dual(-self.val, -self.der)

    def __mul__(self, other):
        if isinstance(other, Dual):
            if not other.der:
                return Dual(self.val * other.val, self.der * other.val)
            if not self.der:
                return Dual(self.val * other.val, self.val * other.der)
            return Dual(self.val * other.val,
                        self.val * other.der + self.der * other.val)
        return Dual(self.val * other, self.der * other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Dual):
            return self.val == other.val and self.der == other.der
        return not self.der and self.val == other

    __hash__ = None

    def __bool__(self):
        return bool(self.val) or bool(self.der)

    def __repr__(self):
        return f"Dual({self.val}, {self.der})"


class Poly:
    """Univariate polynomial over Q(i), coefficients in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c):
        return cls([c])

    @classmethod
    def z(cls):
        return cls([0, 1])

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def lc(self):
        return self.coeffs[-1] if self.coeffs else ZERO

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return self + (-other)

    def __rsub__(self, other):
        return Poly([other]) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = as_scalar(other)
            return Poly([x * c for x in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if not x:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] = out[i + j] + x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Poly([1])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Scalar)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        out = ZERO
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def derivative(self):
        return Poly([c * k for k, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if not self.coeffs:
            return self
        inv = self.lc().inverse()
        return Poly([c * inv for c in self.coeffs])

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __repr__(self):
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mon = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            cs = str(c)
            if not c.is_real() and c.re:
                cs = f"({cs})"
            if mon and c == 1:
                parts.append(mon)
            elif mon and c == -1:
                parts.append("-" + mon)
            else:
                parts.append(cs + ("*" + mon if mon else ""))
        return " + ".join(parts).replace("+ -", "- ")


def poly_divmod(f, g):
    """Return ``(q, r)`` with ``f = q*g + r`` and ``deg r < deg g``."""
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f.coeffs)
    dg = g.degree
    inv = g.lc().inverse()
    quot = [ZERO] * max(len(rem) - dg, 0)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k]
        if not c:
            continue
        c = c * inv
        quot[k - dg] = c
        for j, gc in enumerate(g.coeffs):
            rem[k - dg + j] = rem[k - dg + j] - c * gc
    return Poly(quot), Poly(rem[:dg] if dg > 0 else [])


def poly_gcd(f, g):
    """Monic gcd of ``f`` and ``g``."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    while not g.is_zero():
        f, g = g, poly_divmod(f, g)[1]
    return f.monic()


def poly_interpolate(nodes):
    """Lagrange interpolation through ``[(x_i, y_i), ...]``."""
    pts = [(as_scalar(x), as_scalar(y)) for x, y in nodes]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must have distinct abscissae")
    out = Poly()
    for i, (xi, yi) in enumerate(pts):
        basis = Poly([1])
        denom = ONE
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Poly([-xj, 1])
                denom = denom * (xi - xj)
        out = out + basis * (yi / denom)
    return out
