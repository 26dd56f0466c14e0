"""Small dense exact matrices stored as tuples of row tuples.

Products and sums work for any entry type with ring operations (``Scalar`` or
``Dual``); elimination-based routines need ``Scalar`` entries.
"""

from .exactnum import ONE, ZERO, Poly, as_scalar


class SingularMatrixError(ValueError):
    pass


def mat(rows):
    return tuple(tuple(as_scalar(x) for x in row) for row in rows)


def shape(m):
    return (len(m), len(m[0]) if m else 0)


def zeros(r, c):
    return tuple((ZERO,) * c for _ in range(r))


def identity(n):
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def diag(values):
    vals = [as_scalar(v) for v in values]
    n = len(vals)
    return tuple(tuple(vals[i] if i == j else ZERO for j in range(n)) for i in range(n))


def matmul(a, b):
    if not a:
        return ()
    inner = len(b)
    if len(a[0]) != inner:
        raise ValueError(f"shape mismatch in product: {shape(a)} x {shape(b)}")
    cols = list(zip(*b)) if b else []
    out = []
    for row in a:
        out_row = []
        for col in cols:
            acc = ZERO
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def matadd(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def matsub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def matscale(a, c):
    return tuple(tuple(x * c for x in row) for row in a)


def matneg(a):
    return tuple(tuple(-x for x in row) for row in a)


def transpose(a):
    return tuple(zip(*a))


def trace(a):
    acc = ZERO
    for i in range(len(a)):
        acc = acc + a[i][i]
    return acc


def commutator(a, b):
    return matsub(matmul(a, b), matmul(b, a))


def matpow(a, k):
    out = identity(len(a))
    for _ in range(k):
        out = matmul(out, a)
    return out


def is_zero(a):
    return all(not x for row in a for x in row)


def column(a, j):
    return tuple((row[j],) for row in a)


def row(a, i):
    return (a[i],)


def hstack(*blocks):
    return tuple(sum((b[i] for b in blocks), ()) for i in range(len(blocks[0])))


def vstack(*blocks):
    return sum((tuple(b) for b in blocks), ())


def _rref_solve(a, rhs_cols):
    """Gauss-Jordan on [a | rhs]; returns solution columns or raises."""
    n = len(a)
    m = [list(r) + list(x) for r, x in zip(a, rhs_cols)]
    width = len(a[0])
    for col in range(width):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col].inverse()
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [tuple(r[width:]) for r in m]


def solve(a, b):
    """Solve ``a @ x = b`` for square nonsingular ``a``; ``b`` is a matrix."""
    if len(a) != len(a[0]):
        raise ValueError("solve needs a square matrix")
    return tuple(_rref_solve(a, b))


def inverse(a):
    return solve(a, identity(len(a)))


def det(a):
    n = len(a)
    m = [list(r) for r in a]
    out = ONE
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return ZERO
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            out = -out
        out = out * m[col][col]
        inv = m[col][col].inverse()
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return out


def charpoly(a):
    """det(z*I - a) by Faddeev-LeVerrier (exact over a field of char 0)."""
    n = len(a)
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    m = zeros(n, n)
    for k in range(1, n + 1):
        m = matadd(matmul(a, m), matscale(identity(n), coeffs[n - k + 1]))
        coeffs[n - k] = -trace(matmul(a, m)) / k
    return Poly(coeffs)


def poly_of_matrix(p, a):
    """Evaluate a univariate polynomial at a square matrix (Horner)."""
    n = len(a)
    out = zeros(n, n)
    for c in reversed(p.coeffs):
        out = matadd(matmul(out, a), matscale(identity(n), c))
    return out


def fmt(a):
    return [[str(x) for x in r] for r in a]
