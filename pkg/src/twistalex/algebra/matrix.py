"""
Matrices over Q(zeta_q) and over Q(zeta_q)[t, 1/t].

Constant matrices are plain tuples of tuples of CyclotomicNumber and are
handled by the ``mat_*`` functions.  Laurent polynomial matrices are
wrapped in :class:`PolyMatrix`, whose determinant is computed by
fraction-free (Bareiss) elimination or by cofactor expansion.
"""

import math

from .cyclotomic import CyclotomicNumber, as_cyclotomic
from .laurent import ExactDivisor, LaurentPolynomial


# -- constant matrices ------------------------------------------------------

def mat_identity(n, order=1):
    one = CyclotomicNumber.rational(1, order)
    zero = CyclotomicNumber.rational(0, order)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def mat_from_rows(rows, order=1):
    """Coerce nested sequences of numbers into a constant matrix over Q(zeta_order)."""
    for row in rows:
        for x in row:
            if isinstance(x, CyclotomicNumber):
                order = math.lcm(order, x.order)
    return tuple(tuple(as_cyclotomic(x, order) if not isinstance(x, CyclotomicNumber)
                       else x.embed(order) for x in row) for row in rows)


def mat_order(a):
    q = 1
    for row in a:
        for x in row:
            q = math.lcm(q, getattr(x, "order", 1))
    return q


def mat_embed(a, order):
    return tuple(tuple(x.embed(order) for x in row) for row in a)


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    q = math.lcm(mat_order(a), mat_order(b))
    if mat_order(a) != q:
        a = mat_embed(a, q)
    if mat_order(b) != q:
        b = mat_embed(b, q)
    zero = CyclotomicNumber.rational(0, q)
    out = []
    for i in range(n):
        row = [zero] * m
        for l in range(k):
            x = a[i][l]
            if x:
                bl = b[l]
                for j in range(m):
                    y = bl[j]
                    if y:
                        row[j] = row[j] + x * y
        out.append(tuple(row))
    return tuple(out)


def mat_scale(a, c):
    return tuple(tuple(x * c for x in row) for row in a)


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_inverse(a):
    """Gauss-Jordan inverse over the field; ZeroDivisionError if singular."""
    a = mat_from_rows(a)
    n = len(a)
    q = mat_order(a)
    one = CyclotomicNumber.rational(1, q)
    zero = CyclotomicNumber.rational(0, q)
    rows = [list(a[i]) + [one if i == j else zero for j in range(n)] for i in range(n)]
    for c in range(n):
        p = next((r for r in range(c, n) if rows[r][c]), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        rows[c], rows[p] = rows[p], rows[c]
        inv = rows[c][c].inverse()
        rows[c] = [x * inv for x in rows[c]]
        for r in range(n):
            f = rows[r][c]
            if r != c and f:
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
    return tuple(tuple(row[n:]) for row in rows)


def mat_det(a):
    """Determinant over the field by Gaussian elimination."""
    n = len(a)
    if n == 0:
        return CyclotomicNumber.rational(1)
    a = mat_from_rows(a)
    rows = [list(r) for r in a]
    det = CyclotomicNumber.rational(1, mat_order(a))
    for c in range(n):
        p = next((r for r in range(c, n) if rows[r][c]), None)
        if p is None:
            return CyclotomicNumber.rational(0, det.order)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            det = -det
        piv = rows[c][c]
        det = det * piv
        inv = piv.inverse()
        for r in range(c + 1, n):
            f = rows[r][c]
            if f:
                f = f * inv
                rows[r] = [x - f * y if y else x for x, y in zip(rows[r], rows[c])]
    return det


def mat_pow(a, k):
    if k < 0:
        a, k = mat_inverse(a), -k
    result = mat_identity(len(a), mat_order(a))
    while k:
        if k & 1:
            result = mat_mul(result, a)
        k >>= 1
        if k:
            a = mat_mul(a, a)
    return result


def mat_is_identity(a):
    return all((x == 1) if i == j else x.is_zero()
               for i, row in enumerate(a) for j, x in enumerate(row))


def block_diagonal(blocks):
    n = sum(len(b) for b in blocks)
    q = 1
    for b in blocks:
        q = math.lcm(q, mat_order(b))
    zero = CyclotomicNumber.rational(0, q)
    out = [[zero] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x.embed(q)
        off += len(b)
    return tuple(tuple(r) for r in out)


# -- Laurent polynomial matrices ---------------------------------------------

class PolyMatrix:
    """A rectangular matrix of LaurentPolynomials over a shared cyclotomic field."""

    __slots__ = ("rows", "nrows", "ncols", "order")

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("PolyMatrix needs at least one entry")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix rows")
        q = 1
        for r in rows:
            for i, x in enumerate(r):
                if not isinstance(x, LaurentPolynomial):
                    x = r[i] = LaurentPolynomial.constant(x)
                q = math.lcm(q, getattr(x, "order", 1))
        self.rows = tuple(tuple(x.embed(q) for x in r) for r in rows)
        self.nrows, self.ncols, self.order = len(rows), ncols, q

    @classmethod
    def from_constant(cls, a, power=0):
        """t^power * a for a constant matrix a."""
        return cls([[LaurentPolynomial._raw([x], power, x.order) for x in row] for row in a])

    @classmethod
    def identity(cls, n, order=1):
        return cls.from_constant(mat_identity(n, order))

    @classmethod
    def zeros(cls, nrows, ncols, order=1):
        z = LaurentPolynomial._raw([], 0, order)
        return cls([[z] * ncols for _ in range(nrows)])

    @classmethod
    def from_blocks(cls, blocks):
        """Assemble a matrix from a 2-D grid of PolyMatrix blocks."""
        rows = []
        for brow in blocks:
            for i in range(brow[0].nrows):
                rows.append([x for b in brow for x in b.rows[i]])
        return cls(rows)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other):
        return PolyMatrix([[x + y for x, y in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return PolyMatrix([[x - y for x, y in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self):
        return PolyMatrix([[-x for x in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, PolyMatrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch %s x %s" % (self.shape, other.shape))
            zero = LaurentPolynomial._raw([], 0, self.order)
            out = []
            for i in range(self.nrows):
                row = []
                for j in range(other.ncols):
                    acc = zero
                    for l in range(self.ncols):
                        x, y = self.rows[i][l], other.rows[l][j]
                        if x and y:
                            acc = acc + x * y
                    row.append(acc)
                out.append(row)
            return PolyMatrix(out)
        return PolyMatrix([[x * other for x in r] for r in self.rows])

    def __rmul__(self, other):
        return PolyMatrix([[other * x for x in r] for r in self.rows])

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            x == y for ra, rb in zip(self.rows, other.rows) for x, y in zip(ra, rb))

    __hash__ = None

    def evaluate(self, x):
        return tuple(tuple(p.evaluate(x) for p in r) for r in self.rows)

    def determinant(self, method="bareiss"):
        return determinant(self, method)

    def __repr__(self):
        return "PolyMatrix(%dx%d)" % self.shape

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)


def determinant(m, method="bareiss"):
    """
    Exact determinant of a square PolyMatrix.

    ``method`` is "bareiss" (fraction-free elimination, any size) or
    "cofactor" (Laplace expansion, intended for sizes up to 4).
    """
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square %dx%d matrix" % m.shape)
    if method == "bareiss":
        return _bareiss(m)
    if method == "cofactor":
        return _cofactor([list(r) for r in m.rows], m.order)
    raise ValueError("unknown determinant method %r" % (method,))


def _bareiss(m):
    n, q = m.nrows, m.order
    a = [list(r) for r in m.rows]
    sign = 1
    prev = None
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if swap is None:
                return LaurentPolynomial._raw([], 0, q)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                v = piv * rowi[j]
                if aik and rowk[j]:
                    v = v - aik * rowk[j]
                rowi[j] = prev.divide(v) if prev is not None else v
        prev = ExactDivisor(piv)
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def _cofactor(a, q):
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = LaurentPolynomial._raw([], 0, q)
    for j in range(n):
        x = a[0][j]
        if x.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = x * _cofactor(minor, q)
        total = total + term if j % 2 == 0 else total - term
    return total


def characteristic_polynomial(a):
    """det(X*I - a) as a polynomial in X (represented by the variable t)."""
    a = mat_from_rows(a)
    n = len(a)
    q = mat_order(a)
    x = LaurentPolynomial.t(1, q)
    rows = [[(x if i == j else LaurentPolynomial._raw([], 0, q))
             - LaurentPolynomial.constant(a[i][j], q) for j in range(n)] for i in range(n)]
    return determinant(PolyMatrix(rows))
