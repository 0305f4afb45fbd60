"""
Exact arithmetic in cyclotomic fields Q(zeta_q).

An element is stored as an integer vector together with a positive common
denominator, reduced modulo the q-th cyclotomic polynomial, so that every
element has exactly one representation and zero testing is a comparison
with the zero vector.
"""

import cmath
import math
from fractions import Fraction
from functools import lru_cache


def _int_poly_divexact(num, den):
    """Exact division of integer polynomials (low-to-high coefficient lists), den monic."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            out[k - dd] = c
            for i, p in enumerate(den):
                num[k - dd + i] -= c * p
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(q):
    """
    Coefficients (constant term first) of the q-th cyclotomic polynomial,
    computed as (x^q - 1) divided by Phi_d for every proper divisor d of q.

    >>> cyclotomic_polynomial(3)
    (1, 1, 1)
    """
    if q < 1:
        raise ValueError("cyclotomic order must be positive, got %r" % (q,))
    num = [-1] + [0] * (q - 1) + [1]
    for d in range(1, q):
        if q % d == 0:
            num = _int_poly_divexact(num, cyclotomic_polynomial(d))
    return tuple(num)


def _mobius(n):
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def euler_phi(n):
    result, p = n, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


class _Field:
    """Precomputed data for Q(zeta_q): the modulus, and zeta^k for 0 <= k < q."""

    def __init__(self, q):
        self.q = q
        self.phi = cyclotomic_polynomial(q)
        self.degree = d = len(self.phi) - 1
        # Phi is monic; x^d = -sum(phi_i x^i)
        self.tail = tuple((i, c) for i, c in enumerate(self.phi[:-1]) if c)
        powers = []
        for k in range(q):
            v = [0] * max(d, k + 1)
            v[k] = 1
            powers.append(tuple(self.reduce(v)))
        self.powers = powers
        # Ramanujan sums give Tr(zeta^k); trace/degree is independent of the field
        self.basis_trace = tuple(
            Fraction(_mobius(q // math.gcd(k, q)) * euler_phi(q),
                     euler_phi(q // math.gcd(k, q)) * d)
            for k in range(d))

    def reduce(self, v):
        d = self.degree
        if len(v) <= d:
            return v + [0] * (d - len(v))
        for k in range(len(v) - 1, d - 1, -1):
            c = v[k]
            if c:
                base = k - d
                for i, p in self.tail:
                    v[base + i] -= c * p
        del v[d:]
        return v


@lru_cache(maxsize=None)
def _field(q):
    if not isinstance(q, int) or q < 1:
        raise ValueError("cyclotomic order must be a positive integer, got %r" % (q,))
    return _Field(q)


def _normalize(nums, den):
    g = math.gcd(den, *nums)
    if g != 1:
        nums = [x // g for x in nums]
        den //= g
    return tuple(nums), den


class CyclotomicNumber:
    """
    An element sum_k c_k zeta^k of Q(zeta_q), zeta = exp(2 pi i / q).

    ``coeffs`` may have any length; it is reduced modulo Phi_q.  Plain
    ints and Fractions interoperate, and elements of different orders are
    embedded into the field of the lcm order before combining.
    """

    __slots__ = ("order", "_nums", "_den")

    def __init__(self, order, coeffs=(0,)):
        field = _field(order)
        fracs = [Fraction(c) for c in coeffs]
        den = 1
        for f in fracs:
            den = den * f.denominator // math.gcd(den, f.denominator)
        nums = field.reduce([int(f * den) for f in fracs])
        self.order = order
        self._nums, self._den = _normalize(nums, den)

    @classmethod
    def _raw(cls, order, nums, den):
        self = object.__new__(cls)
        self.order = order
        self._nums = nums
        self._den = den
        return self

    @classmethod
    def zeta(cls, order, power=1):
        """zeta_order ** power for any integer power."""
        field = _field(order)
        return cls._raw(order, field.powers[power % order], 1)

    @classmethod
    def rational(cls, value, order=1):
        value = Fraction(value)
        d = _field(order).degree
        nums = (value.numerator,) + (0,) * (d - 1)
        return cls._raw(order, nums, value.denominator)

    @property
    def coeffs(self):
        """Rational coordinates in the power basis 1, zeta, ..., zeta^(d-1)."""
        return tuple(Fraction(x, self._den) for x in self._nums)

    @property
    def degree(self):
        return len(self._nums)

    def is_zero(self):
        return not any(self._nums)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self):
        return not any(self._nums[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError("%s is not rational" % self)
        return Fraction(self._nums[0], self._den)

    # -- coercion ---------------------------------------------------------

    def _common(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.order == self.order:
                return self, other
            q = math.lcm(self.order, other.order)
            return self.embed(q), other.embed(q)
        if isinstance(other, (int, Fraction)):
            return self, CyclotomicNumber.rational(other, self.order)
        return None, None

    def embed(self, order):
        """The same field element written in Q(zeta_order); requires self.order | order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError("cannot embed Q(zeta_%d) into Q(zeta_%d)" % (self.order, order))
        field = _field(order)
        step = order // self.order
        acc = [0] * field.degree
        for k, c in enumerate(self._nums):
            if c:
                for i, p in enumerate(field.powers[(k * step) % order]):
                    if p:
                        acc[i] += c * p
        nums, den = _normalize(acc, self._den)
        return CyclotomicNumber._raw(order, nums, den)

    def project(self, order):
        """
        Express self in the subfield Q(zeta_order).  Raises ValueError when
        self does not lie in that subfield.
        """
        if order == self.order:
            return self
        if self.order % order:
            raise ValueError("Q(zeta_%d) is not a subfield of Q(zeta_%d)" % (order, self.order))
        sub_d = _field(order).degree
        images = [CyclotomicNumber.zeta(order, k).embed(self.order).coeffs for k in range(sub_d)]
        target = self.coeffs
        # least-squares-free exact solve: columns are images, find x with sum x_k images_k = target
        rows = [[images[k][r] for k in range(sub_d)] + [target[r]] for r in range(self.degree)]
        solution = _solve_exact(rows, sub_d)
        if solution is None:
            raise ValueError("%s does not lie in Q(zeta_%d)" % (self, order))
        return CyclotomicNumber(order, solution)

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        return CyclotomicNumber._raw(self.order, tuple(-x for x in self._nums), self._den)

    def __add__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        if a._den == b._den:
            nums = [x + y for x, y in zip(a._nums, b._nums)]
            den = a._den
            if den == 1:
                return CyclotomicNumber._raw(a.order, tuple(nums), 1)
        else:
            nums = [x * b._den + y * a._den for x, y in zip(a._nums, b._nums)]
            den = a._den * b._den
        nums, den = _normalize(nums, den)
        return CyclotomicNumber._raw(a.order, nums, den)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return b + (-a)

    def __mul__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        an, bn = a._nums, b._nums
        den = a._den * b._den
        if not any(bn[1:]):
            s = bn[0]
            nums = [x * s for x in an]
        elif not any(an[1:]):
            s = an[0]
            nums = [y * s for y in bn]
        else:
            nzb = [(j, y) for j, y in enumerate(bn) if y]
            prod = [0] * (2 * len(an) - 1)
            for i, x in enumerate(an):
                if x:
                    for j, y in nzb:
                        prod[i + j] += x * y
            nums = _field(a.order).reduce(prod)
        if den == 1:
            return CyclotomicNumber._raw(a.order, tuple(nums), 1)
        nums, den = _normalize(nums, den)
        return CyclotomicNumber._raw(a.order, nums, den)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm against Phi_q."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_%d)" % self.order)
        if self.is_rational():
            return CyclotomicNumber.rational(1 / self.to_fraction(), self.order)
        field = _field(self.order)
        r0 = [Fraction(c) for c in field.phi]
        r1 = _strip([Fraction(x, self._den) for x in self._nums])
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            quo, rem = _frac_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _strip(_frac_sub(s0, _frac_mul(quo, s1)))
        # r1 is a nonzero constant
        c = r1[0]
        return CyclotomicNumber(self.order, [x / c for x in s1])

    def __truediv__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base, k = self.inverse(), -k
        result = CyclotomicNumber.rational(1, self.order)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def galois(self, k):
        """Apply the automorphism zeta -> zeta^k (k coprime to the order)."""
        q = self.order
        if math.gcd(k, q) != 1:
            raise ValueError("%d is not coprime to %d" % (k, q))
        field = _field(q)
        acc = [0] * field.degree
        for j, c in enumerate(self._nums):
            if c:
                for i, p in enumerate(field.powers[(j * k) % q]):
                    if p:
                        acc[i] += c * p
        nums, den = _normalize(acc, self._den)
        return CyclotomicNumber._raw(q, nums, den)

    def conjugate(self):
        return self.galois(-1 % self.order if self.order > 1 else 1)

    def to_complex(self):
        q = self.order
        z = 0j
        for k, c in enumerate(self._nums):
            if c:
                z += c * cmath.exp(2j * math.pi * k / q)
        return z / self._den

    def __abs__(self):
        return abs(self.to_complex())

    def normalized_trace(self):
        """Tr(a) / [Q(zeta_q):Q]; unchanged under embedding into larger fields."""
        field = _field(self.order)
        return sum((Fraction(x) * t for x, t in zip(self._nums, field.basis_trace)),
                   Fraction(0)) / self._den

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return a._den == b._den and a._nums == b._nums

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self._nums[0], self._den))
        return hash(self.normalized_trace())

    def __repr__(self):
        return "CyclotomicNumber(%d, %s)" % (self.order, [str(c) for c in self.coeffs])

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else "z^%d" % k)
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append("%s*%s" % (c, mono))
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def _strip(v):
    v = list(v)
    while v and v[-1] == 0:
        v.pop()
    return v


def _frac_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _frac_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _frac_divmod(a, b):
    a = list(a)
    lead = b[-1]
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        if c:
            quo[k] = c
            for i, y in enumerate(b):
                a[k + i] -= c * y
    return _strip(quo), _strip(a[:len(b) - 1])


def _solve_exact(rows, nvars):
    """Solve an augmented rational system; None if inconsistent."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(nvars):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(row[-1] for row in rows[r:]):
        return None
    sol = [Fraction(0)] * nvars
    for i, c in enumerate(pivots):
        sol[c] = rows[i][-1]
    return sol


def as_cyclotomic(x, order=1):
    if isinstance(x, CyclotomicNumber):
        return x if x.order == order or order == 1 else x.embed(math.lcm(order, x.order))
    return CyclotomicNumber.rational(x, order)


def delta(k, b):
    """1 + b + ... + b^k."""
    b = as_cyclotomic(b)
    total = CyclotomicNumber.rational(1, b.order)
    term = total
    for _ in range(k):
        term = term * b
        total = total + term
    return total


def root_of_unity_order(z):
    """Exact multiplicative order of a root of unity z; ValueError otherwise."""
    bound = math.lcm(2, z.order)
    one = CyclotomicNumber.rational(1, z.order)
    for k in range(1, bound + 1):
        if bound % k == 0 and z ** k == one:
            return k
    raise ValueError("%s is not a root of unity" % z)
