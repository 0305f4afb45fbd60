"""
Laurent polynomials in t and rational functions over cyclotomic fields.
"""

import math
from fractions import Fraction

from .cyclotomic import CyclotomicNumber


def _zero(q):
    return CyclotomicNumber.rational(0, q)


def _one(q):
    return CyclotomicNumber.rational(1, q)


def _lift(c, q):
    if isinstance(c, CyclotomicNumber):
        return c if c.order == q else c.embed(q)
    return CyclotomicNumber.rational(c, q)


class LaurentPolynomial:
    """
    sum_k coeffs[k] * t^(low + k) with coefficients in a common Q(zeta_order).

    Stored canonically: nonzero first and last coefficients, and the zero
    polynomial has no coefficients and ``low == 0``.
    """

    __slots__ = ("low", "coeffs", "order")

    def __init__(self, coeffs=(), low=0, order=1):
        q = order
        for c in coeffs:
            if isinstance(c, CyclotomicNumber) and q % c.order:
                q = math.lcm(q, c.order)
        cs = [_lift(c, q) for c in coeffs]
        self._set(cs, low, q)

    def _set(self, cs, low, q):
        start = 0
        while start < len(cs) and cs[start].is_zero():
            start += 1
        end = len(cs)
        while end > start and cs[end - 1].is_zero():
            end -= 1
        if start == end:
            self.coeffs, self.low = (), 0
        else:
            self.coeffs, self.low = tuple(cs[start:end]), low + start
        self.order = q

    @classmethod
    def _raw(cls, cs, low, q):
        self = object.__new__(cls)
        self._set(cs, low, q)
        return self

    @classmethod
    def t(cls, power=1, order=1):
        return cls._raw([_one(order)], power, order)

    @classmethod
    def constant(cls, c, order=1):
        if isinstance(c, CyclotomicNumber):
            order = math.lcm(order, c.order)
        return cls._raw([_lift(c, order)], 0, order)

    @classmethod
    def from_dict(cls, terms, order=1):
        """Build from {exponent: coefficient}."""
        terms = {k: v for k, v in terms.items()}
        for v in terms.values():
            if isinstance(v, CyclotomicNumber):
                order = math.lcm(order, v.order)
        if not terms:
            return cls._raw([], 0, order)
        lo, hi = min(terms), max(terms)
        cs = [_zero(order)] * (hi - lo + 1)
        for k, v in terms.items():
            cs[k - lo] = _lift(v, order)
        return cls._raw(cs, lo, order)

    # -- structure --------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def high(self):
        """Largest exponent with nonzero coefficient (low - 1 for zero)."""
        return self.low + len(self.coeffs) - 1

    def degree_span(self):
        return len(self.coeffs) - 1

    def coefficient(self, k):
        i = k - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return _zero(self.order)

    def leading_coefficient(self):
        return self.coeffs[-1]

    def lowest_coefficient(self):
        return self.coeffs[0]

    def is_constant(self):
        return not self.coeffs or (len(self.coeffs) == 1 and self.low == 0)

    def embed(self, order):
        if order == self.order:
            return self
        return LaurentPolynomial._raw([c.embed(order) for c in self.coeffs], self.low, order)

    def _common(self, other):
        if isinstance(other, LaurentPolynomial):
            if other.order == self.order:
                return self, other
            q = math.lcm(self.order, other.order)
            return self.embed(q), other.embed(q)
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            c = LaurentPolynomial.constant(other, self.order)
            if c.order != self.order:
                return self.embed(c.order), c
            return self, c
        return None, None

    def shift(self, k):
        """Multiply by t^k."""
        if not self.coeffs:
            return self
        return LaurentPolynomial._raw(list(self.coeffs), self.low + k, self.order)

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        return LaurentPolynomial._raw([-c for c in self.coeffs], self.low, self.order)

    def __add__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        if not a.coeffs:
            return b
        if not b.coeffs:
            return a
        lo = min(a.low, b.low)
        hi = max(a.high, b.high)
        zero = _zero(a.order)
        cs = [zero] * (hi - lo + 1)
        for k, c in enumerate(a.coeffs):
            cs[a.low - lo + k] = c
        for k, c in enumerate(b.coeffs):
            i = b.low - lo + k
            cs[i] = cs[i] + c
        return LaurentPolynomial._raw(cs, lo, a.order)

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
        if not a.coeffs or not b.coeffs:
            return LaurentPolynomial._raw([], 0, a.order)
        if len(b.coeffs) == 1:
            c = b.coeffs[0]
            return LaurentPolynomial._raw([x * c for x in a.coeffs], a.low + b.low, a.order)
        if len(a.coeffs) == 1:
            c = a.coeffs[0]
            return LaurentPolynomial._raw([c * y for y in b.coeffs], a.low + b.low, a.order)
        zero = _zero(a.order)
        out = [zero] * (len(a.coeffs) + len(b.coeffs) - 1)
        nzb = [(j, y) for j, y in enumerate(b.coeffs) if y]
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in nzb:
                    out[i + j] = out[i + j] + x * y
        return LaurentPolynomial._raw(out, a.low + b.low, a.order)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self.coeffs) != 1:
                raise ValueError("only monomials are invertible Laurent polynomials")
            inv = LaurentPolynomial._raw([self.coeffs[0].inverse()], -self.low, self.order)
            return inv ** (-k)
        result = LaurentPolynomial.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divmod_poly(self, other):
        """
        Division with remainder treating both sides as ordinary polynomials
        times a power of t: self = quotient*other + remainder, where the
        remainder spans fewer powers of t than other.
        """
        a, b = self._common(other)
        if not b.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        quo, rem = _poly_divmod(list(a.coeffs), list(b.coeffs), b.coeffs[-1].inverse(), a.order)
        return (LaurentPolynomial._raw(quo, a.low - b.low, a.order),
                LaurentPolynomial._raw(rem, a.low, a.order))

    def exact_div(self, other):
        """self / other in the Laurent ring; ArithmeticError unless exact."""
        a, b = self._common(other)
        return _exact_div(a, b.coeffs, b.low, b.coeffs[-1].inverse() if b.coeffs else None)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            a, b = self._common(other)
            inv = b.coeffs[0].inverse()
            return LaurentPolynomial._raw([c * inv for c in a.coeffs], a.low, a.order)
        return NotImplemented

    def monic(self):
        if not self.coeffs:
            return self
        inv = self.coeffs[-1].inverse()
        return LaurentPolynomial._raw([c * inv for c in self.coeffs], self.low, self.order)

    # -- evaluation -------------------------------------------------------

    def evaluate(self, x):
        """Exact value at a rational or cyclotomic x (x != 0 if there are negative powers)."""
        if not self.coeffs:
            return _zero(self.order)
        acc = _zero(self.order)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.low:
            if not isinstance(x, CyclotomicNumber):
                x = CyclotomicNumber.rational(x)
            acc = acc * x ** self.low
        return acc

    def eval_numeric(self, t0):
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * t0 + c.to_complex()
        return acc * complex(t0) ** self.low if self.coeffs else 0j

    def scale_variable(self, c):
        """f(c*t), c rational or cyclotomic and nonzero."""
        if not self.coeffs:
            return self
        c = _lift(c, c.order if isinstance(c, CyclotomicNumber) else 1)
        q = math.lcm(self.order, c.order)
        c = c.embed(q)
        cs = []
        p = c ** self.low
        for x in self.coeffs:
            cs.append(x.embed(q) * p)
            p = p * c
        return LaurentPolynomial._raw(cs, self.low, q)

    def map_coefficients(self, fn, order=None):
        return LaurentPolynomial._raw([fn(c) for c in self.coeffs], self.low,
                                      self.order if order is None else order)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        if not self.coeffs and not other.coeffs:
            return True
        return (self.low == other.low and len(self.coeffs) == len(other.coeffs)
                and all(x == y for x, y in zip(self.coeffs, other.coeffs)))

    def __hash__(self):
        if self.is_constant():
            return hash(self.coeffs[0]) if self.coeffs else hash(0)
        return hash((self.low, tuple(hash(c) for c in self.coeffs)))

    def __repr__(self):
        return "LaurentPolynomial(%s)" % self

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            e = self.low + k
            mono = "" if e == 0 else ("t" if e == 1 else "t^%d" % e)
            cs = str(c)
            if not c.is_rational():
                cs = "(%s)" % cs
            if not mono:
                terms.append(cs)
            elif cs == "1":
                terms.append(mono)
            elif cs == "-1":
                terms.append("-" + mono)
            else:
                terms.append("%s*%s" % (cs, mono))
        return " + ".join(terms).replace("+ -", "- ")


def _poly_divmod(a, b, lead_inv, q):
    a = list(a)
    nb = len(b)
    if len(a) < nb:
        return [], a
    zero = _zero(q)
    quo = [zero] * (len(a) - nb + 1)
    nzb = [(i, y) for i, y in enumerate(b[:-1]) if y]
    for k in range(len(a) - nb, -1, -1):
        top = a[k + nb - 1]
        if top:
            c = top * lead_inv
            quo[k] = c
            for i, y in nzb:
                a[k + i] = a[k + i] - c * y
            a[k + nb - 1] = zero
    return quo, a[:nb - 1]


def _exact_div(a, bcoeffs, blow, lead_inv):
    if lead_inv is None:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a.coeffs:
        return a
    quo, rem = _poly_divmod(list(a.coeffs), list(bcoeffs), lead_inv, a.order)
    if any(r for r in rem):
        raise ArithmeticError("Laurent polynomial division is not exact")
    return LaurentPolynomial._raw(quo, a.low - blow, a.order)


class ExactDivisor:
    """A divisor with its leading-coefficient inverse cached for repeated exact division."""

    __slots__ = ("coeffs", "low", "lead_inv")

    def __init__(self, poly):
        if not poly.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        self.coeffs = list(poly.coeffs)
        self.low = poly.low
        self.lead_inv = poly.coeffs[-1].inverse()

    def divide(self, a):
        return _exact_div(a, self.coeffs, self.low, self.lead_inv)


def poly_gcd(f, g):
    """
    Monic greatest common divisor in Q(zeta)[t, 1/t], normalized to have
    lowest exponent 0 (powers of t are units).
    """
    f, g = f._common(g)
    a = f.shift(-f.low) if f.coeffs else f
    b = g.shift(-g.low) if g.coeffs else g
    while b.coeffs:
        _, r = a.divmod_poly(b)
        r = r.shift(-r.low) if r.coeffs else r
        a, b = b, r
    if not a.coeffs:
        return a
    return a.monic()


class RationalFunction:
    """
    A quotient numerator/denominator of Laurent polynomials in lowest terms.

    Normal form: the denominator has lowest exponent 0 and lowest coefficient 1.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=None, normalize=True):
        if not isinstance(numerator, LaurentPolynomial):
            numerator = LaurentPolynomial.constant(numerator)
        if denominator is None:
            denominator = LaurentPolynomial.constant(1, numerator.order)
        elif not isinstance(denominator, LaurentPolynomial):
            denominator = LaurentPolynomial.constant(denominator, numerator.order)
        numerator, denominator = numerator._common(denominator)
        if denominator.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if normalize:
            numerator, denominator = _normalize_pair(numerator, denominator)
        self.numerator = numerator
        self.denominator = denominator

    @property
    def order(self):
        return self.numerator.order

    def is_zero(self):
        return self.numerator.is_zero()

    def is_laurent(self):
        return self.denominator.is_constant()

    def embed(self, order):
        return RationalFunction(self.numerator.embed(order), self.denominator.embed(order),
                                normalize=False)

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, CyclotomicNumber, LaurentPolynomial)):
            return RationalFunction(other)
        return None

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.numerator * other.numerator,
                                self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.numerator * other.denominator,
                                self.denominator * other.numerator)

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.numerator * other.denominator
                                + other.numerator * self.denominator,
                                self.denominator * other.denominator)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.numerator, self.denominator, normalize=False)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __pow__(self, k):
        if k < 0:
            return RationalFunction(self.denominator, self.numerator) ** -k
        return RationalFunction(self.numerator ** k, self.denominator ** k)

    def evaluate(self, x):
        den = self.denominator.evaluate(x)
        if den.is_zero():
            raise ZeroDivisionError("evaluation at a pole")
        return self.numerator.evaluate(x) / den

    def eval_numeric(self, t0, tol=1e-12):
        den = self.denominator.eval_numeric(t0)
        if abs(den) <= tol:
            raise ZeroDivisionError("evaluation at a pole t = %r" % (t0,))
        return self.numerator.eval_numeric(t0) / den

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __repr__(self):
        return "RationalFunction(%s)" % self

    def __str__(self):
        if self.denominator.is_constant() and self.denominator.coeffs[0] == 1:
            return str(self.numerator)
        return "(%s)/(%s)" % (self.numerator, self.denominator)


def _normalize_pair(num, den):
    if num.is_zero():
        return num, LaurentPolynomial.constant(1, den.order)
    g = poly_gcd(num, den)
    if g.degree_span() > 0:
        num = num.exact_div(g)
        den = den.exact_div(g)
    shift = -den.low
    num, den = num.shift(shift), den.shift(shift)
    c = den.coeffs[0]
    if c != 1:
        inv = c.inverse()
        num = LaurentPolynomial._raw([x * inv for x in num.coeffs], num.low, num.order)
        den = LaurentPolynomial._raw([x * inv for x in den.coeffs], den.low, den.order)
    return num, den


def ratfn_normalize(num, den):
    """Reduce num/den to lowest terms with the unit-normalized denominator."""
    return RationalFunction(num, den)


def eq_up_to_unit(f, g):
    """True iff f = +-t^k * g for some integer k."""
    if not isinstance(f, RationalFunction):
        f = RationalFunction(f)
    if not isinstance(g, RationalFunction):
        g = RationalFunction(g)
    if f.denominator != g.denominator:
        return False
    a, b = f.numerator, g.numerator
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    if len(a.coeffs) != len(b.coeffs):
        return False
    if all(x == y for x, y in zip(a.coeffs, b.coeffs)):
        return True
    return all(x == -y for x, y in zip(a.coeffs, b.coeffs))


def eval_numeric(f, t0):
    """Complex value of a Laurent polynomial or rational function at t0 (zeta_q -> e^{2 pi i/q})."""
    return f.eval_numeric(t0)


def unit_canonical(f):
    """
    The representative of f modulo +-t^k whose numerator starts at t^0 and
    whose lowest numerator coefficient has positive first nonzero coordinate.
    """
    num = f.numerator
    if num.is_zero():
        return f
    num = num.shift(-num.low)
    lead = next(c for c in num.coeffs[0].coeffs if c)
    if lead < 0:
        num = -num
    return RationalFunction(num, f.denominator, normalize=False)
