"""
Genus one two-bridge knots J(2m, +-2n): Lin presentations, their
irreducible metabelian representations, and closed forms for the block
twisted Alexander polynomials and their limits.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from .algebra import CyclotomicNumber, LaurentPolynomial, RationalFunction, delta, eq_up_to_unit
from .fpgroup import Abelianization, Presentation, parse_word
from .rep import MetabelianData, _diagonal_rep, metabelian_rep, validate
from .tap import TorsionUndefined, torsion_from_result, twisted_alexander


@dataclass(frozen=True)
class TwoBridgeParams:
    m: int
    n: int
    sign: int = 1

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("m and n must be positive")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @classmethod
    def parse(cls, m, n, sign):
        s = {"+": 1, "plus": 1, "1": 1, "-": -1, "minus": -1, "-1": -1}.get(str(sign))
        if s is None:
            raise ValueError("sign must be plus or minus, got %r" % (sign,))
        return cls(int(m), int(n), s)

    @property
    def modulus(self):
        """Q = 4mn - 1 for J(2m, 2n) and 4mn + 1 for J(2m, -2n); equals |Delta_K(-1)|."""
        return 4 * self.m * self.n - self.sign

    @property
    def mn(self):
        return self.m * self.n

    def name(self):
        return "J(%d,%s%d)" % (2 * self.m, "" if self.sign > 0 else "-", 2 * self.n)

    def index_range(self):
        return range(1, (self.modulus - 1) // 2 + 1)

    def q_index(self, i):
        return self.modulus // math.gcd(self.modulus, i)


def alexander_polynomial(params):
    """mn t^2 + (1 - 2mn) t + mn for sign +, mn t^2 - (1 + 2mn) t + mn for sign -."""
    mn = params.mn
    middle = 1 - 2 * mn if params.sign > 0 else -(1 + 2 * mn)
    return LaurentPolynomial([mn, middle, mn])


def lin_presentation(params):
    """
    <x1, x2, mu | mu x1^m mu^-1 x2 x1^-m, mu x2^(-+n) x1 mu^-1 x2^(+-n)>
    with the meridian mu marked.
    """
    m, n, s = params.m, params.n, params.sign
    r1 = parse_word("mu x1^%d mu^-1 x2 x1^%d" % (m, -m))
    r2 = parse_word("mu x2^%d x1 mu^-1 x2^%d" % (-s * n, s * n))
    return Presentation(("x1", "x2", "mu"), (r1, r2), meridian="mu")


LIN_ABELIANIZATION = Abelianization({"x1": 0, "x2": 0, "mu": 1})


def metabelian_data(params, i):
    """z1 = xi^i, z2 = xi^(2mi) with xi = zeta_Q."""
    Q = params.modulus
    return MetabelianData((CyclotomicNumber.zeta(Q, i), CyclotomicNumber.zeta(Q, 2 * params.m * i)))


def enumerate_metabelian(params):
    """One MetabelianData per conjugacy class, i = 1..(Q-1)/2."""
    return [metabelian_data(params, i) for i in params.index_range()]


def block_exponent(params, i, j):
    """e with psi_{i,j}(x1) = diag(xi^-e, xi^e), i.e. e = i(2j-1) mod Q."""
    return (i * (2 * j - 1)) % params.modulus


@lru_cache(maxsize=4096)
def _block_tap(params, e):
    Q = params.modulus
    data = MetabelianData((CyclotomicNumber.zeta(Q, e), CyclotomicNumber.zeta(Q, 2 * params.m * e)))
    # diag(z^-1, z) is the normal form for z^-1; exponent -1 gives psi with x1 -> diag(xi^-e, xi^e)
    psi = _diagonal_rep(lin_presentation(params), data, -1, order=Q)
    return twisted_alexander(lin_presentation(params), psi, LIN_ABELIANIZATION)


def block_tap(params, i, j):
    """TapResult of psi_{i,j} from the Fox-calculus pipeline (memoized on i(2j-1) mod Q)."""
    return _block_tap(params, block_exponent(params, i, j))


def limit_polynomial(params):
    """m^2 n^2 t^4 + (2 m^2 n^2 -+ 4mn + 1) t^2 + m^2 n^2."""
    mn = params.mn
    return LaurentPolynomial([mn * mn, 0, 2 * mn * mn - params.sign * 4 * mn + 1, 0, mn * mn])


def _t2_plus_1():
    return LaurentPolynomial([1, 0, 1])


def closed_form_block(params, i, j):
    """
    Closed form of Delta_{K, psi_{i,j}} for J(2m, 2n): with b = xi^(i(2j-1)),
    b^(1+m-2mn) (delta_(m-1)(b) delta_(n-1)(b^(2m)))^2 (t^2+1) when b != 1,
    and limit_polynomial / (t^2 + 1) when b = 1.
    """
    if params.sign < 0:
        raise ValueError("closed-form blocks are only available for J(2m, 2n)")
    m, n, Q = params.m, params.n, params.modulus
    e = block_exponent(params, i, j)
    if e == 0:
        return RationalFunction(limit_polynomial(params), _t2_plus_1())
    b = CyclotomicNumber.zeta(Q, e)
    c = (CyclotomicNumber.zeta(Q, e * (1 + m - 2 * m * n))
         * (delta(m - 1, b) * delta(n - 1, CyclotomicNumber.zeta(Q, 2 * m * e))) ** 2)
    return RationalFunction(_t2_plus_1() * c)


@dataclass(frozen=True)
class ClosedFormLimit:
    period: int
    product: RationalFunction


def closed_form_limit(params, i):
    """period q_i and product limit_polynomial * (t^2+1)^(q_i - 2)."""
    q = params.q_index(i)
    return ClosedFormLimit(q, RationalFunction(limit_polynomial(params) * _t2_plus_1() ** (q - 2)))


def closed_form_torsion_limit(params, i):
    """(1/q_i) log((2mn -+ 1)/2) + (1/2) log 2."""
    q = params.q_index(i)
    return math.log((2 * params.mn - params.sign) / 2) / q + math.log(2) / 2


def closed_form_torsion_limit_gcd(params, i):
    """The same limit written as gcd(Q, i)/Q log((2mn -+ 1)/2) + (1/2) log 2."""
    Q = params.modulus
    return math.gcd(Q, i) / Q * math.log((2 * params.mn - params.sign) / 2) + math.log(2) / 2


def lemma_delta_product(q, k, lam=None):
    """
    prod over 1 <= j <= q, j != (q+1)/2 of delta_(k-1)(lam^(2j-1)), for
    lam a primitive q-th root of unity (default zeta_q); equals 1.
    """
    if q % 2 == 0 or q < 1:
        raise ValueError("q must be odd and positive")
    if math.gcd(k, q) != 1 or k < 1:
        raise ValueError("k must be a positive integer coprime to q")
    if lam is None:
        lam = CyclotomicNumber.zeta(q)
    result = CyclotomicNumber.rational(1, lam.order)
    for j in range(1, q + 1):
        if j == (q + 1) // 2:
            continue
        result = result * delta(k - 1, lam ** (2 * j - 1))
    return result


def block_product(params, i):
    """Exact product of the generic block values over one period j = 1..q_i."""
    value = RationalFunction(1)
    for j in range(1, params.q_index(i) + 1):
        value = value * block_tap(params, i, j).value
    return value


def abelian_block_indices(params, i):
    """All j in 1..q_i whose block is abelian, i.e. xi^(i(2j-1)) = 1."""
    return [j for j in range(1, params.q_index(i) + 1) if block_exponent(params, i, j) == 0]


def generic_torsion_limit(params, i):
    """(1/2q) sum_j log|Delta_{psi_{i,j}}(1)| from the Fox-calculus block values."""
    q = params.q_index(i)
    logs = [math.log(torsion_from_result(block_tap(params, i, j)).modulus)
            for j in range(1, q + 1)]
    return math.fsum(logs) / (2 * q)


def gaussian_product_identity(params):
    """
    Delta_K(sqrt(-1) t) Delta_K(-sqrt(-1) t) against m^2 n^2 (t^2+1)^2 + (1 -+ 4mn) t^2,
    both as polynomials with coefficients in Q(zeta_4).
    """
    i4 = CyclotomicNumber.zeta(4)
    d = alexander_polynomial(params)
    lhs = d.scale_variable(i4) * d.scale_variable(-i4)
    mn = params.mn
    rhs = LaurentPolynomial([mn * mn, 0, 2 * mn * mn + 1 - params.sign * 4 * mn, 0, mn * mn])
    return lhs == rhs and all(c.is_rational() for c in lhs.coeffs) and lhs == limit_polynomial(params)


def verification_suite(params, indices=None):
    """
    Run the oracle comparisons for one J(2m, +-2n) and return a list of
    (check name, passed) in a fixed order.
    """
    Q = params.modulus
    d = alexander_polynomial(params)
    checks = [
        ("count", len(enumerate_metabelian(params)) == (Q - 1) // 2),
        ("alexander_normalization",
         abs(d.evaluate(1).to_fraction()) == 1 and abs(d.evaluate(-1).to_fraction()) == Q),
        ("gaussian_product", gaussian_product_identity(params)),
    ]
    pres = lin_presentation(params)
    for i in indices or params.index_range():
        q = params.q_index(i)
        tag = "i=%d" % i
        try:
            ok = not validate(metabelian_rep(pres, metabelian_data(params, i)), pres)
        except ValueError:
            ok = False
        checks.append(("valid_rep[%s]" % tag, ok))
        checks.append(("single_abelian_block[%s]" % tag,
                       abelian_block_indices(params, i) == [(q + 1) // 2]))
        if params.sign > 0:
            checks.append(("closed_form_blocks[%s]" % tag, all(
                eq_up_to_unit(block_tap(params, i, j).value, closed_form_block(params, i, j))
                for j in range(1, q + 1))))
        limit = closed_form_limit(params, i)
        checks.append(("limit_product[%s]" % tag, block_product(params, i) == limit.product))
        try:
            gap = abs(generic_torsion_limit(params, i) - closed_form_torsion_limit(params, i))
            ok = gap <= 1e-12
        except TorsionUndefined:
            ok = False
        checks.append(("torsion_limit[%s]" % tag, ok and abs(
            closed_form_torsion_limit(params, i) - closed_form_torsion_limit_gcd(params, i)) <= 1e-12))
    return checks
