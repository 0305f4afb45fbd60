import cmath
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from twistalex.algebra import (CyclotomicNumber, LaurentPolynomial, PolyMatrix, RationalFunction,
                               characteristic_polynomial, cyclotomic_polynomial, delta,
                               determinant, eq_up_to_unit, eval_numeric, mat_det, mat_from_rows,
                               mat_inverse, mat_mul, poly_gcd, ratfn_normalize, root_of_unity_order,
                               unit_canonical)

Z = CyclotomicNumber.zeta
T = LaurentPolynomial.t()
ONE = LaurentPolynomial.constant(1)


def lp(*coeffs, low=0, order=1):
    return LaurentPolynomial(list(coeffs), low, order)


# -- cyclotomic polynomials ------------------------------------------------

def test_cyclotomic_small_cases():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(15) == (1, -1, 0, 1, -1, 1, 0, -1, 1)


@pytest.mark.parametrize("q", range(1, 61))
def test_cyclotomic_matches_sympy(q):
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(q, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(q)) == [int(c) for c in expected]


# -- field arithmetic -------------------------------------------------------

def test_small_identities():
    z3 = Z(3)
    assert z3 * z3 * z3 == 1
    assert (1 + z3) * (1 + z3 ** 2) == 1
    assert z3.inverse() == z3 ** 2
    for q in (5, 7, 12, 15):
        assert Z(q).inverse() == Z(q, q - 1)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        CyclotomicNumber.rational(0, 5).inverse()


def test_embed_and_project():
    assert CyclotomicNumber.rational(1).embed(3) == 1
    assert Z(3).embed(15) == Z(15, 5)
    x = Z(5, 2) + Fraction(3, 7)
    assert x.embed(45).project(5) == x
    assert x.embed(45).project(5).order == 5
    with pytest.raises(ValueError):
        Z(3).embed(10)


def test_cross_order_equality_and_hash():
    assert Z(3) == Z(15, 5)
    assert hash(Z(3)) == hash(Z(15, 5))
    assert hash(CyclotomicNumber.rational(2, 9)) == hash(CyclotomicNumber.rational(2))
    assert Z(6) == -Z(3, 2)


def test_sum_of_conjugate_roots_is_minus_one():
    s = Z(3) + Z(3, 2)
    assert s == -1
    assert abs(abs(s.to_complex()) - 1) < 1e-15


def test_to_complex_principal_embedding():
    assert abs(Z(7, 3).to_complex() - cmath.exp(2j * cmath.pi * 3 / 7)) < 1e-14


def test_coefficients_are_reduced():
    x = (Z(9) * Fraction(2, 6)) ** 7
    assert len(x.coeffs) == 6
    assert all(c.denominator > 0 for c in x.coeffs)
    assert all(Fraction(c) == c for c in x.coeffs)


@pytest.mark.parametrize("q", range(1, 46))
def test_exact_order_of_zeta(q):
    z = Z(q)
    assert z ** q == 1
    assert all(z ** k != 1 for k in range(1, q))
    assert root_of_unity_order(z) == q


def test_root_of_unity_order_rejects_non_roots():
    with pytest.raises(ValueError):
        root_of_unity_order(1 + Z(5))


def cyc(q):
    coef = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.lists(coef, min_size=1, max_size=12).map(lambda cs: CyclotomicNumber(q, cs))


@given(st.sampled_from([1, 3, 4, 5, 9, 12, 15]).flatmap(
    lambda q: st.tuples(cyc(q), cyc(q), cyc(q))))
def test_field_axioms(abc):
    a, b, c = abc
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@given(st.sampled_from([3, 5, 7, 9]).flatmap(lambda q: st.tuples(cyc(q), st.just(q))),
       st.integers(1, 8))
def test_galois_is_a_ring_homomorphism(xq, k):
    x, q = xq
    if k % q == 0 or sympy.gcd(k, q) != 1:
        return
    y = x * x + 1
    assert y.galois(k) == x.galois(k) * x.galois(k) + 1


# -- delta ------------------------------------------------------------------

def test_delta_values():
    assert delta(2, CyclotomicNumber.rational(1)) == 3
    assert delta(0, Z(7)) == 1
    lam = Z(7)
    assert delta(2, lam) * (lam - 1) == lam ** 3 - 1


@given(st.integers(0, 8), st.sampled_from([3, 5, 7, 15]), st.integers(0, 30))
def test_delta_doubling(k, q, e):
    b = Z(q, e)
    assert (1 + b ** (k + 1)) * delta(k, b) == delta(2 * k + 1, b)


# -- Laurent polynomials ----------------------------------------------------

def test_laurent_canonical_form():
    p = lp(0, 0, 1, 2, 0, low=-3)
    assert p.low == -1 and len(p.coeffs) == 2
    z = lp(0, 0, low=4)
    assert z.is_zero() and z.low == 0 and z.coeffs == ()


def test_laurent_arithmetic():
    p = T + 1
    assert p * p == lp(1, 2, 1)
    assert (T ** -2) * (T ** 2) == 1
    assert (p ** 3).exact_div(p) == p * p
    q, r = lp(1, 0, 1).divmod_poly(lp(1, 1))
    assert q * lp(1, 1) + r == lp(1, 0, 1)
    with pytest.raises(ArithmeticError):
        lp(1, 0, 1).exact_div(lp(1, 1))


def test_laurent_evaluate_exact_and_numeric():
    p = lp(1, 0, 1, low=-1)
    assert p.evaluate(1) == 2
    assert p.evaluate(Z(4)) == 0
    assert abs(p.eval_numeric(2.0) - 2.5) < 1e-15


def test_scale_variable():
    p = lp(1, 1, 1)
    i4 = Z(4)
    assert p.scale_variable(i4) == lp(1, i4, -1)
    assert p.scale_variable(-1) == lp(1, -1, 1)


def test_gcd_is_monic():
    g = poly_gcd(lp(-1, 0, 1), lp(1, 2, 1))
    assert g == lp(1, 1)
    g = poly_gcd(lp(2, 2) * lp(1, Z(3)), lp(3, 0, 3) * lp(1, Z(3)))
    assert g == lp(1, Z(3)) or g == lp(Z(3, 2), 1)


# -- rational functions ----------------------------------------------------

def test_ratfn_normalize_examples():
    assert ratfn_normalize(lp(0, 1, 0, 1), T) == RationalFunction(lp(1, 0, 1))
    assert ratfn_normalize(LaurentPolynomial(), lp(1, 0, 1)).is_zero()
    f = ratfn_normalize(lp(1, 0, -1, 0, 1), lp(1, 0, 1))
    assert f.numerator == lp(1, 0, -1, 0, 1) and f.denominator == lp(1, 0, 1)


def test_ratfn_denominator_convention():
    f = RationalFunction(lp(3, 0, 3, low=2), lp(0, 6, 6, low=-4))
    assert f.denominator.low == 0
    assert f.denominator.coeffs[0] == 1
    assert f == RationalFunction(lp(1, 0, 1, low=5), lp(2, 2))
    assert f.numerator == lp(Fraction(1, 2), 0, Fraction(1, 2), low=5)


def test_zero_denominator_raises():
    with pytest.raises(ZeroDivisionError):
        RationalFunction(T, LaurentPolynomial())


def test_eq_up_to_unit_examples():
    a = RationalFunction(lp(1, 0, 1))
    assert eq_up_to_unit(a, RationalFunction(-T * lp(1, 0, 1)))
    assert not eq_up_to_unit(a, RationalFunction(lp(-1, 0, 1)))
    assert not eq_up_to_unit(a, RationalFunction(lp(1, 0, 1) * 2))


def test_unit_canonical_representative():
    f = RationalFunction(-T ** 3 * lp(1, 0, 1))
    g = unit_canonical(f)
    assert g.numerator == lp(1, 0, 1)
    assert eq_up_to_unit(f, g)


def test_eval_numeric_examples():
    assert eval_numeric(lp(1, 0, 1), 1) == 2
    f = RationalFunction(lp(1, 0, -1, 0, 1), lp(1, 0, 1))
    assert abs(eval_numeric(f, 1) - 0.5) < 1e-15
    with pytest.raises(ZeroDivisionError):
        RationalFunction(ONE, lp(-1, 1)).eval_numeric(1)


small_poly = st.lists(st.integers(-3, 3), min_size=1, max_size=4).flatmap(
    lambda cs: st.integers(-2, 2).map(lambda low: LaurentPolynomial(cs, low)))


@given(small_poly, small_poly.filter(bool), st.integers(-3, 3), st.sampled_from([1, -1]))
def test_ratfn_idempotent_and_units(num, den, k, s):
    f = RationalFunction(num, den)
    assert RationalFunction(f.numerator, f.denominator) == f
    g = RationalFunction(num * T ** k * s, den)
    assert eq_up_to_unit(f, g) and eq_up_to_unit(g, f)
    h = RationalFunction(num * T ** -k * s, den * T ** 2)
    assert eq_up_to_unit(g, h) and eq_up_to_unit(f, h)


# -- determinants -----------------------------------------------------------

def test_determinant_examples():
    assert determinant(PolyMatrix.identity(3)) == 1
    assert determinant(PolyMatrix([[T, 0], [0, T ** -1]])) == 1
    m = PolyMatrix([[1, -T], [T, 1]])
    assert determinant(m) == lp(1, 0, 1)
    assert determinant(m, "cofactor") == lp(1, 0, 1)


def poly_matrix(n, q):
    entry = st.lists(st.integers(-2, 2), min_size=0, max_size=3).flatmap(
        lambda cs: st.integers(-1, 1).flatmap(
            lambda low: st.integers(0, q - 1).map(
                lambda e: LaurentPolynomial(cs, low, q) * LaurentPolynomial.constant(Z(q, e)))))
    return st.lists(st.lists(entry, min_size=n, max_size=n), min_size=n, max_size=n).map(PolyMatrix)


@given(st.integers(1, 4).flatmap(lambda n: poly_matrix(n, 3)))
def test_bareiss_matches_cofactor(m):
    assert determinant(m, "bareiss") == determinant(m, "cofactor")


@given(st.tuples(poly_matrix(3, 5), poly_matrix(3, 5)))
def test_determinant_multiplicative(ab):
    a, b = ab
    assert determinant(a * b) == determinant(a) * determinant(b)


def test_determinant_matches_sympy():
    t = sympy.Symbol("t")
    rows = [[T + 2, T ** 2, 1 - T], [3, T ** -1, T], [T ** 2 - 1, 2 * T, 5]]
    ours = determinant(PolyMatrix(rows))
    theirs = sympy.Matrix([[t + 2, t ** 2, 1 - t], [3, 1 / t, t], [t ** 2 - 1, 2 * t, 5]]).det()
    for t0 in (2, 3, Fraction(1, 2)):
        assert ours.evaluate(t0).to_fraction() == sympy.Rational(theirs.subs(t, t0))


def test_constant_matrix_inverse_and_det():
    a = mat_from_rows(((Z(5), 1), (2, Z(5, 3))))
    ai = mat_inverse(a)
    assert mat_mul(a, ai) == ((1, 0), (0, 1))
    assert mat_det(a) == Z(5, 4) - 2


def test_characteristic_polynomial():
    a = ((2, 1), (0, 3))
    assert characteristic_polynomial(a) == lp(6, -5, 1)
