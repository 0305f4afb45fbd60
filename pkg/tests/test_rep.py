import pytest
from hypothesis import given, strategies as st

from twistalex.algebra import (CyclotomicNumber, block_diagonal, characteristic_polynomial,
                               mat_det, mat_from_rows, mat_identity, mat_mul, mat_scale)
from twistalex.algebra.laurent import LaurentPolynomial
from twistalex.fpgroup import Presentation
from twistalex.rep import (MU_MATRIX, MetabelianData, Representation, RepresentationError,
                           block, block_decomposition, conjugacy_check_blocks, direct_sum,
                           metabelian_data_from_rep, metabelian_rep, period, sym_power,
                           sym_power_matrix, validate)
from twistalex.twobridge import TwoBridgeParams, lin_presentation, metabelian_data

Z = CyclotomicNumber.zeta


def diag(a, b):
    return mat_from_rows(((a, 0), (0, b)))


def sl2(q):
    """Random SL(2, Q(zeta_q)) elements as words in elementary and diagonal matrices."""
    entry = st.tuples(st.integers(-2, 2), st.integers(0, q - 1)).map(lambda p: p[0] * Z(q, p[1]))
    gen = st.one_of(
        entry.map(lambda x: mat_from_rows(((1, x), (0, 1)), q)),
        entry.map(lambda x: mat_from_rows(((1, 0), (x, 1)), q)),
        st.integers(0, q - 1).map(lambda k: diag(Z(q, k), Z(q, -k))),
    )
    return st.lists(gen, min_size=1, max_size=4).map(_product)


def _product(ms):
    out = ms[0]
    for m in ms[1:]:
        out = mat_mul(out, m)
    return out


@pytest.fixture
def j22():
    params = TwoBridgeParams(1, 1, 1)
    return lin_presentation(params), metabelian_data(params, 1)


def test_trivial_representation_is_valid(j22):
    pres, _ = j22
    rho = Representation({g: mat_identity(3) for g in pres.generators})
    assert validate(rho, pres) == []
    p = Presentation(["a", "b"], ["a b a b^-1 a^-1 b^-1"])
    assert validate(Representation({"a": mat_identity(1), "b": mat_identity(1)}), p) == []


def test_metabelian_rep_of_trefoil(j22):
    pres, data = j22
    rho = metabelian_rep(pres, data)
    assert rho.images["x1"] == diag(Z(3), Z(3, 2))
    assert rho.images["x2"] == diag(Z(3, 2), Z(3))
    assert rho.sl and rho.dim == 2
    mu2 = mat_mul(rho.images["mu"], rho.images["mu"])
    assert mu2 == mat_scale(mat_identity(2), -1)


def test_fourth_root_breaks_a_relator(j22):
    pres, _ = j22
    rho = Representation({"x1": diag(Z(4), Z(4, 3)), "x2": diag(Z(3, 2), Z(3)),
                          "mu": mat_from_rows(MU_MATRIX)})
    assert validate(rho, pres)
    with pytest.raises(RepresentationError):
        MetabelianData((Z(4), Z(3)))


def test_missing_image_raises(j22):
    pres, _ = j22
    with pytest.raises(RepresentationError):
        validate(Representation({"x1": mat_identity(2)}), pres)


def test_singular_image_rejected():
    with pytest.raises(RepresentationError):
        Representation({"a": ((1, 1), (1, 1))})


def test_abelian_data_is_valid(j22):
    pres, _ = j22
    rho = metabelian_rep(pres, MetabelianData((1, 1)))
    assert rho.images["x1"] == mat_identity(2)


@pytest.mark.parametrize("n", range(1, 9))
def test_sym_power_identity(n):
    assert sym_power_matrix(mat_identity(2), n) == mat_identity(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_sym_power_diagonal(n):
    lam = Z(7)
    expected = mat_from_rows([[lam ** (2 * i - (n - 1)) if i == j else 0 for j in range(n)]
                              for i in range(n)])
    assert sym_power_matrix(diag(lam, lam ** -1), n) == expected


def test_sym_power_two_is_inverse_transpose():
    a = mat_from_rows(((2, 3), (1, 2)))
    s2 = sym_power_matrix(a, 2)
    assert s2 == mat_from_rows(((2, -1), (-3, 2)))
    j = mat_from_rows(MU_MATRIX)
    jinv = mat_scale(j, -1)
    assert mat_mul(mat_mul(j, a), jinv) == s2


@given(st.sampled_from([3, 5]).flatmap(lambda q: st.tuples(sl2(q), sl2(q))), st.integers(2, 6))
def test_sym_power_multiplicative_and_sl(ab, n):
    a, b = ab
    assert mat_mul(sym_power_matrix(a, n), sym_power_matrix(b, n)) == sym_power_matrix(
        mat_mul(a, b), n)
    assert mat_det(sym_power_matrix(a, n)) == 1


@pytest.mark.parametrize("n", range(1, 9))
@pytest.mark.parametrize("q", [1, 3, 5, 7, 9, 15])
def test_sym_power_characteristic_polynomial(n, q):
    lam = Z(q)
    got = characteristic_polynomial(sym_power_matrix(diag(lam, lam ** -1), n))
    expected = LaurentPolynomial.constant(1, q)
    for j in range(1, n + 1):
        expected = expected * (LaurentPolynomial.t(1, q) - lam ** (2 * j - 1 - n))
    assert got == expected


def test_sym_power_needs_dimension_two():
    with pytest.raises(RepresentationError):
        sym_power(Representation({"a": mat_identity(3)}), 2)


def test_direct_sum(j22):
    pres, data = j22
    rho = metabelian_rep(pres, data)
    assert direct_sum([rho]) == rho
    s = direct_sum([rho, block(data, pres, 2)])
    assert s.dim == 4
    for g in pres.generators:
        assert mat_det(s.images[g]) == mat_det(rho.images[g]) * mat_det(
            block(data, pres, 2).images[g])
    assert s.images["x1"] == block_diagonal([rho.images["x1"], mat_identity(2)])
    with pytest.raises(RepresentationError):
        direct_sum([rho, Representation({"a": mat_identity(2)})])


def test_period_examples():
    assert period(MetabelianData((1, 1))) == 1
    assert period(metabelian_data(TwoBridgeParams(1, 1, 1), 1)) == 3
    assert period(metabelian_data(TwoBridgeParams(1, 1, -1), 1)) == 5
    assert period(MetabelianData((Z(3), Z(5)))) == 15


def test_blocks_first_equals_rep_and_repeat(j22):
    pres, data = j22
    blocks = block_decomposition(data, pres, 7)
    # psi_1 is rho conjugated by the meridian matrix, which swaps the diagonal
    assert blocks[0] == metabelian_rep(pres, data).conjugate(MU_MATRIX)
    p = period(data)
    for j in range(len(blocks) - p):
        assert blocks[j] == blocks[j + p]
    assert blocks[1].images["x1"] == mat_identity(2)


@pytest.mark.parametrize("sign", [1, -1])
@pytest.mark.parametrize("count", range(1, 6))
def test_blocks_match_sym_power_restriction(count, sign):
    params = TwoBridgeParams(1, 1, sign)
    pres = lin_presentation(params)
    for data in [metabelian_data(params, i) for i in params.index_range()]:
        assert conjugacy_check_blocks(data, pres, count)


@pytest.mark.parametrize("count", [1, 2, 3, 4])
def test_sym_power_and_blocks_have_equal_char_polys(count):
    params = TwoBridgeParams(1, 2, 1)
    pres = lin_presentation(params)
    data = metabelian_data(params, 2)
    big = sym_power(metabelian_rep(pres, data), 2 * count)
    summed = direct_sum(block_decomposition(data, pres, count))
    for g in pres.generators:
        assert characteristic_polynomial(big.images[g]) == characteristic_polynomial(
            summed.images[g])


def test_data_recovered_from_rep(j22):
    pres, data = j22
    assert metabelian_data_from_rep(metabelian_rep(pres, data), pres) == data
    with pytest.raises(RepresentationError):
        metabelian_data_from_rep(sym_power(metabelian_rep(pres, data), 3), pres)


def test_conjugate_and_embed(j22):
    pres, data = j22
    rho = metabelian_rep(pres, data)
    c = ((1, 2), (0, 1))
    back = rho.conjugate(c).conjugate(((1, -2), (0, 1)))
    assert back == rho
    assert rho.embed(15).order == 15 and rho.embed(15) == rho
