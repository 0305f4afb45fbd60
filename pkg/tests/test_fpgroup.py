import pytest
from hypothesis import given, strategies as st

from twistalex.fpgroup import (AbelianizationError, GroupRingElement, Presentation,
                               PresentationError, Word, WordSyntaxError, abelianization,
                               diagonalize, fox_derivative, free_reduce, geometric_series,
                               parse_word, render_word)

W = parse_word
GENS = ("a", "b", "c")


def words(gens=GENS, max_len=12):
    letter = st.tuples(st.sampled_from(gens), st.sampled_from([1, -1]))
    return st.lists(letter, max_size=max_len).map(Word)


# -- parsing and reduction --------------------------------------------------

def test_parse_examples():
    assert W("mu x1^2 mu^-1").syllables == (("mu", 1), ("x1", 2), ("mu", -1))
    assert W("x1 x1^-1").is_identity()
    r1 = W("mu x1^3 mu^-1 x2 x1^-3")
    assert r1.syllables == (("mu", 1), ("x1", 3), ("mu", -1), ("x2", 1), ("x1", -3))
    assert W("  a^+2\tb  ").syllables == (("a", 2), ("b", 1))
    assert W("").is_identity()


def test_parse_zero_exponent_reports_position():
    with pytest.raises(WordSyntaxError) as err:
        W("mu x1^0")
    assert err.value.position == 5


@pytest.mark.parametrize("text", ["1x", "a^", "a^b", "a^-", "a*b", "a^2^3"])
def test_parse_rejects_bad_tokens(text):
    with pytest.raises(WordSyntaxError):
        W(text)


def test_free_reduce_examples():
    assert free_reduce([("x", 1), ("y", 1), ("y", -1), ("x", 1)]) == W("x^2")
    assert free_reduce(Word()).is_identity()
    r1 = W("mu x1^3 mu^-1 x2 x1^-3")
    assert (r1 * r1.inverse()).is_identity()


@given(words())
def test_render_parse_round_trip(w):
    assert W(render_word(w)) == w
    assert str(w) == (render_word(w) or "1")


@given(words(), words())
def test_word_group_laws(u, v):
    assert (u * v).inverse() == v.inverse() * u.inverse()
    assert (u * u.inverse()).is_identity()
    assert free_reduce(u * v) == u * v


# -- Fox calculus ------------------------------------------------------------

def test_fox_basic_rules():
    a, b = Word.generator("a"), Word.generator("b")
    assert fox_derivative(a, "a") == GroupRingElement.one()
    assert fox_derivative(a.inverse(), "a") == -GroupRingElement.of(a.inverse())
    assert fox_derivative(b, "a").is_zero()
    assert fox_derivative(W("x y"), "y") == GroupRingElement.of(W("x"))


@pytest.mark.parametrize("m", range(1, 6))
def test_fox_of_power_is_geometric_series(m):
    x = Word.generator("x")
    assert fox_derivative(x ** m, "x") == geometric_series(x, m)
    assert fox_derivative(x ** -m, "x") == -(GroupRingElement.of(x ** -m) * geometric_series(x, m))


@pytest.mark.parametrize("n", range(1, 4))
def test_fox_of_lin_relator(n):
    r2 = W("mu x2^%d x1 mu^-1 x2^%d" % (-n, n))
    assert fox_derivative(r2, "x1") == GroupRingElement.of(W("mu x2^%d" % -n))


@given(words(), words(), st.sampled_from(GENS))
def test_fox_product_rule(u, v, g):
    assert fox_derivative(u * v, g) == fox_derivative(u, g) + u * fox_derivative(v, g)


@given(words())
def test_fox_fundamental_identity(w):
    total = GroupRingElement()
    for g in GENS:
        total = total + fox_derivative(w, g) * (Word.generator(g) - GroupRingElement.one())
    assert total == w - GroupRingElement.one()


def test_group_ring_arithmetic():
    a = GroupRingElement.of(W("a"))
    assert (a - a).is_zero()
    assert (a + 1) * (a - 1) == GroupRingElement.of(W("a^2")) - 1
    assert (2 * a + 3).augmentation() == 5


# -- presentations and abelianization ---------------------------------------

def test_presentation_validation():
    with pytest.raises(PresentationError):
        Presentation(["a", "a"], [])
    with pytest.raises(PresentationError):
        Presentation(["a", "1b"], [])
    with pytest.raises(PresentationError):
        Presentation(["a"], ["a b"])
    with pytest.raises(PresentationError):
        Presentation(["a"], [], meridian="b")
    p = Presentation(["a", "b"], [])
    assert p.deficiency == 2
    with pytest.raises(PresentationError):
        p.require_deficiency_one()


def test_abelianization_lin_form():
    p = Presentation(["x1", "x2", "mu"],
                     ["mu x1 mu^-1 x2 x1^-1", "mu x2^-1 x1 mu^-1 x2"], meridian="mu")
    alpha = abelianization(p)
    assert alpha.degrees == {"x1": 0, "x2": 0, "mu": 1}


def test_abelianization_rank_two_rejected():
    with pytest.raises(AbelianizationError):
        abelianization(Presentation(["a", "b"], ["a b a^-1 b^-1"]))


def test_abelianization_degenerate_kernel():
    # exponent matrix (0, -1): kernel spanned by (1, 0)
    alpha = abelianization(Presentation(["a", "b"], ["a b^2 a^-1 b^-3"]))
    assert alpha.degrees == {"a": 1, "b": 0}
    with pytest.raises(AbelianizationError):
        abelianization(Presentation(["a", "b"], ["a b^2 a^-1 b^-3"], meridian="b"))


def test_abelianization_wirtinger_trefoil_and_orientation():
    alpha = abelianization(Presentation(["a", "b"], ["a b a b^-1 a^-1 b^-1"]))
    assert alpha.degrees == {"a": 1, "b": 1}
    alpha = abelianization(Presentation(["a", "b"], ["a^-1 b"], meridian="b"))
    assert alpha.degrees == {"a": 1, "b": 1}


def test_abelianization_torsion_rejected():
    with pytest.raises(AbelianizationError):
        abelianization(Presentation(["a", "b", "c"], ["a^2 b^-2", "c a c^-1 a^-1"]))


@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=1, max_size=3))
def test_diagonalize_kernel(rows):
    diag, v = diagonalize(rows)
    for j in range(len(diag), 3):
        col = [v[i][j] for i in range(3)]
        assert all(sum(r[i] * col[i] for i in range(3)) == 0 for r in rows)


@given(st.lists(words(max_len=8), min_size=2, max_size=2))
def test_accepted_abelianizations_are_consistent(rels):
    p = Presentation(GENS, rels)
    try:
        alpha = abelianization(p)
    except AbelianizationError:
        return
    assert all(alpha.degree(r) == 0 for r in rels)
    from math import gcd
    assert gcd(*alpha.degrees.values()) == 1
