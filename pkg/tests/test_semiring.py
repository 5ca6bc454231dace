from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropfan import NEG_INF, TEXT_BOTTOM, TExt, text, text_add, text_mul, trop_add, trop_mul, trop_sum
from tropfan.laurent import LaurentPoly, canonicalize
from tropfan.semiring import as_trop, is_bool_value

rationals = st.fractions(max_denominator=8, min_value=-20, max_value=20)
trop_values = st.one_of(st.just(NEG_INF), rationals)


def test_neg_inf_ordering():
    assert NEG_INF < Fraction(-1000)
    assert NEG_INF < 0
    assert not (NEG_INF < NEG_INF)
    assert NEG_INF <= NEG_INF
    assert NEG_INF == NEG_INF
    assert not (NEG_INF > -5)
    assert Fraction(3) > NEG_INF
    assert repr(NEG_INF) == "-inf"
    assert hash(NEG_INF) == hash(NEG_INF)


def test_neg_inf_absorbs_addition():
    assert NEG_INF + 3 is NEG_INF
    assert Fraction(7, 2) + NEG_INF is NEG_INF
    with pytest.raises(ArithmeticError):
        -NEG_INF  # noqa: B018


@given(trop_values, trop_values)
def test_trop_ops_commute(a, b):
    assert trop_add(a, b) == trop_add(b, a)
    assert trop_mul(a, b) == trop_mul(b, a)


@given(trop_values, trop_values, trop_values)
def test_trop_ops_associate_distribute(a, b, c):
    assert trop_add(trop_add(a, b), c) == trop_add(a, trop_add(b, c))
    assert trop_mul(trop_mul(a, b), c) == trop_mul(a, trop_mul(b, c))
    assert trop_mul(a, trop_add(b, c)) == trop_add(trop_mul(a, b), trop_mul(a, c))


def test_trop_identities():
    assert trop_add(NEG_INF, Fraction(5)) == 5
    assert trop_mul(Fraction(0), Fraction(5)) == 5
    assert trop_mul(NEG_INF, Fraction(5)) is NEG_INF
    assert trop_sum([]) is NEG_INF
    assert trop_sum([Fraction(1), NEG_INF, Fraction(4)]) == 4


def test_value_predicates():
    assert is_bool_value(NEG_INF) and is_bool_value(Fraction(0)) and is_bool_value(0)
    assert not is_bool_value(Fraction(1))
    assert as_trop(3) == Fraction(3)
    assert as_trop(NEG_INF) is NEG_INF
    with pytest.raises(TypeError):
        as_trop(1.5)


# -- graded extension ---------------------------------------------------


def _germ(terms, grade):
    part = canonicalize(LaurentPoly.make(2, [(u, 0) for u in terms]))
    return text(part, Fraction(grade))


def test_text_constructor_rejects_empty_part():
    with pytest.raises(ValueError):
        text(canonicalize(LaurentPoly.zero(2)), Fraction(0))


def test_text_add_compares_grades():
    lo = _germ([(1, 0)], 1)
    hi = _germ([(0, 1)], 2)
    assert text_add(lo, hi) == hi
    assert text_add(hi, lo) == hi
    # tie merges the parts
    tie = text_add(_germ([(1, 0)], 2), hi)
    assert tie.grade == 2
    assert tie.part.terms == canonicalize(
        LaurentPoly.make(2, [((1, 0), 0), ((0, 1), 0)])
    ).terms


def test_text_bottom_is_identity_and_absorbing():
    x = _germ([(1, 0)], 3)
    assert text_add(TEXT_BOTTOM, x) == x
    assert text_add(x, TEXT_BOTTOM) == x
    assert text_mul(TEXT_BOTTOM, x) == TEXT_BOTTOM
    assert text_mul(x, TEXT_BOTTOM) == TEXT_BOTTOM
    assert TEXT_BOTTOM.is_bottom and not x.is_bottom
    assert not TEXT_BOTTOM
    assert x


def test_text_mul_adds_grades_multiplies_parts():
    a = _germ([(1, 0)], 1)
    b = _germ([(0, 1), (1, 1)], 2)
    p = text_mul(a, b)
    assert p.grade == 3
    assert set(p.part.terms) == {((1, 1), 0), ((2, 1), 0)}


@st.composite
def text_elements(draw):
    if draw(st.booleans(), label="bottom"):
        n = draw(st.integers(1, 3))
        k = draw(st.integers(1, 3))
        terms = draw(
            st.lists(
                st.tuples(*[st.integers(-2, 2) for _ in range(n)]),
                min_size=1,
                max_size=k,
            )
        )
        part = canonicalize(LaurentPoly.make(n, [(u, 0) for u in terms]))
        return TExt(part, draw(rationals))
    return TEXT_BOTTOM


@given(text_elements(), text_elements())
def test_text_add_commutes(x, y):
    # only meaningful when both live over the same variable count
    if x.is_bottom or y.is_bottom or x.part.num_vars == y.part.num_vars:
        assert text_add(x, y) == text_add(y, x)


def test_operator_sugar():
    a = _germ([(1, 0)], 1)
    b = _germ([(0, 1)], 2)
    assert a + b == text_add(a, b)
    assert a * b == text_mul(a, b)
