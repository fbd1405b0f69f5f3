from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import arith
from arith import ExponentVector, Ordering, as_rational, componentwise_leq, format_rational, lex_compare, parse_rational
from errors import DimensionMismatch, InvalidDimension, MalformedRational, NegativeCoordinate


@pytest.mark.parametrize(
    "text, expected",
    [("1/3", Fraction(1, 3)), ("4/6", Fraction(2, 3)), ("0", Fraction(0)), (" -7 / 2 ", Fraction(-7, 2)), ("0/5", Fraction(0))],
)
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["1/0", "0.5", "1e3", "a/b", "", "1//2", "3/-2", "\u0663/\u0662", "1/\uff12"])
def test_parse_rational_rejects(text):
    with pytest.raises(MalformedRational):
        parse_rational(text, locus="exponents[0][0]")


def test_parse_rational_carries_locus():
    with pytest.raises(MalformedRational) as info:
        parse_rational("x", locus="exponents[1][0]")
    assert info.value.locus == "exponents[1][0]"
    assert info.value.to_dict()["error"]["code"] == "E_MALFORMED_RATIONAL"


def test_parse_rational_rejects_non_strings():
    with pytest.raises(MalformedRational):
        parse_rational(0.5)


@given(st.fractions())
def test_format_then_parse_is_identity(x):
    assert parse_rational(format_rational(x)) == x


def test_format_rational_integers_have_no_slash():
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-1, 2)) == "-1/2"


def test_exponent_vector_validation():
    with pytest.raises(InvalidDimension):
        ExponentVector(())
    with pytest.raises(NegativeCoordinate):
        ExponentVector.of("1/2", "-1/3")
    v = ExponentVector.of("2/4", 0, Fraction(3))
    assert v.coords == (Fraction(1, 2), Fraction(0), Fraction(3))
    assert v.nonzero_count() == 2
    assert v.to_strings() == ["1/2", "0", "3"]


def test_permuted_uses_source_indices():
    v = ExponentVector.of("1/2", "1/3", "1/5")
    assert v.permuted([2, 0, 1]).coords == (Fraction(1, 5), Fraction(1, 2), Fraction(1, 3))


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (("0", "0"), ("1/3", "1/3"), True),
        (("1/3", "1/3"), ("7/6", "2/3"), True),
        (("1/2", "1/2"), ("2/3", "1/3"), False),
    ],
)
def test_componentwise_leq(a, b, expected):
    assert componentwise_leq(ExponentVector(a), ExponentVector(b)) is expected


def test_componentwise_leq_length_mismatch():
    with pytest.raises(DimensionMismatch):
        componentwise_leq(ExponentVector.of(1), ExponentVector.of(1, 2))


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (("1/2", "2/3"), ("1/2", "2/3"), Ordering.EQUAL),
        (("1/2", "2/3"), ("0", "11/3"), Ordering.GREATER),
        (("1/3", "7/6"), ("1/3", "2/3"), Ordering.GREATER),
        (("1/3", "2/3"), ("1/3", "7/6"), Ordering.LESS),
    ],
)
def test_lex_compare(a, b, expected):
    assert lex_compare([parse_rational(x) for x in a], [parse_rational(x) for x in b]) == expected


def test_huge_rationals_round_trip():
    numerator = 10 ** 5000 + 1
    text = f"{numerator}/2"
    value = parse_rational(text)
    assert value == Fraction(numerator, 2)
    assert format_rational(value) == text
    assert parse_rational(str(10 ** 5000)) == Fraction(10 ** 5000)


@given(st.integers(-10 ** 6, 10 ** 6), st.integers(1, 10 ** 6), st.integers(1, 500))
def test_parse_reduces_to_lowest_terms(num, den, k):
    value = parse_rational(f"{k * num}/{k * den}")
    assert value == parse_rational(f"{num}/{den}") == Fraction(num, den)
    assert format_rational(value) == format_rational(Fraction(num, den))


nonneg = st.fractions(min_value=0, max_value=50, max_denominator=24)


def _vectors(length):
    return st.lists(nonneg, min_size=length, max_size=length).map(lambda xs: ExponentVector(tuple(xs)))


@given(st.integers(1, 5).flatmap(lambda d: st.tuples(_vectors(d), _vectors(d), _vectors(d))))
def test_componentwise_leq_is_a_partial_order(vectors):
    a, step, step2 = vectors
    b = ExponentVector(tuple(x + y for x, y in zip(a, step)))
    c = ExponentVector(tuple(x + y for x, y in zip(b, step2)))
    assert componentwise_leq(a, a)
    assert componentwise_leq(a, b) and componentwise_leq(b, c)
    assert componentwise_leq(a, c)
    if componentwise_leq(b, a):
        assert a == b


@given(st.integers(1, 5).flatmap(lambda d: st.tuples(*[st.lists(nonneg, min_size=d, max_size=d)] * 3)))
def test_lex_compare_is_a_total_order(triple):
    a, b, c = triple
    forward, backward = lex_compare(a, b), lex_compare(b, a)
    assert forward.value == -backward.value
    assert (forward is Ordering.EQUAL) == (a == b)
    if forward is not Ordering.GREATER and lex_compare(b, c) is not Ordering.GREATER:
        assert lex_compare(a, c) is not Ordering.GREATER
    assert lex_compare(a, b) is Ordering(((a > b) - (a < b)))


def test_as_rational_is_the_only_coercion():
    assert as_rational(Fraction(1, 3)) == as_rational(1) / 3 == as_rational("2/6")
    with pytest.raises(MalformedRational):
        as_rational(0.5)
    assert not hasattr(arith, "rationals")
    assert not hasattr(arith, "Rational")
