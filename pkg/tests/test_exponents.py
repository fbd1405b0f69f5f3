from fractions import Fraction

import pytest

from errors import InLattice, InvalidDimension, NegativeCoordinate, NotWeaklyIncreasing, PreconditionFailed
from exponents import CharExponents, invert, is_lex_ordered, is_normalized, lattice_chain, lex_normalize, validate
from lattice import ScaledLattice


def test_example_one_invariants(example_one):
    inv = validate(example_one)
    assert inv.n == (3, 2)
    assert inv.e == (6, 2, 1)
    assert inv.ell == (0, 2, 2)
    assert inv.alpha == (((3, 1), (3, 1)), ((2, 5), (1, 1)))
    assert inv.alpha_value(2, 1) == Fraction(5, 2)


def test_example_two_invariants(example_two):
    inv = validate(example_two)
    assert inv.n == (2, 3)
    assert inv.e == (6, 3, 1)
    assert inv.ell == (0, 2, 3)
    assert inv.pq(2, 3) == (3, 11)


def test_lattice_chain_matches_hnf(example_one):
    chain = lattice_chain(example_one)
    assert chain[0] == ScaledLattice.standard(2, 6)
    assert chain[1].basis == ((2, 2), (0, 6))
    assert chain[2].basis == ((1, 4), (0, 6))


def test_smooth_instance():
    inv = validate(CharExponents(2))
    assert inv.g == 0
    assert inv.n == ()
    assert inv.e == (1,)


def test_in_lattice_rejected():
    with pytest.raises(InLattice) as info:
        validate(CharExponents.of(2, ("1/2", "0"), ("1", "0")))
    assert info.value.j == 2
    assert info.value.locus == "exponents[1]"


def test_first_exponent_in_integer_lattice_rejected():
    with pytest.raises(InLattice):
        validate(CharExponents.of(1, ("2",)))


def test_not_weakly_increasing():
    with pytest.raises(NotWeaklyIncreasing) as info:
        validate(CharExponents.of(2, ("1/2", "1/2"), ("2/3", "1/3")))
    assert info.value.code == "E_NOT_WEAKLY_INCREASING"


def test_construction_errors():
    with pytest.raises(InvalidDimension):
        CharExponents(0)
    with pytest.raises(NegativeCoordinate):
        CharExponents.of(2, ("1/2", "-1/2"))


def test_lex_normalize_identity(example_one):
    normalized, perm = lex_normalize(example_one)
    assert perm == (1, 2)
    assert normalized == example_one


def test_lex_normalize_rotated(example_two):
    rotated = CharExponents.of(3, ("0", "1/2", "1/2"), ("11/3", "2/3", "2/3"))
    normalized, perm = lex_normalize(rotated)
    assert perm == (2, 3, 1)
    assert normalized == example_two
    assert not is_lex_ordered(rotated)
    assert is_lex_ordered(normalized)


def test_lex_normalize_is_stable_on_ties():
    ce = CharExponents.of(2, ("1/2", "1/2"), ("5/3", "5/3"))
    assert lex_normalize(ce)[1] == (1, 2)


def test_lex_normalize_keeps_invariants(example_two):
    rotated = CharExponents.of(3, ("0", "1/2", "1/2"), ("11/3", "2/3", "2/3"))
    assert validate(rotated).n == validate(example_two).n


@pytest.mark.parametrize(
    "ce, expected",
    [
        (CharExponents.of(2, ("1/3", "1/3"), ("7/6", "2/3")), True),
        (CharExponents.of(2, ("1/2", "0"), ("3/2", "1/2")), False),
        (CharExponents.of(1, ("3/2",)), True),
        (CharExponents.of(1, ("1/2",)), False),
    ],
)
def test_is_normalized(ce, expected):
    assert is_normalized(ce) is expected


def test_invert(invertible):
    inverted = invert(invertible)
    assert inverted == CharExponents.of(2, ("4", "1/2"))
    assert validate(inverted).n == (2,)


def test_invert_to_smooth():
    assert invert(CharExponents.of(2, ("1/2", "0"))).is_smooth
    assert invert(CharExponents.of(1, ("1/2",))).is_smooth


def test_invert_precondition(example_one):
    with pytest.raises(PreconditionFailed):
        invert(example_one)
    with pytest.raises(PreconditionFailed):
        invert(CharExponents(2))
