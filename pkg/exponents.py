# -*- coding: utf-8 -*-
"""
Characteristic exponents of an irreducible quasi-ordinary branch.

Validation of the exponent list, the derived invariants (lattice indices n_j,
degrees e_j, supports l_j and the coprime pairs (p, q) of the alpha sequence),
lexicographic normalization of the variables, and the inversion that turns a
branch with lambda_1 = (1/n_1, 0, ..., 0) into a normalized one.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import List, Sequence, Tuple

from arith import ExponentVector, Ordering, componentwise_leq, lex_compare
from errors import (
    DimensionMismatch,
    InLattice,
    InternalInconsistency,
    InvalidDimension,
    NegativeCoordinate,
    NotWeaklyIncreasing,
    PreconditionFailed,
)
from lattice import ScaledLattice, common_scale, contains, lattice_index

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]  # 1-based; entry k is the original index of new coordinate k


# ---------------------------------------------------------------------
# TYPES
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class CharExponents:
    d: int
    lambdas: Tuple[ExponentVector, ...] = ()

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise InvalidDimension(f"dimension must be an integer >= 1, got {self.d!r}")
        lambdas = tuple(v if isinstance(v, ExponentVector) else ExponentVector(tuple(v)) for v in self.lambdas)
        for j, v in enumerate(lambdas, start=1):
            if len(v) != self.d:
                raise DimensionMismatch(f"lambda_{j} has {len(v)} coordinates, expected {self.d}")
        object.__setattr__(self, "lambdas", lambdas)

    @classmethod
    def of(cls, d: int, *rows: Sequence) -> "CharExponents":
        """``CharExponents.of(2, ("1/3", "1/3"), ("7/6", "2/3"))``"""
        return cls(d, tuple(ExponentVector(tuple(r)) for r in rows))

    @property
    def g(self) -> int:
        return len(self.lambdas)

    @property
    def is_smooth(self) -> bool:
        return self.g == 0

    def column(self, i: int) -> Tuple[Fraction, ...]:
        """(lambda_{1,i}, ..., lambda_{g,i}) for a 0-based coordinate i."""
        return tuple(v[i] for v in self.lambdas)

    def permuted(self, order: Sequence[int]) -> "CharExponents":
        return CharExponents(self.d, tuple(v.permuted(order) for v in self.lambdas))

    def to_rows(self) -> List[List[str]]:
        return [v.to_strings() for v in self.lambdas]


@dataclass(frozen=True)
class DerivedInvariants:
    """Invariants of a validated exponent list; indices j run 1..g as position j-1."""

    exponents: CharExponents
    n: Tuple[int, ...]
    e: Tuple[int, ...]  # e_0, ..., e_g
    ell: Tuple[int, ...]  # l_0 = 0, l_1, ..., l_g
    alpha: Tuple[Tuple[Tuple[int, int], ...], ...]  # alpha[j-1][i-1] = (p, q)
    lattices: Tuple[ScaledLattice, ...]  # M_0, ..., M_g

    @property
    def d(self) -> int:
        return self.exponents.d

    @property
    def g(self) -> int:
        return self.exponents.g

    def pq(self, j: int, i: int) -> Tuple[int, int]:
        """(p_i^(j), q_i^(j)) with 1-based j and i."""
        return self.alpha[j - 1][i - 1]

    def alpha_value(self, j: int, i: int) -> Fraction:
        p, q = self.pq(j, i)
        return Fraction(q, p)


# ---------------------------------------------------------------------
# LATTICE CHAIN / VALIDATION
# ---------------------------------------------------------------------
def lattice_chain(ce: CharExponents) -> Tuple[ScaledLattice, ...]:
    """M_0 = Z^d, M_j = M_{j-1} + Z lambda_j, all at one common scale."""
    m = common_scale(ce.lambdas)
    chain = [ScaledLattice.standard(ce.d, m)]
    for v in ce.lambdas:
        chain.append(chain[-1].extend(v))
    logger.debug("lattice chain at scale %d: %s", m, [lat.basis for lat in chain])
    return tuple(chain)


def _alpha_table(ce: CharExponents) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    rows = []
    prefix = [1] * ce.d  # p_i^(1) ... p_i^(j-1)
    previous = ExponentVector.zero(ce.d)
    for v in ce.lambdas:
        row = []
        for i in range(ce.d):
            a = prefix[i] * (v[i] - previous[i])
            row.append((a.denominator, a.numerator))
            prefix[i] *= a.denominator
        rows.append(tuple(row))
        previous = v
    return tuple(rows)


def validate(ce: CharExponents) -> DerivedInvariants:
    """Check the exponent conditions and compute the invariant bundle.

    Only the ordering and the lattice condition are enforced; the conditions
    on the coefficients of the series cannot be seen from the exponents.
    """
    for j, v in enumerate(ce.lambdas, start=1):
        if any(c < 0 for c in v):
            raise NegativeCoordinate(f"lambda_{j} has a negative coordinate")

    if ce.is_smooth:
        logger.info("g = 0: smooth germ")
        return DerivedInvariants(ce, (), (1,), (0,), (), (ScaledLattice.standard(ce.d),))

    previous = ExponentVector.zero(ce.d)
    for j, v in enumerate(ce.lambdas, start=1):
        if j > 1 and not componentwise_leq(previous, v):
            raise NotWeaklyIncreasing(j)
        previous = v

    chain = lattice_chain(ce)
    n = []
    for j, v in enumerate(ce.lambdas, start=1):
        if contains(chain[j - 1], v):
            raise InLattice(j)
        n.append(lattice_index(chain[j], chain[j - 1]))

    e = [1]
    for nj in reversed(n):
        e.append(e[-1] * nj)
    e.reverse()

    ell = (0,) + tuple(v.nonzero_count() for v in ce.lambdas)
    alpha = _alpha_table(ce)
    inv = DerivedInvariants(ce, tuple(n), tuple(e), ell, alpha, chain)
    _assert_structure(inv)
    return inv


def _assert_structure(inv: DerivedInvariants) -> None:
    for j, nj in enumerate(inv.n, start=1):
        if nj < 2:
            raise InternalInconsistency(f"n_{j} = {nj} < 2 for an exponent outside M_{j - 1}")
        if inv.e[j - 1] != nj * inv.e[j]:
            raise InternalInconsistency(f"e_{j - 1} != n_{j} e_{j}")
        for i, (p, q) in enumerate(inv.alpha[j - 1], start=1):
            if nj % p:
                raise InternalInconsistency(f"p_{i}^({j}) = {p} does not divide n_{j} = {nj}")
    if inv.e[-1] != 1:
        raise InternalInconsistency("e_g != 1")


# ---------------------------------------------------------------------
# NORMALIZATION
# ---------------------------------------------------------------------
def _column_key(ce: CharExponents):
    def compare(i: int, k: int) -> int:
        # descending lex order of columns
        return -lex_compare(ce.column(i), ce.column(k)).value

    return cmp_to_key(compare)


def lex_normalize(ce: CharExponents) -> Tuple[CharExponents, Permutation]:
    """Permute the variables so the columns are in descending lex order.

    ``sorted`` is stable, so equal columns keep their original order.
    """
    order = sorted(range(ce.d), key=_column_key(ce))
    permutation = tuple(k + 1 for k in order)
    if permutation != tuple(range(1, ce.d + 1)):
        logger.info("columns reordered by permutation %s", permutation)
    return ce.permuted(order), permutation


def is_lex_ordered(ce: CharExponents) -> bool:
    return all(
        lex_compare(ce.column(i), ce.column(i + 1)) != Ordering.LESS for i in range(ce.d - 1)
    )


def is_normalized(ce: CharExponents) -> bool:
    """Lex ordered, and lambda_1 is not (a, 0, ..., 0) with a < 1."""
    if ce.is_smooth:
        return is_lex_ordered(ce)
    first = ce.lambdas[0]
    excluded = first[0] < 1 and first[0] != 0 and all(c == 0 for c in first.coords[1:])
    return is_lex_ordered(ce) and not excluded


# ---------------------------------------------------------------------
# INVERSION
# ---------------------------------------------------------------------
def invert(ce: CharExponents) -> CharExponents:
    """Exponents of the normalized branch of the same germ when lambda_1 = (1/n_1, 0, ..., 0).

    lambda'_i = (n_1 (1 + lambda_{i+1,1} - 1/n_1), lambda_{i+1,2}, ..., lambda_{i+1,d})
    for i = 1, ..., g-1; g = 1 lands on the smooth germ.
    """
    if ce.is_smooth:
        raise PreconditionFailed("inversion needs g >= 1")
    inv = validate(ce)
    n1 = inv.n[0]
    first = ce.lambdas[0]
    if first[0] != Fraction(1, n1) or any(c != 0 for c in first.coords[1:]):
        raise PreconditionFailed(
            f"inversion needs lambda_1 = (1/{n1}, 0, ..., 0), got ({', '.join(first.to_strings())})"
        )
    rows = []
    for v in ce.lambdas[1:]:
        head = n1 * (1 + v[0] - Fraction(1, n1))
        rows.append(ExponentVector((head,) + v.coords[1:]))
    inverted, _ = lex_normalize(CharExponents(ce.d, tuple(rows)))
    validate(inverted)
    return inverted
