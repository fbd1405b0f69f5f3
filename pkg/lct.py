# -*- coding: utf-8 -*-
"""
Log canonical threshold of an irreducible quasi-ordinary polynomial.

The (b, B) table built from the alpha sequence, the candidate set
B = {1} U {b/B}, the numbers A1/A2/A3, the closed-form case analysis, the
minimum of the candidate set, the log-canonicity predicate and the list of
candidate poles of the motivic zeta function.

The largest actual pole is -lct; the other candidates are only candidates.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple

from errors import InternalInconsistency, NotLexOrdered, PreconditionFailed
from exponents import CharExponents, DerivedInvariants, Permutation, is_lex_ordered, lex_normalize, validate

logger = logging.getLogger(__name__)

ONE = Fraction(1)


class CaseTag(str, Enum):
    SMOOTH = "Smooth"
    CASE1 = "Case1"  # min{1, A1}: lambda_{1,1} != 1/n_1, or g = 1
    CASE2 = "Case2"  # min{A2, A3}: lambda_{1,1} = 1/n_1, g > 1, l_1 < l_2
    CASE3 = "Case3"  # A2: lambda_{1,1} = 1/n_1, g > 1, l_1 = l_2


# ---------------------------------------------------------------------
# TYPES
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class PoleTable:
    pairs: Tuple[Tuple[Tuple[int, int], ...], ...]  # pairs[j-1][i-1] = (b, B)
    candidate_set: Tuple[Fraction, ...]  # sorted ascending, deduplicated, contains 1

    @property
    def g(self) -> int:
        return len(self.pairs)

    def bB(self, j: int, i: int) -> Tuple[int, int]:
        return self.pairs[j - 1][i - 1]

    def quotient(self, j: int, i: int) -> Optional[Fraction]:
        """b_i^(j) / B_i^(j), or None when B = 0."""
        b, B = self.bB(j, i)
        return Fraction(b, B) if B else None


class AValues(NamedTuple):
    a1: Fraction
    a2: Optional[Fraction]
    a3: Optional[Fraction]


@dataclass(frozen=True)
class LctReport:
    lct: Fraction
    case_tag: CaseTag
    a1: Optional[Fraction]
    a2: Optional[Fraction]
    a3: Optional[Fraction]
    log_canonical: bool
    pole_candidates: Tuple[Fraction, ...]
    permutation: Permutation


@dataclass(frozen=True)
class LctAnalysis:
    """Everything the pipeline produced for one input."""

    original: CharExponents
    normalized: CharExponents
    invariants: DerivedInvariants
    table: Optional[PoleTable]
    report: LctReport
    warnings: Tuple[str, ...] = field(default_factory=tuple)


# ---------------------------------------------------------------------
# TABLE / CANDIDATE SET
# ---------------------------------------------------------------------
def candidate_set_of(pairs) -> Tuple[Fraction, ...]:
    values = {ONE}
    for row in pairs:
        for b, B in row:
            if B:
                values.add(Fraction(b, B))
    return tuple(sorted(values))


def bB_table(inv: DerivedInvariants) -> PoleTable:
    """(b, B) by the recurrences
    b^(1) = p + q,        b^(j) = p b^(j-1) + q,
    B^(1) = e_0 q,        B^(j) = p B^(j-1) + e_{j-1} q.
    """
    if inv.g == 0:
        raise PreconditionFailed("the (b, B) table needs g >= 1")
    rows = []
    prev_b = [1] * inv.d
    prev_B = [0] * inv.d
    for j in range(1, inv.g + 1):
        row = []
        for i in range(1, inv.d + 1):
            p, q = inv.pq(j, i)
            if j == 1:
                b, B = p + q, inv.e[0] * q
            else:
                b = p * prev_b[i - 1] + q
                B = p * prev_B[i - 1] + inv.e[j - 1] * q
            row.append((b, B))
        rows.append(tuple(row))
        prev_b = [b for b, _ in row]
        prev_B = [B for _, B in row]
    return PoleTable(tuple(rows), candidate_set_of(rows))


def lct_min(table: PoleTable) -> Fraction:
    return min(table.candidate_set)


def minimizers(table: PoleTable) -> List[Tuple[int, int]]:
    """(i, j) positions whose quotient equals min B."""
    low = lct_min(table)
    return [
        (i, j)
        for j in range(1, table.g + 1)
        for i in range(1, len(table.pairs[j - 1]) + 1)
        if table.quotient(j, i) == low
    ]


def pole_candidates(table: PoleTable) -> Tuple[Fraction, ...]:
    """{-b/B : b/B in B}, ascending; pairs with B = 0 never enter the candidate set."""
    if table.g == 0:
        return ()
    return tuple(sorted(-x for x in table.candidate_set))


# ---------------------------------------------------------------------
# A-VALUES / CLOSED FORM
# ---------------------------------------------------------------------
def _first_is_inverse_index(inv: DerivedInvariants) -> bool:
    """lambda_{1,1} == 1/n_1, read off the reduced pair (p_1^(1), q_1^(1))."""
    return inv.pq(1, 1) == (inv.n[0], 1)


def a_values(inv: DerivedInvariants, table: Optional[PoleTable] = None) -> AValues:
    if inv.g == 0:
        raise PreconditionFailed("A-values need g >= 1")
    lam = inv.exponents.lambdas
    l11 = lam[0][0]
    if l11 == 0:
        raise NotLexOrdered("lambda_{1,1} = 0: the columns are not in descending lex order")
    a1 = (1 + l11) / (inv.e[0] * l11)
    a2 = a3 = None
    if inv.g > 1:
        n1, l21 = inv.n[0], lam[1][0]
        a2 = n1 * (1 + l21) / (inv.e[1] * (n1 * (1 + l21) - 1))
        if inv.ell[1] < inv.ell[2]:
            x = lam[1][inv.ell[1]]
            a3 = (1 + x) / (inv.e[1] * x)

    if table is None:
        table = bB_table(inv)
    if a1 != table.quotient(1, 1):
        raise InternalInconsistency(f"A1 = {a1} but b_1^(1)/B_1^(1) = {table.quotient(1, 1)}")
    # the A2 identity needs lambda_{1,1} = 1/n_1
    if a2 is not None and _first_is_inverse_index(inv) and a2 != table.quotient(2, 1):
        raise InternalInconsistency(f"A2 = {a2} but b_1^(2)/B_1^(2) = {table.quotient(2, 1)}")
    if a3 is not None and a3 != table.quotient(2, inv.ell[1] + 1):
        raise InternalInconsistency(f"A3 = {a3} but the table gives {table.quotient(2, inv.ell[1] + 1)}")
    return AValues(a1, a2, a3)


def lct_closed_form(
    inv: DerivedInvariants,
    permutation: Optional[Permutation] = None,
    table: Optional[PoleTable] = None,
) -> LctReport:
    """lct by the three-row case analysis; needs the columns in descending lex order."""
    permutation = permutation or tuple(range(1, inv.d + 1))
    if inv.g == 0:
        return LctReport(ONE, CaseTag.SMOOTH, None, None, None, True, (), permutation)
    if not is_lex_ordered(inv.exponents):
        raise NotLexOrdered("the closed form needs the columns in descending lex order")

    if table is None:
        table = bB_table(inv)
    a = a_values(inv, table)
    if inv.g == 1 or not _first_is_inverse_index(inv):
        tag, value = CaseTag.CASE1, min(ONE, a.a1)
    elif inv.ell[1] < inv.ell[2]:
        tag, value = CaseTag.CASE2, min(a.a2, a.a3)
    else:
        tag, value = CaseTag.CASE3, a.a2
    logger.debug("closed form: %s -> %s", tag.value, value)
    return LctReport(value, tag, a.a1, a.a2, a.a3, value == ONE, pole_candidates(table), permutation)


def plane_curve_lct(lambda_1: Fraction, e0: int) -> Fraction:
    """d = 1 with lambda_1 >= 1: min{1, (1 + lambda_1) / (e_0 lambda_1)}."""
    return min(ONE, (1 + lambda_1) / (e0 * lambda_1))


# ---------------------------------------------------------------------
# LOG CANONICITY
# ---------------------------------------------------------------------
def log_canonical_pattern(ce: CharExponents, inv: DerivedInvariants) -> bool:
    """g = 1 and the nonzero lambda_{1,i} all lie in {1, 1/2} or all equal 1/n_1."""
    if ce.g == 0:
        return True
    if ce.g != 1:
        return False
    support = [c for c in ce.lambdas[0] if c != 0]
    half_or_one = all(c in (ONE, Fraction(1, 2)) for c in support)
    inverse_index = all(c == Fraction(1, inv.n[0]) for c in support)
    return half_or_one or inverse_index


def is_log_canonical(ce: CharExponents, inv: DerivedInvariants) -> bool:
    predicate = log_canonical_pattern(ce, inv)
    threshold = lct_closed_form(inv).lct
    if predicate != (threshold == ONE):
        raise InternalInconsistency(
            f"log-canonicity predicate says {predicate} but lct = {threshold}"
        )
    return predicate


# ---------------------------------------------------------------------
# PIPELINE
# ---------------------------------------------------------------------
def compute_report(ce: CharExponents) -> LctAnalysis:
    """lex_normalize -> validate -> (b, B) table -> closed form."""
    warnings = []
    normalized, permutation = lex_normalize(ce)
    if permutation != tuple(range(1, ce.d + 1)):
        warnings.append("input was not lex-ordered; permutation applied")
    inv = validate(normalized)
    if inv.g == 0:
        warnings.append("smooth instance")
        logger.warning("smooth instance (g = 0): lct = 1")
        table = None
    else:
        table = bB_table(inv)
    report = lct_closed_form(inv, permutation, table)
    return LctAnalysis(ce, normalized, inv, table, report, tuple(warnings))
