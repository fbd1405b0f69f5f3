# -*- coding: utf-8 -*-
"""
Independent (b, B) table: the recurrences unrolled into closed sums.

    B_i^(j) = sum_{k=1..j} e_{k-1} q_i^(k) prod_{l=k+1..j} p_i^(l)
    b_i^(j) = prod_{k=1..j} p_i^(k) + sum_{k=1..j} q_i^(k) prod_{l=k+1..j} p_i^(l)

Nothing here is shared with the recurrence implementation in lct.py.
"""

import math
from fractions import Fraction

from exponents import DerivedInvariants
from lct import PoleTable


def oracle_bB(inv: DerivedInvariants) -> PoleTable:
    g, d = inv.g, inv.d
    rows = []
    for j in range(1, g + 1):
        row = []
        for i in range(1, d + 1):
            p = [inv.alpha[k - 1][i - 1][0] for k in range(1, j + 1)]
            q = [inv.alpha[k - 1][i - 1][1] for k in range(1, j + 1)]
            tail = [math.prod(p[k:]) for k in range(1, j + 1)]  # prod_{l=k+1..j} p_l
            big = sum(inv.e[k - 1] * q[k - 1] * tail[k - 1] for k in range(1, j + 1))
            small = math.prod(p) + sum(q[k - 1] * tail[k - 1] for k in range(1, j + 1))
            row.append((small, big))
        rows.append(tuple(row))

    quotients = {Fraction(1)} | {Fraction(b, B) for row in rows for b, B in row if B > 0}
    return PoleTable(tuple(rows), tuple(sorted(quotients)))
