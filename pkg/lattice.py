# -*- coding: utf-8 -*-
"""
Full-rank lattices in (1/m)Z^d stored by their canonical Hermite normal form.

The basis is row-style: upper triangular, positive diagonal, and every entry
above a pivot reduced into [0, pivot). Equal lattices at equal scale have
identical matrices.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from arith import ExponentVector
from errors import DimensionMismatch, NonIntegerIndex, NotSublattice, RankDeficient

logger = logging.getLogger(__name__)

IntMatrix = Tuple[Tuple[int, ...], ...]


# ---------------------------------------------------------------------
# INTEGER HELPERS
# ---------------------------------------------------------------------
def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(x, y, g)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    # Invariants:
    #          x * a +      y * b ==      g
    #     next_x * a + next_y * b == next_g
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def common_scale(vectors: Sequence[ExponentVector]) -> int:
    """lcm of every denominator in ``vectors`` (1 when there are none)."""
    m = 1
    for v in vectors:
        for c in v:
            m = math.lcm(m, c.denominator)
    return m


# ---------------------------------------------------------------------
# HERMITE NORMAL FORM
# ---------------------------------------------------------------------
def hnf(rows: Sequence[Sequence[int]], dimension: Optional[int] = None) -> IntMatrix:
    """Canonical row-style HNF of the full-rank lattice spanned by ``rows``.

    Column by column, the rows still carrying that column are folded into a
    single pivot row with 2x2 unimodular transforms built from the extended
    gcd; the remainders drop to the next column. Off-diagonal entries are then
    reduced modulo the pivots.
    """
    if dimension is None:
        if not rows:
            raise RankDeficient("no generators given")
        dimension = len(rows[0])
    d = dimension
    work: List[List[int]] = []
    for r in rows:
        if len(r) != d:
            raise DimensionMismatch(f"generator of length {len(r)} in dimension {d}")
        if any(r):
            work.append([int(x) for x in r])

    basis: List[List[int]] = []
    for col in range(d):
        pivot: Optional[List[int]] = None
        rest: List[List[int]] = []
        for row in work:
            if row[col] == 0:
                rest.append(row)
                continue
            if pivot is None:
                pivot = row
                continue
            a, b = pivot[col], row[col]
            x, y, g = xgcd(a, b)
            ag, bg = a // g, b // g
            new_pivot = [x * u + y * v for u, v in zip(pivot, row)]
            remainder = [ag * v - bg * u for u, v in zip(pivot, row)]
            pivot = new_pivot
            if any(remainder):
                rest.append(remainder)
        if pivot is None:
            raise RankDeficient(f"generators do not span rank {d} (no pivot in column {col + 1})")
        if pivot[col] < 0:
            pivot = [-u for u in pivot]
        basis.append(pivot)
        work = rest

    # every generator is now folded into the pivots
    for c in range(d):
        p = basis[c][c]
        for r in range(c):
            q = basis[r][c] // p
            if q:
                basis[r] = [u - q * v for u, v in zip(basis[r], basis[c])]

    return tuple(tuple(row) for row in basis)


# ---------------------------------------------------------------------
# SCALED LATTICES
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class ScaledLattice:
    """The lattice spanned by ``basis / scale`` in Q^d."""

    dimension: int
    scale: int
    basis: IntMatrix

    @classmethod
    def standard(cls, dimension: int, scale: int = 1) -> "ScaledLattice":
        """Z^d expressed at ``scale``."""
        rows = tuple(tuple(scale if i == j else 0 for j in range(dimension)) for i in range(dimension))
        return cls(dimension, scale, rows)

    @classmethod
    def from_generators(cls, rows: Sequence[Sequence[int]], dimension: int, scale: int) -> "ScaledLattice":
        return cls(dimension, scale, hnf(rows, dimension))

    def scaled(self, v: ExponentVector) -> Optional[List[int]]:
        """``scale * v`` as integers, or None when it is not integral."""
        out = []
        for c in v:
            w = c * self.scale
            if w.denominator != 1:
                return None
            out.append(w.numerator)
        return out

    def extend(self, v: ExponentVector) -> "ScaledLattice":
        """This lattice plus Z v; ``v`` must have denominators dividing the scale."""
        w = self.scaled(v)
        if w is None:
            raise DimensionMismatch(f"vector {v.to_strings()} does not live at scale {self.scale}")
        return ScaledLattice.from_generators(list(self.basis) + [w], self.dimension, self.scale)

    def determinant(self) -> int:
        return math.prod(self.basis[i][i] for i in range(self.dimension))


def covolume(lat: ScaledLattice) -> Fraction:
    return Fraction(lat.determinant(), lat.scale ** lat.dimension)


def _contains_integer(lat: ScaledLattice, w: Sequence[int]) -> bool:
    w = list(w)
    for c in range(lat.dimension):
        if w[c] == 0:
            continue
        row = lat.basis[c]
        if w[c] % row[c]:
            return False
        q = w[c] // row[c]
        w = [u - q * v for u, v in zip(w, row)]
    return not any(w)


def contains(lat: ScaledLattice, v: ExponentVector) -> bool:
    """Exact membership by back-substitution on the triangular basis."""
    if len(v) != lat.dimension:
        raise DimensionMismatch(f"vector of length {len(v)} vs lattice dimension {lat.dimension}")
    w = lat.scaled(v)
    if w is None:
        return False
    return _contains_integer(lat, w)


def lattice_index(outer: ScaledLattice, inner: ScaledLattice) -> int:
    """[outer : inner] for ``inner`` a sublattice of ``outer``."""
    if outer.dimension != inner.dimension or outer.scale != inner.scale:
        raise DimensionMismatch(
            f"lattices differ in dimension/scale: ({outer.dimension}, {outer.scale}) "
            f"vs ({inner.dimension}, {inner.scale})"
        )
    for i, row in enumerate(inner.basis):
        if not _contains_integer(outer, row):
            raise NotSublattice(f"basis row {i + 1} of the inner lattice is not in the outer lattice")
    ratio = covolume(inner) / covolume(outer)
    if ratio.denominator != 1 or ratio < 1:
        raise NonIntegerIndex(f"covolume ratio {ratio} is not a positive integer")
    return ratio.numerator
