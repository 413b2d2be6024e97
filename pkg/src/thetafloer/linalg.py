"""Small dense linear algebra over the rationals.

Matrices are lists of rows of ``Fraction``.  Everything here is exact and
meant for systems of a few dozen unknowns.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Matrix = list[list[Fraction]]


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = [[Fraction(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        if m[r][c] != 1:
            inv = 1 / m[r][c]
            m[r] = [x * inv if x else x for x in m[r]]
        nz = [j for j, x in enumerate(m[r]) if x]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                row = m[i]
                for j in nz:
                    row[j] -= f * m[r][j]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> int:
    if not rows:
        return 0
    return len(rref(rows, ncols)[1])


def nullspace(a: Sequence[Sequence[Fraction]], ncols: int) -> Matrix:
    """Basis of {x : a x = 0}, returned as a list of vectors of length ``ncols``."""
    if not a:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(a, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[Fraction] | None:
    """Solve ``a x = b`` (any shape); None if inconsistent.

    Raises ValueError when the solution is not unique.
    """
    ncols = len(a[0])
    aug = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a, b)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    if len(pivots) < ncols:
        raise ValueError("system is underdetermined")
    x = [Fraction(0)] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return x


def primitive(v: Sequence) -> list[int]:
    """Scale a rational vector to a primitive integer vector spanning the same line."""
    dens = [x.denominator for x in v if type(x) is Fraction]
    if dens:
        den = lcm(*dens)
        w = [int(x * den) for x in v]
    else:
        w = list(v)
    g = gcd(*w)
    return [x // g for x in w] if g > 1 else w


class EchelonBasis:
    """Incrementally grown, fully reduced integer row basis; answers span membership.

    Rows are kept primitive, so entries stay small for the +-1 matrices
    that occur in practice.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[tuple[int, list[int]]] = []

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence) -> list[int]:
        """A nonzero multiple of ``v`` minus span elements, zero at every pivot."""
        w = primitive(v)
        for p, row in self.rows:
            f = w[p]
            if f:
                a = row[p]
                w = primitive([a * x - f * y for x, y in zip(w, row)])
        return w

    def add(self, v: Sequence) -> bool:
        """Add ``v`` if it is independent of the current span; report whether it was."""
        w = self.reduce(v)
        p = next((j for j, x in enumerate(w) if x), None)
        if p is None:
            return False
        a = w[p]
        for i, (q, row) in enumerate(self.rows):
            f = row[p]
            if f:
                self.rows[i] = (q, primitive([a * x - f * y for x, y in zip(row, w)]))
        self.rows.append((p, w))
        return True


def int_nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[int]]:
    """Integer basis of {x : a x = 0}; rows may be rational and are rescaled first."""
    ech = EchelonBasis(ncols)
    for r in rows:
        ech.add(r)
    pivots = {p: row for p, row in ech.rows}
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        lcm = 1
        for p, row in pivots.items():
            if row[f]:
                lcm = lcm * abs(row[p]) // gcd(lcm, abs(row[p]))
        v = [0] * ncols
        v[f] = lcm
        for p, row in pivots.items():
            if row[f]:
                v[p] = -row[f] * lcm // row[p]
        basis.append(primitive(v))
    return basis
