"""Sparse exact rational linear algebra: reduced echelon forms and
kernels, used for all per-degree subspace computations.

Rows are dicts mapping a variable index to a nonzero Fraction.  Pivots
are chosen as the smallest variable present in a row, so echelon forms
are canonical for a fixed variable ordering, and two subspaces are equal
iff their echelonized spanning sets coincide.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, List, Sequence

Row = Dict[int, Fraction]


def _axpy(row: Row, coeff: Fraction, other: Row) -> None:
    # row += coeff * other, in place
    for k, x in other.items():
        y = row.get(k, 0) + coeff * x
        if y:
            row[k] = y
        else:
            row.pop(k, None)


class Echelon:
    """Incrementally maintained reduced row echelon form."""

    def __init__(self):
        self.pivot_rows: Dict[int, Row] = {}

    def reduce(self, row: Row) -> Row:
        """Fully reduce a row against the current pivots (copy)."""
        row = dict(row)
        for var in sorted(set(row) & self.pivot_rows.keys()):
            coeff = row.get(var)
            if coeff:
                _axpy(row, -coeff, self.pivot_rows[var])
        return row

    def insert(self, row: Row) -> bool:
        """Reduce a row and adjoin it if independent.  Returns whether
        the row increased the rank."""
        row = self.reduce(row)
        if not row:
            return False
        piv = min(row)
        lead = row[piv]
        if lead != 1:
            row = {k: x / lead for k, x in row.items()}
        # back-eliminate the new pivot from stored rows
        for other in self.pivot_rows.values():
            c = other.get(piv)
            if c:
                _axpy(other, -c, row)
        self.pivot_rows[piv] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def contains(self, row: Row) -> bool:
        return not self.reduce(row)

    def basis(self) -> List[Row]:
        """Pivot rows ordered by pivot variable (canonical form)."""
        return [self.pivot_rows[p] for p in sorted(self.pivot_rows)]


def echelonize(rows: Sequence[Row]) -> List[Row]:
    ech = Echelon()
    for row in rows:
        ech.insert(row)
    return ech.basis()


def kernel_basis(columns: Sequence[Dict[Hashable, Fraction]], nvars: int) -> List[Row]:
    """Kernel of the linear map whose j-th column (a sparse vector over
    arbitrary hashable coordinates) is the image of basis vector j.

    Returns echelonized kernel vectors as sparse rows over 0..nvars-1.
    """
    # transpose into constraint rows over the variables
    rows: Dict[Hashable, Row] = {}
    for j, col in enumerate(columns):
        for key, x in col.items():
            rows.setdefault(key, {})[j] = x
    ech = Echelon()
    # sparse constraints first: limits fill-in during elimination
    for row in sorted(rows.values(), key=len):
        ech.insert(row)
    pivots = set(ech.pivot_rows)
    free = [j for j in range(nvars) if j not in pivots]
    out: List[Row] = []
    for f in free:
        vec: Row = {f: Fraction(1)}
        for p, row in ech.pivot_rows.items():
            c = row.get(f)
            if c:
                vec[p] = -c
        out.append(vec)
    return echelonize(out)


def subspace_equal(rows_a: Sequence[Row], rows_b: Sequence[Row]) -> bool:
    """Equality of the spans of two echelonized families."""
    return echelonize(rows_a) == echelonize(rows_b)


def in_span(row: Row, rows: Sequence[Row]) -> bool:
    ech = Echelon()
    for r in rows:
        ech.insert(r)
    return ech.contains(row)
