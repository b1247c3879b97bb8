"""Sparse exact rank computations over the rationals.

Rows are dicts mapping an orderable column key (monomials, usually) to a
rational coefficient.  Elimination is fraction-free: rows are scaled to
integers, combined by cross-multiplication and kept content-reduced, so
every rank statement is exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import TYPE_CHECKING, Iterable, Mapping

if TYPE_CHECKING:
    from .polyalg import Polynomial


def _integerize(row: Mapping) -> dict:
    """Copy a rational row as a content-reduced integer row with positive
    leading (max-key) coefficient."""
    den = 1
    for c in row.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    out = {}
    for k, c in row.items():
        v = int(c * den) if isinstance(c, Fraction) else c * den
        if v:
            out[k] = v
    if not out:
        return out
    content = reduce(gcd, out.values(), 0)
    if out[max(out)] < 0:
        content = -content
    if content != 1:
        for k in out:
            out[k] //= content
    return out


class RowReducer:
    """Incremental row-echelon accumulator.

    Pivots sit at the maximum key of each stored row; reduce() eliminates a
    candidate against the current pivots without mutating them, insert()
    additionally stores an independent residual.
    """

    def __init__(self, rows: Iterable[Mapping] = ()):
        self.pivots: dict = {}
        for row in rows:
            self.insert(row)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping) -> dict:
        """Eliminate the row's leading key against the stored pivots until it
        is pivot-free or the row vanishes; the result is zero exactly when
        the row lies in the accumulated span."""
        row = _integerize(row)
        while row:
            lead = max(row)
            piv = self.pivots.get(lead)
            if piv is None:
                return row
            a, b = row[lead], piv[lead]
            g = gcd(a, b)
            ma, mb = b // g, a // g
            new = {k: ma * v for k, v in row.items()}
            for k, v in piv.items():
                c = new.get(k, 0) - mb * v
                if c:
                    new[k] = c
                elif k in new:
                    del new[k]
            row = new
            if row:
                content = reduce(gcd, row.values(), 0)
                if content > 1:
                    for k in row:
                        row[k] //= content
        return row

    def insert(self, row: Mapping) -> bool:
        """Reduce and, if independent, store; True when the rank grew."""
        residual = self.reduce(row)
        if not residual:
            return False
        if residual[max(residual)] < 0:
            residual = {k: -v for k, v in residual.items()}
        self.pivots[max(residual)] = residual
        return True

    def contains(self, row: Mapping) -> bool:
        return not self.reduce(row)


class ExactMatrix:
    """A bag of sparse rational rows over a shared column key space."""

    def __init__(self, rows: Iterable[Mapping]):
        self.rows = [dict(r) for r in rows]

    def columns(self) -> list:
        keys = set()
        for r in self.rows:
            keys.update(r)
        return sorted(keys)

    def rank(self) -> int:
        red = RowReducer()
        for r in self.rows:
            red.insert(r)
        return red.rank


def rank(M: ExactMatrix) -> int:
    return M.rank()


def _poly_rows(polys: Iterable["Polynomial"]) -> list[dict]:
    ns = {p.n for p in polys}
    if len(ns) > 1:
        raise ValueError(f"mixed variable counts {sorted(ns)}")
    return [dict(p.terms) for p in polys]


def independent(polys: list["Polynomial"]) -> bool:
    """True when the polynomials are linearly independent over Q."""
    red = RowReducer()
    return all(red.insert(r) for r in _poly_rows(polys))


def intersection_dim(U: list["Polynomial"], V: list["Polynomial"]) -> int:
    """dim(span U ∩ span V) by inclusion-exclusion on exact ranks."""
    rows_u = _poly_rows(U)
    rows_v = _poly_rows(V)
    if U and V and U[0].n != V[0].n:
        raise ValueError(f"mixed variable counts {U[0].n} and {V[0].n}")
    ru = ExactMatrix(rows_u).rank()
    rv = ExactMatrix(rows_v).rank()
    ruv = ExactMatrix(rows_u + rows_v).rank()
    return ru + rv - ruv
