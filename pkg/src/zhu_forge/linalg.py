"""Exact sparse row reduction over the rationals.

Rows are dicts from hashable keys to Fractions; a caller-supplied key
function gives the total order on columns. The leading entry of a row is its
maximal column. Reduced row echelon form is canonical for the row space, so
results do not depend on generation order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, TypeVar

K = TypeVar("K", bound=Hashable)
Row = dict


def leading_key(row: Row, order: Callable) -> Hashable:
    return max(row, key=order)


def rref(rows: Iterable[Row], order: Callable) -> tuple[list[Row], dict]:
    """Reduce rows to RREF; returns (rows, pivot key -> row index).

    Each returned row has leading coefficient 1 and its leading key appears
    in no other row.
    """
    pivot_rows: dict[Hashable, Row] = {}

    def subtract(target: Row, coeff: Fraction, source: Row) -> None:
        for k, v in source.items():
            new = target.get(k, 0) - coeff * v
            if new:
                target[k] = new
            else:
                target.pop(k, None)

    for raw in rows:
        row = dict(raw)
        while row:
            lead = leading_key(row, order)
            existing = pivot_rows.get(lead)
            if existing is None:
                break
            subtract(row, row[lead], existing)
        if not row:
            continue
        # Clear every stored pivot from the non-leading positions too, so
        # each kept row contains exactly one pivot key (full RREF).
        for key in [k for k in row if k in pivot_rows and k != lead]:
            coeff = row.get(key)
            if coeff:
                subtract(row, coeff, pivot_rows[key])
        inv = 1 / Fraction(row[lead])
        row = {k: v * inv for k, v in row.items()}
        for other in pivot_rows.values():
            coeff = other.get(lead)
            if coeff:
                subtract(other, coeff, row)
        pivot_rows[lead] = row
    ordered = sorted(pivot_rows.items(), key=lambda kv: order(kv[0]))
    out_rows = [row for _, row in ordered]
    pivots = {lead: idx for idx, (lead, _) in enumerate(ordered)}
    return out_rows, pivots


def reduce_vector(vec: Row, rows: list[Row], pivots: dict, order: Callable) -> Row:
    """Subtract the projection of ``vec`` onto the RREF row space."""
    out = dict(vec)
    for lead, idx in pivots.items():
        coeff = out.get(lead)
        if not coeff:
            continue
        for k, v in rows[idx].items():
            new = out.get(k, 0) - coeff * v
            if new:
                out[k] = new
            else:
                out.pop(k, None)
    return out


def kernel_basis(constraints: Iterable[dict[int, Fraction]], ncols: int) -> list[dict[int, Fraction]]:
    """Null-space basis of a constraint matrix on columns ``0..ncols-1``.

    Constraint rows are dicts column -> coefficient. The returned basis is
    in the standard free-column form, one vector per non-pivot column,
    ordered by column index.
    """
    rows, pivots = rref(constraints, order=lambda c: c)
    # pivots: column -> row index, with leading = max column of each row.
    pivot_cols = set(pivots)
    basis: list[dict[int, Fraction]] = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec: dict[int, Fraction] = {free: Fraction(1)}
        for lead, idx in pivots.items():
            coeff = rows[idx].get(free)
            if coeff:
                vec[lead] = -coeff
        basis.append(vec)
    return basis
