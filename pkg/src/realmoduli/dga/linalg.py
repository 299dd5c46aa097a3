"""Exact rank of sparse matrices over Q and F_p.

Rows are absorbed one at a time into an echelon basis keyed by leading column.
Over F_p pivots are scaled to 1.  Over Q the elimination is fraction-free: the
reduced row is ``lead * row - x * pivot`` followed by division by its content,
so entries stay small integers and no rational arithmetic is needed.
"""
from __future__ import annotations

from math import gcd

from .algebra import SparseMatrix, integral_rows


def _content(row: dict) -> int:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    return g


def rank_rows(rows, p: int) -> int:
    pivots: dict[int, dict] = {}
    for src in rows:
        if p:
            row = {j: v % p for j, v in src.items() if v % p}
        else:
            row = {j: v for j, v in src.items() if v}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                if p:
                    inv = pow(row[lead], -1, p)
                    row = {j: v * inv % p for j, v in row.items()}
                else:
                    g = _content(row)
                    if row[lead] < 0:
                        g = -g
                    row = {j: v // g for j, v in row.items()}
                pivots[lead] = row
                break
            x = row[lead]
            if p:
                for j, v in piv.items():
                    nv = (row.get(j, 0) - x * v) % p
                    if nv:
                        row[j] = nv
                    else:
                        row.pop(j, None)
            else:
                a = piv[lead]
                g = gcd(a, x)
                a //= g
                x //= g
                new = {j: a * v for j, v in row.items()}
                for j, v in piv.items():
                    nv = new.get(j, 0) - x * v
                    if nv:
                        new[j] = nv
                    else:
                        new.pop(j, None)
                c = _content(new)
                row = {j: v // c for j, v in new.items()} if c > 1 else new
    return len(pivots)


def matrix_rank(mat: SparseMatrix, characteristic: int) -> int:
    if characteristic == 0:
        rows = integral_rows(mat.rows)
    else:
        rows = [{j: int(v) for j, v in row.items()} for row in mat.rows]
    return rank_rows(rows, characteristic)
