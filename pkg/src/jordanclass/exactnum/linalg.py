"""Exact elimination on dense row lists.

Over ``QQ`` rank and determinant clear denominators and run Bareiss
fraction-free elimination on integers; over ``GF(p)`` plain modular
elimination is already exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .field import Elem, Field

Rows = list[list[Elem]]


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], Fraction]:
    """Scale each row to integers; returns the rows and the product of scales."""
    out = []
    scale = Fraction(1)
    for row in rows:
        d = 1
        for x in row:
            d = lcm(d, Fraction(x).denominator)
        out.append([int(Fraction(x) * d) for x in row])
        scale *= d
    return out, scale


def _bareiss(a: list[list[int]], det_mode: bool) -> tuple[int, int]:
    """Fraction-free elimination in place; returns (rank, signed last pivot)."""
    m = len(a)
    ncols = len(a[0]) if m else 0
    prev = 1
    sign = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            if det_mode:
                return r, 0
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
            sign = -sign
        pr = a[r]
        pv = pr[c]
        for i in range(r + 1, m):
            ai = a[i]
            f = ai[c]
            for j in range(c + 1, ncols):
                # exact division is guaranteed by Sylvester's identity
                ai[j] = (pv * ai[j] - f * pr[j]) // prev
            ai[c] = 0
        prev = pv
        r += 1
        if r == m:
            break
    return r, sign * prev


def _mod_echelon(a: list[list[int]], p: int) -> tuple[int, int]:
    """Row-echelon in place over GF(p); returns (rank, determinant if square)."""
    m = len(a)
    ncols = len(a[0]) if m else 0
    det = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if a[i][c] % p), None)
        if piv is None:
            det = 0
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
            det = -det
        pr = a[r]
        inv = pow(pr[c], -1, p)
        det = det * pr[c] % p
        for i in range(r + 1, m):
            ai = a[i]
            f = ai[c] * inv % p
            if f:
                for j in range(c, ncols):
                    ai[j] = (ai[j] - f * pr[j]) % p
        r += 1
        if r == m:
            break
    return r, det % p


def rank(rows: Sequence[Sequence[Elem]], F: Field) -> int:
    if not rows or not rows[0]:
        return 0
    if F.p:
        return _mod_echelon([[x % F.p for x in row] for row in rows], F.p)[0]
    a, _ = _integer_rows(rows)
    return _bareiss(a, det_mode=False)[0]


def det(rows: Sequence[Sequence[Elem]], F: Field) -> Elem:
    n = len(rows)
    if n == 0:
        return F.one
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if F.p:
        a = [[x % F.p for x in row] for row in rows]
        r, d = _mod_echelon(a, F.p)
        return d if r == n else 0
    a, scale = _integer_rows(rows)
    r, last = _bareiss(a, det_mode=True)
    if r < n:
        return Fraction(0)
    return Fraction(last) / scale


def rref(rows: Sequence[Sequence[Elem]], F: Field) -> tuple[Rows, list[int]]:
    """Reduced row-echelon form and pivot columns."""
    a = [list(row) for row in rows]
    m = len(a)
    ncols = len(a[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = F.inv(a[r][c])
        a[r] = [F.norm(x * inv) for x in a[r]]
        pr = a[r]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [F.norm(x - f * y) for x, y in zip(a[i], pr)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return a, pivots


def kernel(rows: Sequence[Sequence[Elem]], F: Field, ncols: int | None = None) -> Rows:
    """Basis of the right kernel ``{v : A v = 0}``, one vector per list."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[F.one if i == j else F.zero for i in range(ncols)] for j in range(ncols)]
    R, pivots = rref(rows, F)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [F.zero] * ncols
        v[f] = F.one
        for i, pc in enumerate(pivots):
            v[pc] = F.norm(-R[i][f])
        basis.append(v)
    return basis


def inverse(rows: Sequence[Sequence[Elem]], F: Field) -> Rows:
    n = len(rows)
    aug = [list(row) + [F.one if i == j else F.zero for j in range(n)] for i, row in enumerate(rows)]
    R, pivots = rref(aug, F)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R]
