"""Square matrices with exact entries over a single field."""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from . import linalg
from .field import Elem, Field, QQ, field_for
from .poly import Poly


class ExactMatrix:
    """Immutable ``n x n`` matrix over ``GF(p)`` or ``QQ``."""

    __slots__ = ("field", "rows", "_hash")

    def __init__(self, field: Field, rows: Iterable[Iterable]):
        rows = tuple(tuple(field(x) for x in row) for row in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self.field = field
        self.rows: tuple[tuple[Elem, ...], ...] = rows
        self._hash = None

    @classmethod
    def _raw(cls, field: Field, rows) -> ExactMatrix:
        # rows already canonical
        m = cls.__new__(cls)
        m.field = field
        m.rows = tuple(tuple(r) for r in rows)
        m._hash = None
        return m

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, field: Field, n: int) -> ExactMatrix:
        return cls._raw(field, [[field.zero] * n for _ in range(n)])

    @classmethod
    def identity(cls, field: Field, n: int) -> ExactMatrix:
        return cls.scalar(field, n, field.one)

    @classmethod
    def scalar(cls, field: Field, n: int, c) -> ExactMatrix:
        c = field(c)
        return cls._raw(field, [[c if i == j else field.zero for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, field: Field, entries: Sequence) -> ExactMatrix:
        n = len(entries)
        return cls(field, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, field: Field, n: int, i: int, j: int) -> ExactMatrix:
        return cls(field, [[1 if (r, c) == (i, j) else 0 for c in range(n)] for r in range(n)])

    @classmethod
    def block_diag(cls, field: Field, blocks: Sequence[ExactMatrix]) -> ExactMatrix:
        n = sum(b.n for b in blocks)
        rows = [[field.zero] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i, row in enumerate(b.rows):
                rows[off + i][off : off + b.n] = row
            off += b.n
        return cls._raw(field, rows)

    @classmethod
    def jordan_block(cls, field: Field, eigenvalue, size: int) -> ExactMatrix:
        a = field(eigenvalue)
        return cls._raw(
            field,
            [[a if i == j else (field.one if j == i + 1 else field.zero) for j in range(size)] for i in range(size)],
        )

    @classmethod
    def companion(cls, f: Poly) -> ExactMatrix:
        """Companion matrix whose characteristic polynomial is the monic ``f``."""
        F = f.field
        f = f.monic()
        n = f.degree
        rows = [[F.zero] * n for _ in range(n)]
        for i in range(1, n):
            rows[i][i - 1] = F.one
        for i in range(n):
            rows[i][n - 1] = F.norm(-f.coeffs[i])
        return cls._raw(F, rows)

    @classmethod
    def random(cls, field: Field, n: int, rng: random.Random) -> ExactMatrix:
        return cls._raw(field, [[field.random(rng) for _ in range(n)] for _ in range(n)])

    @classmethod
    def random_invertible(cls, field: Field, n: int, rng: random.Random) -> ExactMatrix:
        while True:
            m = cls.random(field, n, rng)
            if m.det() != 0:
                return m

    # -- basic protocol ---------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Elem:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.field == other.field and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.rows))
        return self._hash

    def __repr__(self):
        return f"ExactMatrix({self.field!r}, {[list(map(str, r)) for r in self.rows]})"

    def _check(self, other: ExactMatrix):
        if not isinstance(other, ExactMatrix):
            raise TypeError(f"expected ExactMatrix, got {type(other).__name__}")
        if other.field != self.field or other.n != self.n:
            raise ValueError("matrix field or size mismatch")

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        self._check(other)
        F = self.field
        return ExactMatrix._raw(F, [[F.norm(a + b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        self._check(other)
        F = self.field
        return ExactMatrix._raw(F, [[F.norm(a - b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> ExactMatrix:
        F = self.field
        return ExactMatrix._raw(F, [[F.norm(-a) for a in r] for r in self.rows])

    def scale(self, c) -> ExactMatrix:
        F = self.field
        c = F(c)
        return ExactMatrix._raw(F, [[F.norm(c * a) for a in r] for r in self.rows])

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        self._check(other)
        F = self.field
        cols = list(zip(*other.rows))
        return ExactMatrix._raw(
            F, [[F.norm(sum(a * b for a, b in zip(r, c))) for c in cols] for r in self.rows]
        )

    def __pow__(self, k: int) -> ExactMatrix:
        if k < 0:
            return self.inverse() ** (-k)
        result = ExactMatrix.identity(self.field, self.n)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def shift(self, c) -> ExactMatrix:
        """``self - c I``."""
        F = self.field
        c = F(c)
        return ExactMatrix._raw(
            F, [[F.norm(a - c) if i == j else a for j, a in enumerate(r)] for i, r in enumerate(self.rows)]
        )

    @property
    def T(self) -> ExactMatrix:
        return ExactMatrix._raw(self.field, list(zip(*self.rows)))

    def trace(self) -> Elem:
        return self.field.norm(sum(self.rows[i][i] for i in range(self.n)))

    def det(self) -> Elem:
        return linalg.det(self.rows, self.field)

    def rank(self) -> int:
        return linalg.rank(self.rows, self.field)

    def inverse(self) -> ExactMatrix:
        return ExactMatrix._raw(self.field, linalg.inverse(self.rows, self.field))

    def conjugate_by(self, h: ExactMatrix) -> ExactMatrix:
        """``h self h^{-1}``."""
        return h @ self @ h.inverse()

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.rows for a in r)

    def is_nilpotent(self) -> bool:
        return (self ** self.n).is_zero() if self.n else True

    def flat(self) -> list[Elem]:
        return [a for r in self.rows for a in r]

    def char_poly(self) -> Poly:
        return char_poly(self)

    def change_field(self, field: Field) -> ExactMatrix:
        if self.field != QQ:
            raise ValueError("only QQ matrices can be reduced")
        return ExactMatrix(field, self.rows)


def char_poly(m: ExactMatrix) -> Poly:
    """``det(tI - m)`` via reduction to upper Hessenberg form."""
    F = m.field
    n = m.n
    h = [list(r) for r in m.rows]
    # Hessenberg reduction by elementary similarity transforms
    for k in range(n - 2):
        piv = next((i for i in range(k + 1, n) if h[i][k] != 0), None)
        if piv is None:
            continue
        if piv != k + 1:
            h[piv], h[k + 1] = h[k + 1], h[piv]
            for row in h:
                row[piv], row[k + 1] = row[k + 1], row[piv]
        inv = F.inv(h[k + 1][k])
        for i in range(k + 2, n):
            f = F.norm(h[i][k] * inv)
            if f == 0:
                continue
            # row_i -= f * row_{k+1}; then col_{k+1} += f * col_i
            h[i] = [F.norm(a - f * b) for a, b in zip(h[i], h[k + 1])]
            for row in h:
                row[k + 1] = F.norm(row[k + 1] + f * row[i])
    # p_k = (t - h_kk) p_{k-1} - sum_{i<k} h_{ik} (prod_{j=i+1}^{k} h_{j,j-1}) p_{i-1}
    t = Poly.x(F)
    polys = [Poly.const(F, 1)]
    for k in range(n):
        pk = (t - h[k][k]) * polys[k]
        prod = F.one
        for i in range(k - 1, -1, -1):
            prod = F.norm(prod * h[i + 1][i])
            if prod == 0:
                break
            pk = pk - polys[i] * F.norm(h[i][k] * prod)
        polys.append(pk)
    return polys[n]


def symplectic_form(field: Field, n: int) -> ExactMatrix:
    """``J = [[0, I], [-I, 0]]`` of size ``n = 2m``."""
    if n % 2:
        raise ValueError("symplectic form needs even size")
    m = n // 2
    rows = [[0] * n for _ in range(n)]
    for i in range(m):
        rows[i][m + i] = 1
        rows[m + i][i] = -1
    return ExactMatrix(field, rows)


# -- plain-text matrix format ----------------------------------------------
# first line "n p"; then n rows of n entries (integers, or num/den when p = 0)


def parse_matrix(text: str) -> ExactMatrix:
    lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise ValueError("header must be 'n p'")
    n, p = int(lines[0][0]), int(lines[0][1])
    body = lines[1:]
    if len(body) != n or any(len(r) != n for r in body):
        raise ValueError(f"expected {n} rows of {n} entries")
    F = field_for(p)
    if p:
        for r in body:
            for x in r:
                if "/" in x:
                    raise ValueError("fractions are only allowed when p = 0")
    return ExactMatrix(F, [[F(x) for x in r] for r in body])


def format_matrix(m: ExactMatrix) -> str:
    lines = [f"{m.n} {m.field.p}"]
    lines += [" ".join(str(x) for x in r) for r in m.rows]
    return "\n".join(lines) + "\n"
