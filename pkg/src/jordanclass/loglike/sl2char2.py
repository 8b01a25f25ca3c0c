"""Exhaustive facts about sl_2 in characteristic 2.

The field with four elements is hardcoded: elements are 0, 1, w, w + 1
encoded as the integers 0..3 (bit k is the coefficient of w^k), addition
is xor and multiplication uses ``w^2 = w + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

Mat = tuple[int, int, int, int]  # row-major 2x2


def f4_mul(a: int, b: int) -> int:
    # carry-less product reduced by w^2 = w + 1
    r = 0
    for k in range(2):
        if (b >> k) & 1:
            r ^= a << k
    if r & 4:
        r ^= 0b111
    return r


F4 = (0, 1, 2, 3)
F2 = (0, 1)
F4_INV = {a: next(b for b in F4 if f4_mul(a, b) == 1) for a in F4 if a}


def mat_mul(x: Mat, y: Mat) -> Mat:
    a, b, c, d = x
    e, f, g, h = y
    m = f4_mul
    return (m(a, e) ^ m(b, g), m(a, f) ^ m(b, h), m(c, e) ^ m(d, g), m(c, f) ^ m(d, h))


def bracket(x: Mat, y: Mat) -> Mat:
    return tuple(u ^ v for u, v in zip(mat_mul(x, y), mat_mul(y, x)))


def sl2(field=F4) -> list[Mat]:
    # trace a + d = 0 means d = a in characteristic 2
    return [(a, b, c, a) for a, b, c in product(field, repeat=3)]


def _rank(rows: list[list[int]]) -> int:
    rows = [list(r) for r in rows]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = F4_INV[rows[rank][col]]
        rows[rank] = [f4_mul(inv, v) for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [u ^ f4_mul(f, v) for u, v in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


GL2_BASIS: list[Mat] = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
SL2_BASIS: list[Mat] = [(1, 0, 0, 1), (0, 1, 0, 0), (0, 0, 1, 0)]


def commutant_dim(x: Mat) -> int:
    """Dimension over F_4 of ``{y in gl_2 : xy = yx}``."""
    return 4 - _rank([list(bracket(y, x)) for y in GL2_BASIS])


def orbit_dim(x: Mat) -> int:
    """``dim SL_2 - dim`` of the centralizer, which is the commutant minus the determinant condition."""
    return 3 - (commutant_dim(x) - 1)


def ad_power_is_zero(x: Mat, k: int) -> bool:
    for y in SL2_BASIS:
        z = y
        for _ in range(k):
            z = bracket(x, z)
        if any(z):
            return False
    return True


def is_scalar(x: Mat) -> bool:
    return x[1] == 0 and x[2] == 0 and x[0] == x[3]


def f4_sqrt(a: int) -> int:
    return next(r for r in F4 if f4_mul(r, r) == a)


def is_semisimple(x: Mat) -> bool:
    """A trace-zero 2x2 matrix in characteristic 2 has the single eigenvalue ``sqrt(det)``."""
    a, b, c, d = x
    det = f4_mul(a, d) ^ f4_mul(b, c)
    lam = f4_sqrt(det)
    # diagonalizable with one eigenvalue means x = lam I
    return x == (lam, 0, 0, lam)


@dataclass(frozen=True)
class Sl2Char2Report:
    elements: int
    ad_nilpotent: bool
    ad_square_zero: bool
    center_is_scalars: bool
    semisimple_is_center: bool
    level_dims: tuple[int, ...]
    level_zero_is_center: bool
    noncentral_centralizer_dim: int
    sl2_f2_ad_nilpotent: bool

    @property
    def ok(self) -> bool:
        return (
            self.elements == 64
            and self.ad_nilpotent
            and self.center_is_scalars
            and self.semisimple_is_center
            and self.level_dims == (0, 2)
            and self.level_zero_is_center
            and self.noncentral_centralizer_dim == 1
            and self.sl2_f2_ad_nilpotent
        )

    def to_json(self) -> dict:
        d = dict(self.__dict__)
        d["level_dims"] = list(self.level_dims)
        d["ok"] = self.ok
        # the absence of a log-like map is a conclusion drawn from these facts, not computed
        d["conclusion"] = "level set of dimension 0 equals the centre, so no log-like map exists for SL_2 in characteristic 2"
        return d


def sl2_char2_report() -> Sl2Char2Report:
    g = sl2(F4)
    center = [z for z in g if all(not any(bracket(z, x)) for x in g)]
    level = {x: orbit_dim(x) for x in g}
    noncentral = {3 - orbit_dim(x) for x in g if not is_scalar(x)}
    return Sl2Char2Report(
        elements=len(g),
        # sl_2 is 3-dimensional, so nilpotency of ad x means (ad x)^3 = 0
        ad_nilpotent=all(ad_power_is_zero(x, 3) for x in g),
        ad_square_zero=all(ad_power_is_zero(x, 2) for x in g),
        center_is_scalars=sorted(center) == sorted(x for x in g if is_scalar(x)),
        semisimple_is_center=sorted(x for x in g if is_semisimple(x)) == sorted(center),
        level_dims=tuple(sorted(set(level.values()))),
        level_zero_is_center=sorted(x for x, d in level.items() if d == 0) == sorted(center),
        noncentral_centralizer_dim=noncentral.pop() if len(noncentral) == 1 else -1,
        sl2_f2_ad_nilpotent=all(ad_power_is_zero(x, 3) for x in sl2(F2)),
    )
