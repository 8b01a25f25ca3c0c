"""Jordan decomposition certificates by the rank-profile method."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .field import Elem, Field, field_for
from .matrix import ExactMatrix, symplectic_form
from .poly import roots


class NonSplitSpectrum(ValueError):
    """The characteristic polynomial has roots outside the coefficient field."""


@dataclass(frozen=True)
class JordanData:
    """Distinct eigenvalues, each with the partition of its Jordan block sizes."""

    field: Field
    blocks: tuple[tuple[Elem, tuple[int, ...]], ...]

    def __post_init__(self):
        eigs = [a for a, _ in self.blocks]
        if len(set(eigs)) != len(eigs):
            raise ValueError("eigenvalues must be distinct")
        for _, part in self.blocks:
            if not part or any(x <= 0 for x in part) or list(part) != sorted(part, reverse=True):
                raise ValueError(f"bad partition {part}")

    @property
    def n(self) -> int:
        return sum(sum(part) for _, part in self.blocks)

    def to_json(self) -> dict:
        return {
            "p": self.field.p,
            "blocks": [[str(a), list(part)] for a, part in self.blocks],
        }

    @classmethod
    def from_json(cls, obj) -> JordanData:
        if isinstance(obj, str):
            obj = json.loads(obj)
        F = field_for(int(obj["p"]))
        return cls(F, tuple((F(a), tuple(int(x) for x in part)) for a, part in obj["blocks"]))


def eigenvalues(m: ExactMatrix) -> dict[Elem, int]:
    """Eigenvalues with algebraic multiplicity; raises if the spectrum does not split."""
    ev = roots(m.char_poly())
    if sum(ev.values()) != m.n:
        raise NonSplitSpectrum(f"characteristic polynomial of this {m.n}x{m.n} matrix does not split over {m.field!r}")
    return ev


def _partition_from_ranks(ranks: Sequence[int]) -> tuple[int, ...]:
    # ranks[k] = rank((m - a)^k); column lengths of the Young diagram are the drops
    conj = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks)) if ranks[k - 1] > ranks[k]]
    return conjugate(tuple(conj))


def conjugate(part: Sequence[int]) -> tuple[int, ...]:
    if not part:
        return ()
    return tuple(sum(1 for x in part if x > j) for j in range(part[0]))


def jordan_data(m: ExactMatrix) -> JordanData:
    blocks = []
    for a, mult in sorted(eigenvalues(m).items()):
        shifted = m.shift(a)
        ranks = [m.n]
        power = ExactMatrix.identity(m.field, m.n)
        target = m.n - mult
        while ranks[-1] > target:
            power = power @ shifted
            ranks.append(power.rank())
        blocks.append((a, _partition_from_ranks(ranks)))
    return JordanData(m.field, tuple(blocks))


def jordan_matrix(jd: JordanData) -> ExactMatrix:
    """Block-diagonal Jordan normal form, blocks in the stored order."""
    F = jd.field
    return ExactMatrix.block_diag(
        F, [ExactMatrix.jordan_block(F, a, k) for a, part in jd.blocks for k in part]
    )


def random_conjugate(m: ExactMatrix, rng: random.Random) -> ExactMatrix:
    return m.conjugate_by(ExactMatrix.random_invertible(m.field, m.n, rng))


def jordan_chevalley(m: ExactMatrix) -> tuple[ExactMatrix, ExactMatrix]:
    """Additive decomposition ``m = s + x`` with ``s`` semisimple, ``x`` nilpotent, ``sx = xs``."""
    F = m.field
    cols: list[list[Elem]] = []
    diag: list[Elem] = []
    for a, mult in sorted(eigenvalues(m).items()):
        gen = linalg.kernel((m.shift(a) ** mult).rows, F)
        cols.extend(gen)
        diag.extend([a] * len(gen))
    P = ExactMatrix(F, list(zip(*cols)))
    s = P @ ExactMatrix.diag(F, diag) @ P.inverse()
    return s, m - s


def multiplicative_jordan(g: ExactMatrix) -> tuple[ExactMatrix, ExactMatrix]:
    """``g = s u`` with ``s`` semisimple and ``u = s^{-1} g`` unipotent."""
    s, _ = jordan_chevalley(g)
    return s, s.inverse() @ g


def is_semisimple(m: ExactMatrix) -> bool:
    return all(set(part) == {1} for _, part in jordan_data(m).blocks)


# -- centralizers in classical Lie algebras --------------------------------

AMBIENTS = ("gl", "sl", "sp")


def ambient_basis(field: Field, n: int, ambient: str) -> list[ExactMatrix]:
    """A basis of gl_n, sl_n or sp_n (the last as the kernel of ``X -> X^T J + J X``)."""
    if ambient == "gl":
        return [ExactMatrix.unit(field, n, i, j) for i in range(n) for j in range(n)]
    if ambient == "sl":
        basis = [ExactMatrix.unit(field, n, i, j) for i in range(n) for j in range(n) if i != j]
        basis += [ExactMatrix.unit(field, n, i, i) - ExactMatrix.unit(field, n, i + 1, i + 1) for i in range(n - 1)]
        return basis
    if ambient == "sp":
        J = symplectic_form(field, n)
        units = [ExactMatrix.unit(field, n, i, j) for i in range(n) for j in range(n)]
        images = [(E.T @ J + J @ E).flat() for E in units]
        # rows of the linear system = matrix entries, columns = unit coefficients
        system = [list(r) for r in zip(*images)]
        out = []
        for v in linalg.kernel(system, field, len(units)):
            acc = ExactMatrix.zero(field, n)
            for c, E in zip(v, units):
                if c != 0:
                    acc = acc + E.scale(c)
            out.append(acc)
        return out
    raise ValueError(f"unknown ambient {ambient!r}; expected one of {AMBIENTS}")


def in_ambient(m: ExactMatrix, ambient: str) -> bool:
    """Lie-algebra membership, or group membership for the same ambient."""
    F = m.field
    if ambient == "gl":
        return True
    if ambient == "sl":
        return m.trace() == 0 or m.det() == 1
    if ambient == "sp":
        if m.n % 2:
            return False
        J = symplectic_form(F, m.n)
        return (m.T @ J + J @ m).is_zero() or m.T @ J @ m == J
    raise ValueError(f"unknown ambient {ambient!r}; expected one of {AMBIENTS}")


def matrix_centralizer_dim(m: ExactMatrix, ambient: str = "gl") -> int:
    """Dimension of ``{y in ambient : y m = m y}``.

    ``m`` may be a Lie algebra element or a group element of the ambient;
    both centralizers are the kernel of ``y -> y m - m y`` on the Lie algebra.
    """
    if not in_ambient(m, ambient):
        raise ValueError(f"matrix does not lie in the {ambient} ambient")
    basis = ambient_basis(m.field, m.n, ambient)
    if not basis:
        return 0
    images = [(y @ m - m @ y).flat() for y in basis]
    return len(basis) - linalg.rank(images, m.field)
