"""Slot data for Jordan classes of GL_n and decomposition classes of gl_n.

A slot ``(m, mu)`` stands for one eigenvalue of multiplicity ``m`` whose
Jordan blocks have sizes ``mu``.  A class datum is the multiset of slots of
its generic element: the Levi is ``prod GL_m`` and the orbit of the Levi is
given by the partitions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..exactnum import JordanData
from .partitions import Partition, fmt_partition, is_partition, make_partition

Slot = tuple[int, Partition]
MODES = ("group", "liealg")


def _canon_slots(slots: Iterable[tuple[int, Sequence[int]]]) -> tuple[Slot, ...]:
    out = []
    for m, mu in slots:
        m = int(m)
        mu = tuple(int(x) for x in mu)
        if not is_partition(mu):
            mu = make_partition(mu)
        if sum(mu) != m:
            raise ValueError(f"partition {mu} does not have size {m}")
        out.append((m, mu))
    return tuple(sorted(out, key=lambda s: (-s[0], s[1])))


@dataclass(frozen=True)
class JordanClassDatum:
    slots: tuple[Slot, ...]
    mode: str = "liealg"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not self.slots:
            raise ValueError("a class datum needs at least one slot")
        object.__setattr__(self, "slots", _canon_slots(self.slots))

    @property
    def n(self) -> int:
        return sum(m for m, _ in self.slots)

    @property
    def r(self) -> int:
        return len(self.slots)

    def blocks(self) -> tuple[int, ...]:
        return tuple(m for m, _ in self.slots)

    def generic(self) -> PointPattern:
        return PointPattern(self.slots, self.mode)

    def as_class(self) -> JordanClassDatum:
        return JordanClassDatum(self.slots, self.mode)

    def to_json(self) -> dict:
        return {"n": self.n, "mode": self.mode, "slots": [[m, list(mu)] for m, mu in self.slots]}

    @classmethod
    def from_json(cls, obj) -> JordanClassDatum:
        if isinstance(obj, str):
            obj = json.loads(obj)
        d = cls(tuple((m, tuple(mu)) for m, mu in obj["slots"]), obj.get("mode", "liealg"))
        if "n" in obj and obj["n"] != d.n:
            raise ValueError(f"declared n={obj['n']} but slots sum to {d.n}")
        return d

    def __str__(self):
        return "{" + ", ".join(f"({m},{fmt_partition(mu)})" for m, mu in self.slots) + "}"


class PointPattern(JordanClassDatum):
    """Eigenvalue collision pattern and Jordan type of one element."""


@dataclass(frozen=True)
class LeviShape:
    """A composition of ``n`` with a partition attached to each block."""

    blocks: tuple[int, ...]
    parts: tuple[Partition, ...]

    def __post_init__(self):
        if len(self.blocks) != len(self.parts):
            raise ValueError("need one partition per block")
        parts = tuple(tuple(int(x) for x in p) for p in self.parts)
        for d, p in zip(self.blocks, parts):
            if d <= 0 or not is_partition(p) or sum(p) != d:
                raise ValueError(f"partition {p} is not a partition of block size {d}")
        object.__setattr__(self, "blocks", tuple(int(d) for d in self.blocks))
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.blocks)


def parse_slots(text: str, mode: str = "liealg", cls=JordanClassDatum):
    """Parse ``"2:1,1;1:1"`` (slots separated by ``;``, ``m:parts``)."""
    slots = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ":" not in chunk:
            raise ValueError(f"slot {chunk!r} must look like m:parts")
        m, parts = chunk.split(":", 1)
        slots.append((int(m), tuple(int(x) for x in parts.split(",") if x.strip())))
    return cls(tuple(slots), mode)


def pattern_of(jd: JordanData, mode: str = "liealg") -> PointPattern:
    """Forget the eigenvalues of a Jordan decomposition certificate."""
    return PointPattern(tuple((sum(part), tuple(part)) for _, part in jd.blocks), mode)
