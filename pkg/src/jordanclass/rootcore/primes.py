"""Good, very good, bad and torsion primes."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..exactnum import is_prime
from .system import Component, RootSystem


def _bad(c: Component, p: int) -> bool:
    if p == 2:
        return c.letter != "A"
    if p == 3:
        return c.letter in "EFG"
    if p == 5:
        return c.label == "E8"
    return False


def _torsion(c: Component, p: int) -> bool:
    # B2 and C2 are the same root system, so B2 follows C
    if p == 2:
        return c.letter not in "AC" and c.label != "B2"
    if p == 3:
        return c.letter in "EF"
    if p == 5:
        return c.label == "E8"
    return False


@dataclass(frozen=True)
class ComponentVerdict:
    label: str
    good: bool
    very_good: bool
    torsion: bool


@dataclass(frozen=True)
class PrimeVerdict:
    p: int
    good: bool
    very_good: bool
    torsion: bool
    fundamental_group_order: Optional[int] = None
    components: tuple[ComponentVerdict, ...] = field(default=())

    @property
    def bad(self) -> bool:
        return not self.good

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "good": self.good,
            "bad": self.bad,
            "very_good": self.very_good,
            "torsion": self.torsion,
            "fundamental_group_order": self.fundamental_group_order,
            "components": [
                {"type": c.label, "good": c.good, "very_good": c.very_good, "torsion": c.torsion}
                for c in self.components
            ],
        }


def classify_prime(rs: RootSystem, p: int, fundamental_group_order: Optional[int] = None) -> PrimeVerdict:
    """Classify ``p`` for ``rs``.

    Without ``fundamental_group_order`` the torsion flag refers to the root
    system alone; with it, ``p`` dividing that order also makes ``p`` torsion.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if fundamental_group_order is not None and fundamental_group_order < 1:
        raise ValueError("fundamental group order must be a positive integer")
    comps = []
    for c in rs.components:
        good = not _bad(c, p)
        very_good = good and not (c.letter == "A" and (c.rank + 1) % p == 0)
        comps.append(ComponentVerdict(c.label, good, very_good, _torsion(c, p)))
    torsion = any(c.torsion for c in comps)
    if fundamental_group_order is not None and fundamental_group_order % p == 0:
        torsion = True
    return PrimeVerdict(
        p=p,
        good=all(c.good for c in comps),
        very_good=all(c.very_good for c in comps),
        torsion=torsion,
        fundamental_group_order=fundamental_group_order,
        components=tuple(comps),
    )
