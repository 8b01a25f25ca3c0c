"""Enumeration, dimensions, closures, sheets and local data of class data."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .data import JordanClassDatum, LeviShape, Slot
from .partitions import Partition, componentwise_sum, dominates, partitions, sum_of_squares_of_conjugate

ENUM_CAP = 8
POSET_CAP = 6


def _check_mode(mode: str):
    if mode not in ("group", "liealg"):
        raise ValueError(f"mode must be group or liealg, got {mode!r}")


def enumerate_classes(n: int, mode: str = "liealg") -> list[JordanClassDatum]:
    """Every multiset of slots ``(m, mu)`` with ``sum m = n``."""
    _check_mode(mode)
    if not 1 <= n <= ENUM_CAP:
        raise ValueError(f"n must satisfy 1 <= n <= {ENUM_CAP}")
    slot_types: list[Slot] = [(m, mu) for m in range(n, 0, -1) for mu in sorted(partitions(m))]

    out = []

    def rec(start: int, rest: int, acc: list[Slot]):
        if rest == 0:
            out.append(JordanClassDatum(tuple(acc), mode))
            return
        for k in range(start, len(slot_types)):
            m, _ = slot_types[k]
            if m <= rest:
                rec(k, rest - m, acc + [slot_types[k]])

    rec(0, n, [])
    return out


def dim_orbit(pp: JordanClassDatum) -> int:
    return pp.n ** 2 - sum(sum_of_squares_of_conjugate(mu) for _, mu in pp.slots)


def dim_class(j: JordanClassDatum) -> int:
    return dim_orbit(j) + j.r


def induce(ls: LeviShape) -> Partition:
    """Induced orbit from a block-diagonal Levi: the componentwise sum of partitions."""
    return componentwise_sum(ls.parts)


def _merge(sources: Sequence[Slot]) -> Partition:
    return induce(LeviShape(tuple(m for m, _ in sources), tuple(mu for _, mu in sources)))


def _surjections(src: Sequence[Slot], tgt: Sequence[Slot]) -> Iterator[tuple[int, ...]]:
    """Maps slot index -> target index, onto, respecting block sizes.

    Equal source slots receive non-decreasing targets, so each multiset
    assignment appears once.
    """
    caps = [m for m, _ in tgt]
    used = [0] * len(tgt)
    hit = [0] * len(tgt)
    assign = [0] * len(src)
    total_src = sum(m for m, _ in src)
    if total_src != sum(caps):
        return

    def rec(i: int, remaining_slots: int):
        if i == len(src):
            if all(used[a] == caps[a] for a in range(len(tgt))):
                yield tuple(assign)
            return
        # pruning: the unfilled targets need at least one slot each
        if sum(1 for a in range(len(tgt)) if hit[a] == 0) > remaining_slots:
            return
        lo = assign[i - 1] if i > 0 and src[i] == src[i - 1] else 0
        m = src[i][0]
        for a in range(lo, len(tgt)):
            if used[a] + m <= caps[a]:
                used[a] += m
                hit[a] += 1
                assign[i] = a
                yield from rec(i + 1, remaining_slots - 1)
                used[a] -= m
                hit[a] -= 1

    yield from rec(0, len(src))


def _families(j: JordanClassDatum, p: JordanClassDatum, exact: bool) -> list[tuple[tuple[Slot, ...], ...]]:
    if j.n != p.n:
        raise ValueError("class and pattern must have the same n")
    if j.mode != p.mode:
        raise ValueError("class and pattern must have the same mode")
    src, tgt = j.slots, p.slots
    seen = []
    found = set()
    for phi in _surjections(src, tgt):
        groups = tuple(tuple(src[i] for i in range(len(src)) if phi[i] == a) for a in range(len(tgt)))
        ok = True
        for (m, nu), g in zip(tgt, groups):
            ind = _merge(g)
            if (ind != nu) if exact else not dominates(ind, nu):
                ok = False
                break
        if ok and groups not in found:
            found.add(groups)
            seen.append(groups)
    return seen


def closure_contains(j: JordanClassDatum, p: JordanClassDatum) -> bool:
    """Whether points with pattern ``p`` lie in the closure of the class ``j``."""
    return bool(_families(j, p, exact=False))


def regular_closure_contains(j: JordanClassDatum, p: JordanClassDatum) -> bool:
    """As :func:`closure_contains`, with the induced orbit required exactly."""
    return bool(_families(j, p, exact=True))


@dataclass(frozen=True)
class LocalFamily:
    """One way of distributing the class slots over the blocks of the pattern."""

    target: tuple[Slot, ...]
    groups: tuple[tuple[Slot, ...], ...]

    def to_json(self) -> dict:
        return {
            "blocks": [
                {"target": [m, list(nu)], "slots": [[k, list(mu)] for k, mu in g]}
                for (m, nu), g in zip(self.target, self.groups)
            ]
        }


def local_data(j: JordanClassDatum, p: JordanClassDatum) -> list[LocalFamily]:
    """Classes of the block Levi of ``p`` meeting ``j`` whose closure contains ``p``.

    Families are distinguished by what lands on each block position.
    """
    fams = _families(j, p, exact=False)
    if not fams:
        raise ValueError(f"pattern {p} is not in the closure of {j}")
    return [LocalFamily(p.slots, g) for g in fams]


@dataclass
class ClassPoset:
    classes: list[JordanClassDatum]
    closure: list[list[bool]]  # closure[a][b]: class b lies in the closure of class a
    regular: list[list[bool]]  # regular[a][b]: class b lies in the regular closure of class a

    def below(self, a: int, b: int) -> bool:
        """``b ⪯ a`` in the regular-closure order."""
        return self.regular[a][b]

    def hasse_edges(self, relation: str = "closure") -> list[tuple[int, int]]:
        """Cover relations ``(upper, lower)``."""
        rel = self.closure if relation == "closure" else self.regular
        k = len(self.classes)
        edges = []
        for a in range(k):
            for b in range(k):
                if a == b or not rel[a][b]:
                    continue
                if not any(c not in (a, b) and rel[a][c] and rel[c][b] for c in range(k)):
                    edges.append((a, b))
        return edges

    def is_antisymmetric(self) -> bool:
        k = len(self.classes)
        return all(
            not (rel[a][b] and rel[b][a]) for rel in (self.closure, self.regular) for a in range(k) for b in range(k) if a != b
        )

    def to_json(self) -> dict:
        return {
            "classes": [c.to_json() for c in self.classes],
            "closure_edges": [list(e) for e in self.hasse_edges("closure")],
            "regular_edges": [list(e) for e in self.hasse_edges("regular")],
        }


def class_poset(n: int, mode: str = "liealg") -> ClassPoset:
    if n > POSET_CAP:
        raise ValueError(f"poset computation is limited to n <= {POSET_CAP}")
    classes = enumerate_classes(n, mode)
    cl = [[closure_contains(a, b) for b in classes] for a in classes]
    reg = [[regular_closure_contains(a, b) for b in classes] for a in classes]
    return ClassPoset(classes, cl, reg)


def sheets(n: int, mode: str = "liealg") -> list[JordanClassDatum]:
    """Classes maximal for the regular-closure order; their regular closures are the sheets."""
    P = class_poset(n, mode)
    k = len(P.classes)
    return [P.classes[a] for a in range(k) if not any(b != a and P.regular[b][a] for b in range(k))]


def is_closure_normal_gl(j: JordanClassDatum) -> bool:
    """Normality of the closure of a GL_n class: all slots coincide."""
    return len(set(j.slots)) == 1


def is_sheet_datum(j: JordanClassDatum) -> bool:
    """Every slot carries the zero orbit of its block."""
    return all(mu == (1,) * m for m, mu in j.slots)
