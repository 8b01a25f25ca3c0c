"""Root subsystems, torus elements and centralizer subsystems."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from ..exactnum import QQ, linalg
from .system import RootSystem

_EXCEPTIONAL_COUNTS = {(6, 72): "E6", (7, 126): "E7", (8, 240): "E8", (4, 48): "F4", (2, 12): "G2"}


@dataclass(frozen=True)
class Subsystem:
    """A set of roots of ``parent``, stored as sorted root indices."""

    parent: RootSystem
    members: tuple[int, ...]

    def __post_init__(self):
        ms = tuple(sorted(set(self.members)))
        object.__setattr__(self, "members", ms)
        s = set(ms)
        if any(self.parent.neg(i) not in s for i in ms):
            raise ValueError("subsystem must be closed under negation")

    @classmethod
    def from_roots(cls, parent: RootSystem, vectors: Iterable[Sequence[int]]) -> Subsystem:
        return cls(parent, tuple(parent.index[tuple(v)] for v in vectors))

    @classmethod
    def whole(cls, parent: RootSystem) -> Subsystem:
        return cls(parent, tuple(range(len(parent.roots))))

    @classmethod
    def empty(cls, parent: RootSystem) -> Subsystem:
        return cls(parent, ())

    def __len__(self):
        return len(self.members)

    def __contains__(self, i: int):
        return i in set(self.members)

    def vectors(self) -> list[tuple[int, ...]]:
        return [self.parent.roots[i] for i in self.members]

    def is_closed(self) -> bool:
        """Additive closure within the parent."""
        rs = self.parent
        s = set(self.members)
        for a in self.members:
            for b in self.members:
                v = tuple(x + y for x, y in zip(rs.roots[a], rs.roots[b]))
                j = rs.index.get(v)
                if j is not None and j not in s:
                    return False
        return True

    def positive(self) -> list[int]:
        return [i for i in self.members if self.parent.is_positive(i)]

    def base(self) -> list[int]:
        """Simple roots of the positive system ``self ∩ Φ+``."""
        rs = self.parent
        pos = self.positive()
        pos_set = set(pos)
        sums = set()
        for a, b in combinations(pos, 2):
            v = tuple(x + y for x, y in zip(rs.roots[a], rs.roots[b]))
            j = rs.index.get(v)
            if j is not None and j in pos_set:
                sums.add(j)
        # a positive root is simple in the subsystem iff it is not a sum of two positives in it
        return [i for i in pos if i not in sums]

    def rank(self) -> int:
        vs = self.vectors()
        return linalg.rank([[QQ(x) for x in v] for v in vs], QQ) if vs else 0

    def type_label(self) -> str:
        return subsystem_type(self)

    def to_json(self) -> dict:
        return {
            "parent": self.parent.type_label,
            "members": list(self.members),
            "type": self.type_label(),
            "rationally_closed": is_rationally_closed(self),
        }


def _components_of(ss: Subsystem) -> list[list[int]]:
    """Connected components of the subsystem's Dynkin diagram, as lists of base roots."""
    rs = ss.parent
    base = ss.base()
    comps: list[list[int]] = []
    seen = set()
    for b in base:
        if b in seen:
            continue
        stack, comp = [b], []
        seen.add(b)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in base:
                if y not in seen and rs.inner(rs.roots[x], rs.roots[y]) != 0:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def _root_count(rs: RootSystem, base: list[int], members: Sequence[int]) -> int:
    # roots of the subsystem lying in the span of this component's base
    ker = linalg.kernel([[QQ(x) for x in rs.roots[b]] for b in base], QQ, rs.rank)
    return sum(
        1 for i in members if all(sum(QQ(x) * y for x, y in zip(rs.roots[i], v)) == 0 for v in ker)
    )


def _label_component(rs: RootSystem, base: list[int], members: Sequence[int], parent_lengths: set) -> str:
    r = len(base)
    N = _root_count(rs, base, members)
    lengths = sorted({rs.inner(rs.roots[b], rs.roots[b]) for b in base})
    if len(lengths) == 1:
        if N == r * (r + 1):
            letter = f"A{r}"
        elif r >= 4 and N == 2 * r * (r - 1):
            letter = f"D{r}"
        else:
            letter = _EXCEPTIONAL_COUNTS[(r, N)]
        short = len(parent_lengths) > 1 and lengths[0] == min(parent_lengths)
        return ("~" if short else "") + letter
    if (r, N) in ((4, 48), (2, 12)):
        return _EXCEPTIONAL_COUNTS[(r, N)]
    if r == 2:
        return "C2"
    n_short = sum(1 for b in base if rs.inner(rs.roots[b], rs.roots[b]) == lengths[0])
    return f"B{r}" if n_short == 1 else f"C{r}"


_ORDER = "ABCDEFG"


def subsystem_type(ss: Subsystem) -> str:
    """Isomorphism type such as ``"A1+A1"``; ``~`` marks short-root components."""
    rs = ss.parent
    if not ss.members:
        return "∅"
    parent_lengths = {rs.inner(r, r) for r in rs.roots}
    labels = [_label_component(rs, comp, ss.members, parent_lengths) for comp in _components_of(ss)]

    def key(lab: str):
        core = lab.lstrip("~")
        return (_ORDER.index(core[0]), -int(core[1:]), lab.startswith("~"))

    return "+".join(sorted(labels, key=key))


# -- torus elements ----------------------------------------------------------


@dataclass(frozen=True)
class TorusElement:
    """Semisimple element of a maximal torus.

    ``coords`` are rationals.  With ``basis="simple"`` they are the values
    on the simple roots; with ``basis="epsilon"`` they are Euclidean
    coordinates paired against the roots' coordinates.  In multiplicative
    mode the values are angles mod 1, so ``alpha(s) = 1`` iff the pairing is
    an integer; in additive mode the pairing itself must vanish (mod ``p``).
    """

    mode: str
    coords: tuple[Fraction, ...]
    p: int = 0
    basis: str = "simple"

    def __post_init__(self):
        if self.mode not in ("additive", "multiplicative"):
            raise ValueError(f"mode must be additive or multiplicative, got {self.mode!r}")
        if self.basis not in ("simple", "epsilon"):
            raise ValueError(f"basis must be simple or epsilon, got {self.basis!r}")
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))
        if self.p:
            for c in self.coords:
                if c.denominator % self.p == 0:
                    raise ValueError(f"coordinate {c} has denominator divisible by p={self.p}")

    @classmethod
    def multiplicative(cls, coords, p: int = 0, basis: str = "simple") -> TorusElement:
        return cls("multiplicative", tuple(coords), p, basis)

    @classmethod
    def additive(cls, coords, p: int = 0, basis: str = "simple") -> TorusElement:
        return cls("additive", tuple(coords), p, basis)

    def value(self, rs: RootSystem, i: int) -> Fraction:
        if self.basis == "simple":
            if len(self.coords) != rs.rank:
                raise ValueError(f"expected {rs.rank} coordinates, got {len(self.coords)}")
            return sum((c * x for c, x in zip(rs.roots[i], self.coords)), Fraction(0))
        v = rs.eps_vector(i)
        if len(self.coords) != len(v):
            raise ValueError(f"expected {len(v)} epsilon coordinates, got {len(self.coords)}")
        return sum((a * x for a, x in zip(v, self.coords)), Fraction(0))

    def kills(self, rs: RootSystem, i: int) -> bool:
        val = self.value(rs, i)
        if self.mode == "multiplicative":
            return val.denominator == 1
        if self.p:
            return val.numerator % self.p == 0
        return val == 0


def centralizer_subsystem(rs: RootSystem, s: TorusElement) -> Subsystem:
    return Subsystem(rs, tuple(i for i in range(len(rs.roots)) if s.kills(rs, i)))


# -- rational closure --------------------------------------------------------


def _span_test(ss: Subsystem):
    rs = ss.parent
    vs = ss.vectors()
    if not vs:
        return lambda i: False
    ann = linalg.kernel([[QQ(x) for x in v] for v in vs], QQ, rs.rank)
    return lambda i: all(sum(x * y for x, y in zip(rs.roots[i], a)) == 0 for a in ann)


def rational_closure(ss: Subsystem) -> Subsystem:
    """``span_Q(ss) ∩ Φ``."""
    in_span = _span_test(ss)
    return Subsystem(ss.parent, tuple(i for i in range(len(ss.parent.roots)) if in_span(i)))


def is_rationally_closed(ss: Subsystem) -> bool:
    return len(rational_closure(ss)) == len(ss)


def levi_subsystem(rs: RootSystem, simple: Iterable[int]) -> Subsystem:
    """Roots supported on the given simple roots."""
    sel = set(simple)
    return Subsystem(
        rs, tuple(i for i, r in enumerate(rs.roots) if all(c == 0 for k, c in enumerate(r) if k not in sel))
    )


# -- pseudo-Levi subsystems --------------------------------------------------

PSEUDO_LEVI_RANK_CAP = 8


@dataclass(frozen=True)
class PseudoLevi:
    subsystem: Subsystem
    type_label: str
    rationally_closed: bool
    witness: TorusElement

    def to_json(self) -> dict:
        return {
            "members": list(self.subsystem.members),
            "type": self.type_label,
            "rationally_closed": self.rationally_closed,
            "witness": [str(c) for c in self.witness.coords],
        }


def _kac_choices(marks: Sequence[int], p: int):
    """Node subsets to delete, with positive Kac labels realizable in characteristic ``p``."""
    nodes = range(len(marks))
    for k in range(1, len(marks) + 1):
        for deleted in combinations(nodes, k):
            labels = {i: 1 for i in deleted}
            if p:
                g = 0
                for i in deleted:
                    g = gcd(g, marks[i])
                if g % p == 0:
                    continue
                # bump one label whose mark is prime to p until the order is prime to p
                j = next(i for i in deleted if marks[i] % p)
                while sum(marks[i] * labels[i] for i in deleted) % p == 0:
                    labels[j] += 1
            yield deleted, labels


def pseudo_levis(rs: RootSystem, p: int = 0, all_conjugates: bool = False) -> list[PseudoLevi]:
    """Centralizer subsystems of torus elements of order prime to ``p``.

    Standard representatives come from deleting nodes of each component's
    extended Dynkin diagram (Kac coordinates); every one is recomputed as
    ``Φ_s`` of an explicit torus element.  With ``all_conjugates`` the list is
    closed under the Weyl group (rank <= 4).
    """
    if rs.rank > PSEUDO_LEVI_RANK_CAP:
        raise ValueError(f"pseudo-Levi enumeration is limited to rank <= {PSEUDO_LEVI_RANK_CAP}")
    per_comp = []
    for k, comp in enumerate(rs.components):
        theta = rs.highest_root(k)
        marks = [1] + list(theta[comp.offset : comp.offset + comp.rank])
        opts = []
        for deleted, labels in _kac_choices(marks, p):
            N = sum(marks[i] * labels[i] for i in deleted)
            vals = [Fraction(labels.get(i + 1, 0), N) for i in range(comp.rank)]
            opts.append(vals)
        per_comp.append(opts)

    found: dict[tuple[int, ...], PseudoLevi] = {}

    def rec(k: int, acc: list[Fraction]):
        if k == len(per_comp):
            s = TorusElement.multiplicative(acc, p)
            ss = centralizer_subsystem(rs, s)
            if ss.members not in found:
                found[ss.members] = PseudoLevi(ss, ss.type_label(), is_rationally_closed(ss), s)
            return
        for vals in per_comp[k]:
            rec(k + 1, acc + vals)

    rec(0, [])
    if all_conjugates:
        for w in rs.weyl_group():
            for pl in list(found.values()):
                img = tuple(sorted(w[i] for i in pl.subsystem.members))
                if img not in found:
                    ss = Subsystem(rs, img)
                    found[img] = PseudoLevi(ss, pl.type_label, pl.rationally_closed, _conjugate_witness(rs, pl.witness, w))
    return sorted(found.values(), key=lambda pl: (-len(pl.subsystem), pl.subsystem.members))


def _conjugate_witness(rs: RootSystem, s: TorusElement, w: Sequence[int]) -> TorusElement:
    # (w.s)(alpha) = s(w^{-1} alpha); new simple-root values
    inv = {w[i]: i for i in range(len(w))}
    vals = [s.value(rs, inv[j]) for j in range(rs.rank)]
    return TorusElement.multiplicative(vals, s.p)
