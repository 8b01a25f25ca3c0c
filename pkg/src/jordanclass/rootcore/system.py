"""Crystallographic root systems built from explicit simple roots.

Every irreducible type is given by the Euclidean coordinates of its simple
roots (Bourbaki numbering).  Roots are stored as integer coefficient vectors
in the simple-root basis; the Gram matrix and Cartan matrix are derived from
the coordinates, and the positive roots are generated by root strings.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

Vec = tuple[int, ...]

VALID_RANKS = {
    "A": lambda l: l >= 1,
    "B": lambda l: l >= 2,
    "C": lambda l: l >= 2,
    "D": lambda l: l >= 4,
    "E": lambda l: 6 <= l <= 8,
    "F": lambda l: l == 4,
    "G": lambda l: l == 2,
}

H = Fraction(1, 2)


def _e(dim: int, *terms: tuple[int, Fraction | int]) -> tuple[Fraction, ...]:
    v = [Fraction(0)] * dim
    for i, c in terms:
        v[i] += c
    return tuple(v)


def _e8_simple() -> list[tuple[Fraction, ...]]:
    a1 = tuple(Fraction(x) for x in (H, -H, -H, -H, -H, -H, -H, H))
    a2 = _e(8, (0, 1), (1, 1))
    rest = [_e(8, (i, 1), (i - 1, -1)) for i in range(1, 7)]
    # order a1, a2, a3 = e2 - e1, ..., a8 = e7 - e6
    return [a1, a2] + rest


def simple_root_coordinates(letter: str, rank: int) -> list[tuple[Fraction, ...]]:
    """Euclidean coordinates of the simple roots of an irreducible type."""
    if letter not in VALID_RANKS or not VALID_RANKS[letter](rank):
        raise ValueError(f"invalid root system type {letter}{rank}")
    l = rank
    if letter == "A":
        return [_e(l + 1, (i, 1), (i + 1, -1)) for i in range(l)]
    chain = [_e(l, (i, 1), (i + 1, -1)) for i in range(l - 1)]
    if letter == "B":
        return chain + [_e(l, (l - 1, 1))]
    if letter == "C":
        return chain + [_e(l, (l - 1, 2))]
    if letter == "D":
        return chain + [_e(l, (l - 2, 1), (l - 1, 1))]
    if letter == "E":
        return _e8_simple()[:l]
    if letter == "F":
        return [
            _e(4, (1, 1), (2, -1)),
            _e(4, (2, 1), (3, -1)),
            _e(4, (3, 1)),
            _e(4, (0, H), (1, -H), (2, -H), (3, -H)),
        ]
    # G2: a1 short, a2 long
    return [_e(3, (0, 1), (1, -1)), _e(3, (0, -2), (1, 1), (2, 1))]


def _dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True)
class Component:
    letter: str
    rank: int
    offset: int

    @property
    def label(self) -> str:
        return f"{self.letter}{self.rank}"


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Root system with roots in the simple-root basis.

    ``roots`` lists the positive roots (by height, then with larger leading
    coefficients first, so the simple roots come first in order) followed
    by their negatives in the same order.
    """

    components: tuple[Component, ...]
    roots: tuple[Vec, ...]
    cartan: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[Fraction, ...], ...]
    eps: tuple[tuple[Fraction, ...], ...]
    index: dict = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def type_label(self) -> str:
        return "+".join(c.label for c in self.components) if self.components else "∅"

    @property
    def simple_indices(self) -> tuple[int, ...]:
        return tuple(range(self.rank))

    @property
    def n_positive(self) -> int:
        return len(self.roots) // 2

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"RootSystem({self.type_label})"

    def neg(self, i: int) -> int:
        N = self.n_positive
        return i + N if i < N else i - N

    def is_positive(self, i: int) -> bool:
        return i < self.n_positive

    def height(self, i: int) -> int:
        return sum(self.roots[i])

    def inner(self, u: Sequence, v: Sequence) -> Fraction:
        """Invariant form on coefficient vectors."""
        return sum(u[i] * self.gram[i][j] * v[j] for i in range(self.rank) for j in range(self.rank) if u[i] and v[j])

    def pairing(self, beta: Sequence, i: int) -> int:
        """``<beta, alpha_i^vee>``."""
        return sum(beta[j] * self.cartan[j][i] for j in range(self.rank))

    def eps_vector(self, i: int) -> tuple[Fraction, ...]:
        """Euclidean coordinates of root ``i``."""
        c = self.roots[i]
        d = len(self.eps[0]) if self.eps else 0
        return tuple(sum(c[k] * self.eps[k][t] for k in range(self.rank)) for t in range(d))

    def component_of(self, i: int) -> int:
        c = self.roots[i]
        for k, comp in enumerate(self.components):
            if any(c[comp.offset : comp.offset + comp.rank]):
                return k
        raise ValueError("zero vector")

    def highest_root(self, k: int = 0) -> Vec:
        """Highest root of the ``k``-th irreducible component."""
        best = None
        for i in range(self.n_positive):
            if self.component_of(i) == k and (best is None or self.height(i) > self.height(best)):
                best = i
        return self.roots[best]

    def to_json(self) -> dict:
        return {
            "type": self.type_label,
            "rank": self.rank,
            "roots": [list(r) for r in self.roots],
            "cartan": [list(r) for r in self.cartan],
            "simple_indices": list(self.simple_indices),
        }

    # Weyl group as permutations of root indices; gated to small rank
    def weyl_group(self) -> list[tuple[int, ...]]:
        return _weyl_group(self)

    def reflection_perm(self, i: int) -> tuple[int, ...]:
        out = []
        for beta in self.roots:
            k = self.pairing(beta, i)
            img = tuple(b - k * (1 if j == i else 0) for j, b in enumerate(beta))
            out.append(self.index[img])
        return tuple(out)


def _positive_roots(cartan: Sequence[Sequence[int]]) -> list[Vec]:
    l = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(l)) for i in range(l)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(l):
                # p = how far beta - k alpha_i stays a root
                p = 0
                while True:
                    cand = tuple(b - (p + 1) * (1 if j == i else 0) for j, b in enumerate(beta))
                    if cand in found:
                        p += 1
                    else:
                        break
                q = p - sum(beta[j] * cartan[j][i] for j in range(l))
                if q > 0:
                    up = tuple(b + (1 if j == i else 0) for j, b in enumerate(beta))
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(found, key=lambda v: (sum(v), tuple(-x for x in v)))


def _assemble(components: tuple[Component, ...], eps_blocks: list[list[tuple[Fraction, ...]]]) -> RootSystem:
    l = sum(c.rank for c in components)
    dim = sum(len(b[0]) for b in eps_blocks)
    eps = []
    off = 0
    for block in eps_blocks:
        d = len(block[0])
        for v in block:
            eps.append(tuple([Fraction(0)] * off + list(v) + [Fraction(0)] * (dim - off - d)))
        off += d
    gram = tuple(tuple(_dot(eps[i], eps[j]) for j in range(l)) for i in range(l))
    cartan = tuple(tuple(int(2 * gram[i][j] / gram[j][j]) for j in range(l)) for i in range(l))
    pos = _positive_roots(cartan)
    roots = tuple(pos) + tuple(tuple(-x for x in v) for v in pos)
    return RootSystem(
        components=components,
        roots=roots,
        cartan=cartan,
        gram=gram,
        eps=tuple(eps),
        index={r: i for i, r in enumerate(roots)},
    )


@lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: int) -> RootSystem:
    letter = type_label.strip().upper()
    coords = simple_root_coordinates(letter, rank)
    return _assemble((Component(letter, rank, 0),), [coords])


def product(*factors: RootSystem) -> RootSystem:
    """Orthogonal direct sum; components keep their order."""
    comps = []
    blocks = []
    off = 0
    for rs in factors:
        for c in rs.components:
            comps.append(Component(c.letter, c.rank, off + c.offset))
        # each factor's eps space is kept intact
        blocks.append([list(v) for v in rs.eps])
        off += rs.rank
    if not comps:
        raise ValueError("empty product")
    return _assemble(tuple(comps), [[tuple(v) for v in b] for b in blocks])


def parse_type(label: str) -> RootSystem:
    """``"B3"``, ``"A1+A2"`` or ``"A1xA2"`` into a root system."""
    parts = [p.strip() for p in label.replace("x", "+").replace("×", "+").split("+") if p.strip()]
    systems = []
    for part in parts:
        letter, digits = part[0].upper(), part[1:]
        if not digits.isdigit():
            raise ValueError(f"cannot parse root system type {part!r}")
        systems.append(build_root_system(letter, int(digits)))
    if not systems:
        raise ValueError("empty root system label")
    return systems[0] if len(systems) == 1 else product(*systems)


WEYL_RANK_CAP = 4
_weyl_lock = threading.Lock()
_weyl_cache: dict[tuple, list[tuple[int, ...]]] = {}


def _weyl_group(rs: RootSystem) -> list[tuple[int, ...]]:
    if rs.rank > WEYL_RANK_CAP:
        raise ValueError(f"Weyl group enumeration is limited to rank <= {WEYL_RANK_CAP}")
    key = rs.components
    with _weyl_lock:
        if key in _weyl_cache:
            return _weyl_cache[key]
        gens = [rs.reflection_perm(i) for i in range(rs.rank)]
        ident = tuple(range(len(rs.roots)))
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for w in frontier:
                for s in gens:
                    sw = tuple(s[w[k]] for k in range(len(w)))
                    if sw not in seen:
                        seen.add(sw)
                        nxt.append(sw)
            frontier = nxt
        out = sorted(seen)
        _weyl_cache[key] = out
        return out
