"""Integer partitions as weakly decreasing tuples."""

from __future__ import annotations

from functools import lru_cache
from itertools import accumulate, zip_longest
from typing import Iterable, Sequence

Partition = tuple[int, ...]


def make_partition(parts: Iterable[int]) -> Partition:
    ps = [int(x) for x in parts]
    if any(x <= 0 for x in ps):
        raise ValueError(f"partition parts must be positive: {ps}")
    return tuple(sorted(ps, reverse=True))


def is_partition(parts: Sequence[int]) -> bool:
    return all(x > 0 for x in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    if n == 0:
        return ((),)

    def gen(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for k in range(min(rest, cap), 0, -1):
            for tail in gen(rest - k, k):
                yield (k,) + tail

    return tuple(gen(n, n))


def conjugate(part: Sequence[int]) -> Partition:
    if not part:
        return ()
    return tuple(sum(1 for x in part if x > j) for j in range(part[0]))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``lam ⊵ mu`` for partitions of the same size."""
    if sum(lam) != sum(mu):
        raise ValueError("dominance compares partitions of equal size")
    a = list(accumulate(lam))
    b = list(accumulate(mu))
    return all(x >= y for x, y in zip_longest(a, b, fillvalue=sum(lam)))


def componentwise_sum(parts: Iterable[Sequence[int]]) -> Partition:
    out: list[int] = []
    for p in parts:
        for j, x in enumerate(p):
            if j < len(out):
                out[j] += x
            else:
                out.append(x)
    return tuple(out)


def sum_of_squares_of_conjugate(part: Sequence[int]) -> int:
    return sum(x * x for x in conjugate(part))


def fmt_partition(part: Sequence[int]) -> str:
    return "(" + ",".join(map(str, part)) + ")"
