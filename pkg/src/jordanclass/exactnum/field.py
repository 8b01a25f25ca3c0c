"""Prime fields and the rationals.

Elements are plain Python objects: ``int`` residues in ``[0, p)`` for
``GF(p)`` and :class:`fractions.Fraction` for ``QQ``.  Arithmetic is done
with the usual operators followed by :meth:`Field.norm`, which puts the
result back in canonical form.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Union

Elem = Union[int, Fraction]

_MAX_P = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """``GF(p)`` for a prime ``p``, or ``QQ`` when ``p == 0``."""

    __slots__ = ("p",)

    def __init__(self, p: int = 0):
        if p != 0 and (not is_prime(p) or p >= _MAX_P):
            raise ValueError(f"characteristic must be 0 or a prime < 2^31, got {p}")
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("Field is immutable")

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"

    @property
    def char(self) -> int:
        return self.p

    @property
    def is_finite(self) -> bool:
        return self.p != 0

    @property
    def zero(self) -> Elem:
        return 0 if self.p else Fraction(0)

    @property
    def one(self) -> Elem:
        return 1 if self.p else Fraction(1)

    def __call__(self, x) -> Elem:
        """Coerce an int, Fraction or string like ``"-3/4"`` into the field."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in {self!r}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def norm(self, x: Elem) -> Elem:
        return x % self.p if self.p else x

    def inv(self, a: Elem) -> Elem:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(a, -1, self.p)
        return 1 / a

    def div(self, a: Elem, b: Elem) -> Elem:
        if self.p:
            return a * pow(b, -1, self.p) % self.p
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def elements(self) -> Iterator[int]:
        if not self.p:
            raise ValueError("QQ is infinite")
        return iter(range(self.p))

    def random(self, rng: random.Random, nonzero: bool = False, bound: int = 10) -> Elem:
        """Uniform element of GF(p); over QQ a small random rational."""
        if self.p:
            return rng.randrange(1 if nonzero else 0, self.p)
        while True:
            x = Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
            if x or not nonzero:
                return x

    def fmt(self, a: Elem) -> str:
        return str(a)

    def to_int_pair(self, a: Elem) -> tuple[int, int]:
        if self.p:
            return int(a), 1
        return a.numerator, a.denominator


QQ = Field(0)


@lru_cache(maxsize=None)
def GF(p: int) -> Field:
    return Field(p)


def field_for(p: int) -> Field:
    return QQ if p == 0 else GF(p)
