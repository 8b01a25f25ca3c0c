"""Univariate polynomials over a prime field or QQ.

Coefficients are stored lowest degree first with no trailing zeros, so the
zero polynomial is the empty tuple.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd as igcd, lcm
from typing import Iterable

from . import linalg
from .field import Elem, Field


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        cs = [field(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs: tuple[Elem, ...] = tuple(cs)

    @classmethod
    def x(cls, field: Field) -> Poly:
        return cls(field, [0, 1])

    @classmethod
    def const(cls, field: Field, c) -> Poly:
        return cls(field, [c])

    @classmethod
    def from_roots(cls, field: Field, roots: Iterable) -> Poly:
        f = cls.const(field, 1)
        for r in roots:
            f = f * cls(field, [-field(r), 1])
        return f

    def __repr__(self):
        return f"Poly({self.field!r}, {str(self)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono:
                terms.append(f"{c}*{mono}")
            else:
                terms.append(str(c))
        return " + ".join(terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(self.field, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Elem:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.field != self.field:
                raise ValueError("polynomials over different fields")
            return other
        return Poly.const(self.field, other)

    def __add__(self, other):
        other = self._coerce(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(F, [F.norm(x + (b[i] if i < len(b) else 0)) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Poly(F, [F.norm(-c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly(F, [F.norm(c) for c in out])

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Poly.const(self.field, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        d = other.degree
        inv_lc = F.inv(other.lc)
        q = [F.zero] * max(len(rem) - d, 0)
        for k in range(len(rem) - 1 - d, -1, -1):
            c = F.norm(rem[k + d] * inv_lc)
            q[k] = c
            if c:
                for i, y in enumerate(other.coeffs):
                    rem[k + i] = F.norm(rem[k + i] - c * y)
        return Poly(F, q), Poly(F, rem[:d] if d > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x: Elem) -> Elem:
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.norm(acc * x + c)
        return acc

    def derivative(self) -> Poly:
        F = self.field
        return Poly(F, [F.norm(k * c) for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> Poly:
        if not self:
            return self
        F = self.field
        inv = F.inv(self.lc)
        return Poly(F, [F.norm(c * inv) for c in self.coeffs])

    def pow_mod(self, k: int, modulus: Poly) -> Poly:
        result = Poly.const(self.field, 1) % modulus
        base = self % modulus
        while k:
            if k & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            k >>= 1
        return result


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd (zero if both inputs are zero)."""
    while g:
        f, g = g, f % g
    return f.monic()


def sylvester_matrix(f: Poly, g: Poly) -> list[list[Elem]]:
    m, n = f.degree, g.degree
    F = f.field
    size = m + n
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([F.zero] * i + fc + [F.zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([F.zero] * i + gc + [F.zero] * (size - n - 1 - i))
    return rows


def resultant(f: Poly, g: Poly) -> Elem:
    """Determinant of the Sylvester matrix of ``f`` and ``g``.

    Rows of ``f`` come first, so ``Res(t - a, t - b) = a - b``.  Degenerate
    degrees: ``Res(c, g) = c^deg(g)`` for a nonzero constant ``c``, and a
    zero argument gives 0 unless the other one is a nonzero constant, in
    which case the (empty) Sylvester determinant is 1.
    """
    F = f.field
    if not f and not g:
        raise ValueError("resultant of two zero polynomials")
    if not f or not g:
        other = g if not f else f
        return F.one if other.degree == 0 else F.zero
    if f.degree == 0:
        return F.norm(f.lc ** g.degree) if g.degree else F.one
    if g.degree == 0:
        return F.norm(g.lc ** f.degree)
    return linalg.det(sylvester_matrix(f, g), F)


def pth_root(f: Poly) -> Poly:
    """For ``f`` with ``f' = 0`` over GF(p), the ``h`` with ``h^p = f``."""
    p = f.field.p
    return Poly(f.field, f.coeffs[::p])


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Pairs ``(g_i, i)`` with ``f = lc * prod g_i^i`` and ``g_i`` squarefree, coprime."""
    F = f.field
    if f.degree < 1:
        return []
    f = f.monic()
    out: dict[int, Poly] = {}

    def add(g: Poly, k: int):
        if g.degree > 0:
            out[k] = out[k] * g if k in out else g

    d = f.derivative()
    if not d:
        for g, k in squarefree_decomposition(pth_root(f)):
            add(g, k * F.p)
        return [(g, k) for k, g in sorted(out.items())]
    c = poly_gcd(f, d)
    w = f // c
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        add((w // y).monic(), i)
        i += 1
        w = y
        c = c // y
    if c.degree > 0:
        # only factors with multiplicity divisible by p remain
        for g, k in squarefree_decomposition(pth_root(c.monic())):
            add(g, k * F.p)
    return [(g, k) for k, g in sorted(out.items())]


def distinct_root_count(f: Poly) -> int:
    """Number of distinct roots of ``f`` in an algebraic closure."""
    if not f:
        raise ValueError("zero polynomial has infinitely many roots")
    return sum(g.degree for g, _ in squarefree_decomposition(f))


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rational_roots(f: Poly) -> list[Fraction]:
    den = 1
    for c in f.coeffs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    g = 0
    for c in ints:
        g = igcd(g, c)
    ints = [c // g for c in ints]
    roots = []
    if ints[0] == 0:
        roots.append(Fraction(0))
        k = next(i for i, c in enumerate(ints) if c)
        ints = ints[k:]
    if len(ints) == 1:
        return roots
    h = Poly(f.field, [Fraction(c) for c in ints])
    for a in _divisors(ints[0]):
        for b in _divisors(ints[-1]):
            for r in (Fraction(a, b), Fraction(-a, b)):
                if r not in roots and h(r) == 0:
                    roots.append(r)
    return roots


def _split_linear(h: Poly, rng: random.Random) -> list[int]:
    """Roots of a squarefree product of distinct linear factors over GF(p)."""
    F = h.field
    p = F.p
    if h.degree == 0:
        return []
    if h.degree == 1:
        return [F.norm(-h.coeffs[0] * F.inv(h.coeffs[1]))]
    while True:
        a = rng.randrange(p)
        t = Poly(F, [a, 1])
        s = t.pow_mod((p - 1) // 2, h) - 1
        g = poly_gcd(h, s)
        if 0 < g.degree < h.degree:
            return _split_linear(g, rng) + _split_linear(h // g, rng)


EXHAUSTIVE_ROOT_LIMIT = 10**5


def roots(f: Poly) -> dict[Elem, int]:
    """Roots lying in the coefficient field, with multiplicities."""
    F = f.field
    if not f:
        raise ValueError("zero polynomial")
    if F.p == 0:
        cands = _rational_roots(f)
    elif F.p <= EXHAUSTIVE_ROOT_LIMIT:
        cands = [a for a in range(F.p) if f(a) == 0]
    else:
        x = Poly.x(F)
        g = poly_gcd(f, x.pow_mod(F.p, f) - x)
        cands = _split_linear(g, random.Random(F.p)) if F.p > 2 else [a for a in (0, 1) if g(a) == 0]
    out = {}
    for r in sorted(cands):
        lin = Poly(F, [F.norm(-r), 1])
        k = 0
        h = f
        while True:
            q, rem = divmod(h, lin)
            if rem:
                break
            h = q
            k += 1
        out[r] = k
    return out
