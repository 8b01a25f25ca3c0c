"""Independent brute-force oracles used by the acceptance suite and the tests.

Each oracle reaches its answer by a different route from the library code
it checks: exhaustive enumeration, random sampling of matrices, or a
separate counting formula.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product
from math import lcm
from typing import Iterable, Sequence

import numpy as np

from .exactnum import QQ, ExactMatrix, Poly, field_for, poly_gcd
from .jclass import JordanClassDatum, dominates, partitions
from .jclass.partitions import conjugate
from .rootcore import RootSystem, Subsystem

# -- prime tables --------------------------------------------------------------

# bad and torsion primes of irreducible root systems, as usually tabulated
BAD_PRIMES = {"A": (), "B": (2,), "C": (2,), "D": (2,), "E6": (2, 3), "E7": (2, 3), "E8": (2, 3, 5), "F4": (2, 3), "G2": (2, 3)}
TORSION_PRIMES = {"A": (), "B": (2,), "B2": (), "C": (), "D": (2,), "E6": (2, 3), "E7": (2, 3), "E8": (2, 3, 5), "F4": (2, 3), "G2": (2,)}


def _lookup(table: dict, letter: str, rank: int):
    return table.get(f"{letter}{rank}", table.get(letter, ()))


def prime_table_row(letter: str, rank: int, p: int) -> dict:
    bad = p in _lookup(BAD_PRIMES, letter, rank)
    return {
        "good": not bad,
        "very_good": not bad and not (letter == "A" and (rank + 1) % p == 0),
        "torsion": p in _lookup(TORSION_PRIMES, letter, rank),
    }


# -- Weyl orbit base search -----------------------------------------------------


def closed_symmetric_subsystems(rs: RootSystem) -> list[Subsystem]:
    """All negation-closed, additively closed subsets, by enumerating subsets of positive roots."""
    N = rs.n_positive
    out = []
    for mask in range(1 << N):
        pos = [i for i in range(N) if mask >> i & 1]
        ss = Subsystem(rs, tuple(pos + [rs.neg(i) for i in pos]))
        if ss.is_closed():
            out.append(ss)
    return out


def weyl_base_search(ss: Subsystem) -> bool:
    """Some Weyl group element carries a base of ``ss`` into the simple roots."""
    rs = ss.parent
    base = ss.base()
    simple = set(rs.simple_indices)
    return any(all(w[b] in simple for b in base) for w in rs.weyl_group())


def realizable_by_grid(rs: RootSystem, max_den: int, p: int = 0) -> set[tuple[int, ...]]:
    """Member sets of ``Φ_s`` for simple-root angle vectors with denominators ``<= max_den`` prime to ``p``."""
    dens = [d for d in range(1, max_den + 1) if not p or d % p]
    angles = sorted({Fraction(k, d) for d in dens for k in range(d)})
    found = set()
    for vals in product(angles, repeat=rs.rank):
        members = tuple(
            i for i, r in enumerate(rs.roots) if sum(c * v for c, v in zip(r, vals)).denominator == 1
        )
        found.add(members)
    return found


# -- induction by sampling -----------------------------------------------------


def compositions(n: int) -> list[tuple[int, ...]]:
    if n == 0:
        return [()]
    return [(k,) + rest for k in range(1, n + 1) for rest in compositions(n - k)]


def _rank_mod(a: list[list[int]], p: int) -> int:
    a = [row[:] for row in a]
    r = 0
    n = len(a)
    for c in range(n):
        piv = next((i for i in range(r, n) if a[i][c] % p), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        for i in range(r + 1, n):
            f = a[i][c] * inv % p
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
    return r


def _matmul_mod(a, b, p):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) % p for j in range(n)] for i in range(n)]


def nilpotent_type_mod(a: list[list[int]], p: int) -> tuple[int, ...]:
    """Jordan type of a nilpotent matrix over GF(p) from ranks of its powers."""
    n = len(a)
    ranks = [n]
    power = a
    while ranks[-1] > 0:
        ranks.append(_rank_mod(power, p))
        if ranks[-1] == ranks[-2]:
            raise ValueError("matrix is not nilpotent")
        power = _matmul_mod(power, a, p)
    col = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    return conjugate(tuple(x for x in col if x))


def nilradical_sample(blocks: Sequence[int], parts: Sequence[Sequence[int]], rng: random.Random, p: int) -> list[list[int]]:
    """Block-diagonal nilpotent of the given types plus a random strictly block-upper part."""
    n = sum(blocks)
    a = [[0] * n for _ in range(n)]
    owner = []
    off = 0
    for b, (d, mu) in enumerate(zip(blocks, parts)):
        pos = off
        for k in mu:
            for i in range(k - 1):
                a[pos + i][pos + i + 1] = 1
            pos += k
        owner += [b] * d
        off += d
    for i in range(n):
        for j in range(n):
            if owner[i] < owner[j]:
                a[i][j] = rng.randrange(p)
    return a


def sampled_induction(blocks, parts, rng: random.Random, samples: int = 50, p: int = 101):
    """Dominance-maximal sampled type, plus whether the maximum is unique."""
    types = {nilpotent_type_mod(nilradical_sample(blocks, parts, rng, p), p) for _ in range(samples)}
    maxima = [t for t in types if all(dominates(t, s) for s in types)]
    return (maxima[0] if maxima else None), types


# -- brute-force grouping of gl_n(F_q) ------------------------------------------


def _all_matrices(n: int, q: int) -> np.ndarray:
    grid = np.indices((q,) * (n * n)).reshape(n * n, -1).T
    return grid.reshape(-1, n, n).astype(np.int64)


def _batched_rank(m: np.ndarray, q: int) -> np.ndarray:
    """Rank mod a prime of a stack of 2x2 or 3x3 matrices via minors."""
    n = m.shape[1]
    nonzero = (m % q != 0).reshape(len(m), -1).any(axis=1)
    if n == 2:
        det = (m[:, 0, 0] * m[:, 1, 1] - m[:, 0, 1] * m[:, 1, 0]) % q
        return np.where(det != 0, 2, np.where(nonzero, 1, 0))
    minors = []
    for r in ((0, 1), (0, 2), (1, 2)):
        for c in ((0, 1), (0, 2), (1, 2)):
            minors.append((m[:, r[0], c[0]] * m[:, r[1], c[1]] - m[:, r[0], c[1]] * m[:, r[1], c[0]]) % q)
    any_minor = np.any(np.stack(minors) != 0, axis=0)
    det = (
        m[:, 0, 0] * (m[:, 1, 1] * m[:, 2, 2] - m[:, 1, 2] * m[:, 2, 1])
        - m[:, 0, 1] * (m[:, 1, 0] * m[:, 2, 2] - m[:, 1, 2] * m[:, 2, 0])
        + m[:, 0, 2] * (m[:, 1, 0] * m[:, 2, 1] - m[:, 1, 1] * m[:, 2, 0])
    ) % q
    return np.where(det != 0, 3, np.where(any_minor, 2, np.where(nonzero, 1, 0)))


def class_keys_bruteforce(n: int, q: int, chunk: int = 1 << 18) -> dict[tuple, int]:
    """Count matrices of gl_n(F_q) by decomposition-class key.

    The key lists, for every eigenvalue in F_q, its multiplicity and Jordan
    type; eigenvalues outside F_q are simple when ``n <= 3`` and each
    contributes a slot ``(1, (1,))``.
    """
    if n not in (2, 3):
        raise ValueError("vectorized brute force covers n = 2, 3")
    counts: dict[tuple, int] = {}
    eye = np.eye(n, dtype=np.int64)
    allm = _all_matrices(n, q)
    for start in range(0, len(allm), chunk):
        m = allm[start : start + chunk]
        per_eig = []
        for a in range(q):
            shifted = (m - a * eye) % q
            ranks = [np.full(len(m), n)]
            power = shifted
            for _ in range(n):
                ranks.append(_batched_rank(power, q))
                power = np.matmul(power, shifted) % q
            per_eig.append(np.stack(ranks, axis=1))
        R = np.stack(per_eig, axis=1).reshape(len(m), -1)  # (batch, q * (n+1)) ranks
        # pack the rank profile into one integer per matrix (ranks are < 4)
        weights = 4 ** np.arange(R.shape[1], dtype=np.int64)
        codes = R.astype(np.int64) @ weights
        uniq, first, tally = np.unique(codes, return_index=True, return_counts=True)
        for i, c in zip(first, tally):
            key = _key_from_ranks(R[i].reshape(q, n + 1), n)
            counts[key] = counts.get(key, 0) + int(c)
    return counts


def _key_from_ranks(ranks: np.ndarray, n: int) -> tuple:
    slots = []
    for row in ranks:
        mult = n - int(row[-1])
        if mult == 0:
            continue
        col = [int(row[k - 1] - row[k]) for k in range(1, n + 1)]
        slots.append((mult, conjugate(tuple(x for x in col if x))))
    rest = n - sum(m for m, _ in slots)
    slots += [(1, (1,))] * rest
    return JordanClassDatum(tuple(slots), "liealg").slots


# -- point counts by a class-equation formula -----------------------------------


def _mobius(n: int) -> int:
    res, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            res = -res
        d += 1
    return -res if n > 1 else res


def irreducible_count(q, d: int, exclude_zero: bool = False):
    """Monic irreducible polynomials of degree ``d`` over F_q (a polynomial in ``q``)."""
    tot = sum(_mobius(e) * q ** (d // e) for e in range(1, d + 1) if d % e == 0)
    val = Fraction(tot, d)
    if exclude_zero and d == 1:
        val -= 1
    return val


def gl_order(n: int, q):
    out = Fraction(1)
    for i in range(n):
        out *= q ** n - q ** i
    return out


def nilpotent_centralizer_order(mu: Sequence[int], q):
    """``|C_{GL(q)}(u_mu)| = q^{sum mu'_i^2 - sum m_i^2} prod |GL_{m_i}(q)|``."""
    mults: dict[int, int] = {}
    for x in mu:
        mults[x] = mults.get(x, 0) + 1
    e = sum(x * x for x in conjugate(tuple(mu))) - sum(m * m for m in mults.values())
    out = Fraction(q) ** e
    for m in mults.values():
        out *= gl_order(m, q)
    return out


def _degree_splits(c: int):
    """Multisets of orbit degrees summing to ``c``, as dicts degree -> count."""
    for part in partitions(c):
        d: dict[int, int] = {}
        for x in part:
            d[x] = d.get(x, 0) + 1
        yield d


def class_point_count(j: JordanClassDatum, q, group: bool = False) -> Fraction:
    """Number of F_q-points of the class of ``j`` in gl_n (or GL_n with ``group``)."""
    types: dict = {}
    for s in j.slots:
        types[s] = types.get(s, 0) + 1
    tlist = list(types.items())
    total = Fraction(0)
    for choice in product(*[list(_degree_splits(c)) for _, c in tlist]):
        # how many irreducibles of each degree are used by each slot type
        used_by_degree: dict[int, list[int]] = {}
        for spl in choice:
            for d, k in spl.items():
                used_by_degree.setdefault(d, []).append(k)
        ways = Fraction(1)
        for d, ks in used_by_degree.items():
            avail = irreducible_count(q, d, exclude_zero=group)
            left = avail
            for k in ks:
                ways *= _falling(left, k) / _factorial(k)
                left -= k
        cent = Fraction(1)
        for ((m, mu), _), spl in zip(tlist, choice):
            for d, k in spl.items():
                cent *= nilpotent_centralizer_order(mu, Fraction(q) ** d) ** k
        total += ways * gl_order(j.n, q) / cent
    return total


def _falling(x, k: int):
    out = Fraction(1)
    for i in range(k):
        out *= x - i
    return out


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def interpolate(points: Sequence[tuple[int, Fraction]]) -> list[Fraction]:
    """Coefficients (low to high) of the Lagrange interpolant, trailing zeros trimmed."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for k, (xk, _) in enumerate(points):
            if k == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xk * basis[t + 1]
            denom *= xi - xk
        for t in range(len(basis)):
            coeffs[t] += yi * basis[t] / denom
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


# -- closure by limits over Q(t) -------------------------------------------------


def _nilpotent_type_qq(m: ExactMatrix) -> tuple[int, ...]:
    n = m.n
    ranks = [n]
    power = m
    while ranks[-1] > 0:
        ranks.append(power.rank())
        power = power @ m
    col = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    return conjugate(tuple(x for x in col if x))


def _all_assignments(src, tgt) -> Iterable[tuple[int, ...]]:
    caps = [m for m, _ in tgt]
    for phi in product(range(len(tgt)), repeat=len(src)):
        load = [0] * len(tgt)
        for i, a in enumerate(phi):
            load[a] += src[i][0]
        if load == caps:
            yield phi


def limit_family(groups: Sequence[Sequence[tuple[int, tuple[int, ...]]]], rng: random.Random):
    """Return ``x(t)`` as a function of rational ``t`` for a merge of slot groups.

    Target block ``a`` is ``b_a I + t D_a + u_a + X_a`` with ``D_a`` separating
    the merged slots, ``u_a`` their nilpotent parts and ``X_a`` a random
    strictly block-upper-triangular matrix.
    """
    blocks = []
    for a, group in enumerate(groups):
        size = sum(m for m, _ in group)
        diag = []
        u = [[0] * size for _ in range(size)]
        owner = []
        off = 0
        for s, (m, mu) in enumerate(group):
            diag += [s + 1] * m
            pos = off
            for k in mu:
                for i in range(k - 1):
                    u[pos + i][pos + i + 1] = 1
                pos += k
            owner += [s] * m
            off += m
        for i in range(size):
            for j in range(size):
                if owner[i] < owner[j]:
                    u[i][j] = rng.randint(-5, 5)
        blocks.append((10 * (a + 1), diag, u))

    def at(t: Fraction) -> ExactMatrix:
        mats = []
        for base, diag, u in blocks:
            size = len(diag)
            mats.append(
                ExactMatrix(QQ, [[(base + t * diag[i] if i == j else 0) + u[i][j] for j in range(size)] for i in range(size)])
            )
        return ExactMatrix.block_diag(QQ, mats)

    return at, [ExactMatrix(QQ, u) for _, _, u in blocks]


def closure_by_limits(j: JordanClassDatum, p: JordanClassDatum, rng: random.Random, draws: int = 2) -> bool:
    """Decide ``p ∈ closure(j)`` by building one-parameter families in ``j``.

    For every assignment of slots of ``j`` to slots of ``p`` with matching
    sizes, a family ``x(t)`` is built; at ``t = 1/7`` its pattern is checked to
    be ``j``, and at ``t = 0`` the Jordan type of each block is read off.
    ``p`` is in the closure when each target partition is dominated by
    the corresponding limit type (the closure of a nilpotent orbit of gl_m).
    """
    from .exactnum import jordan_data
    from .jclass import pattern_of

    src, tgt = j.slots, p.slots
    for phi in _all_assignments(src, tgt):
        groups = [[src[i] for i in range(len(src)) if phi[i] == a] for a in range(len(tgt))]
        if any(not g for g in groups):
            continue
        best = None
        for _ in range(draws):
            at, nil = limit_family(groups, rng)
            if pattern_of(jordan_data(at(Fraction(1, 7)))).slots != j.slots:
                raise AssertionError("limit family left the class")
            types = [_nilpotent_type_qq(x) for x in nil]
            if best is None or all(dominates(t, b) for t, b in zip(types, best)):
                best = types
        if all(dominates(b, nu) for b, (_, nu) in zip(best, tgt)):
            return True
    return False


# -- fibers of the trace shift ---------------------------------------------------


def roots_in_closure_count(f: Poly) -> int:
    """Distinct roots of ``f`` over the closure of GF(p), via ``gcd(f, t^{p^L} - t)``."""
    F = f.field
    L = 1
    for k in range(1, f.degree + 1):
        L = lcm(L, k)
    t = Poly.x(F)
    h = t % f
    for _ in range(L):
        h = h.pow_mod(F.p, f)
    return poly_gcd(f, h - t).degree


def random_trace_zero(n: int, p: int, rng: random.Random) -> ExactMatrix:
    F = field_for(p)
    rows = [[F.random(rng) for _ in range(n)] for _ in range(n)]
    rows[-1][-1] = F.norm(-sum(rows[i][i] for i in range(n - 1)))
    return ExactMatrix(F, rows)
