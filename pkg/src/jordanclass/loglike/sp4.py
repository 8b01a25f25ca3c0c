"""The symplectic group Sp_4 and its isolated involution."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..exactnum import ExactMatrix, field_for, matrix_centralizer_dim
from ..exactnum.field import Field
from ..rootcore import (
    RootSystem,
    Subsystem,
    TorusElement,
    build_root_system,
    centralizer_subsystem,
    is_rationally_closed,
    rational_closure,
)
from .maps import LogLikeMap, apply


def c2() -> RootSystem:
    return build_root_system("C", 2)


def root_matrix(F: Field, rs: RootSystem, i: int) -> ExactMatrix:
    """Root vector of ``sp_4`` for root ``i`` of C2 (form ``J = [[0, I], [-I, 0]]``)."""
    v = [int(x) for x in rs.eps_vector(i)]
    E = lambda a, b: ExactMatrix.unit(F, 4, a, b)
    nz = [k for k in range(2) if v[k]]
    if len(nz) == 2 and v[0] == -v[1]:
        a, b = (0, 1) if v[0] > 0 else (1, 0)
        return E(a, b) - E(b + 2, a + 2)
    if len(nz) == 2:
        if v[0] > 0:
            return E(0, 3) + E(1, 2)
        return E(3, 0) + E(2, 1)
    k = nz[0]
    return E(k, k + 2) if v[k] > 0 else E(k + 2, k)


def torus(F: Field, a, b) -> ExactMatrix:
    return ExactMatrix.diag(F, [a, b, F.inv(F(a)), F.inv(F(b))])


def random_sp4(F: Field, rng: random.Random, steps: int = 8) -> ExactMatrix:
    """Product of root-group elements ``I + t E_alpha`` and a random torus element."""
    rs = c2()
    g = torus(F, F.random(rng, nonzero=True), F.random(rng, nonzero=True))
    I = ExactMatrix.identity(F, 4)
    for _ in range(steps):
        i = rng.randrange(len(rs.roots))
        g = g @ (I + root_matrix(F, rs, i).scale(F.random(rng)))
    return g


def lambda_subsystem(x: ExactMatrix) -> Subsystem:
    """Roots whose root vectors commute with ``x``."""
    rs = c2()
    F = x.field
    keep = []
    for i in range(len(rs.roots)):
        E = root_matrix(F, rs, i)
        if (x @ E - E @ x).is_zero():
            keep.append(i)
    return Subsystem(rs, tuple(keep))


def primitive_root(p: int) -> int:
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in _prime_factors(p - 1)):
            return g
    return 1


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def torus_from_angles(p: int, theta: Sequence[Fraction]) -> ExactMatrix:
    """``diag(a, b, 1/a, 1/b)`` with ``a = g^{(p-1) theta_1}``; denominators must divide ``p - 1``."""
    F = field_for(p)
    g = primitive_root(p)
    vals = []
    for t in theta:
        t = Fraction(t)
        if ((p - 1) * t).denominator != 1:
            raise ValueError(f"angle {t} is not realizable in GF({p})")
        vals.append(pow(g, int((p - 1) * t) % (p - 1), p))
    return torus(F, *vals)


@dataclass(frozen=True)
class MinimalLeviVerdict:
    centralizer: Subsystem
    closure: Subsystem
    lambda_image: Subsystem

    @property
    def agrees(self) -> bool:
        return self.lambda_image.members == self.closure.members

    def to_json(self) -> dict:
        return {
            "centralizer": {"members": list(self.centralizer.members), "type": self.centralizer.type_label()},
            "rational_closure": {"members": list(self.closure.members), "type": self.closure.type_label()},
            "lambda_image": {"members": list(self.lambda_image.members), "type": self.lambda_image.type_label()},
            "agrees": self.agrees,
        }


def minimal_levi_probe(rs: RootSystem, s: TorusElement, lambda_image_subsystem: Subsystem) -> MinimalLeviVerdict:
    """Compare the supplied image subsystem with the smallest Levi subsystem containing ``Φ_s``."""
    if s.mode != "multiplicative":
        raise ValueError("the probe takes a multiplicative torus element")
    phi_s = centralizer_subsystem(rs, s)
    return MinimalLeviVerdict(phi_s, rational_closure(phi_s), lambda_image_subsystem)


@dataclass
class ProbeTable:
    p_values: tuple[int, ...]
    max_den: int
    rows: list  # (p, theta, verdict)

    @property
    def agreeing(self) -> int:
        return sum(1 for _, _, v in self.rows if v.agrees)

    def to_json(self) -> dict:
        return {
            "p_values": list(self.p_values),
            "max_denominator": self.max_den,
            "samples": len(self.rows),
            "agreeing": self.agreeing,
            "disagreeing": len(self.rows) - self.agreeing,
            "witnesses": [
                {"p": p, "theta": [str(t) for t in th], **v.to_json()} for p, th, v in self.rows if not v.agrees
            ][:10],
        }


def probe_grid(p_values: Sequence[int] = (3, 5, 7), max_den: int = 12) -> ProbeTable:
    """Every Sp_4 torus angle pair with denominator ``<= max_den`` realizable over ``GF(p)``."""
    rs = c2()
    rows = []
    for p in p_values:
        dens = [d for d in range(1, max_den + 1) if (p - 1) % d == 0]
        angles = sorted({Fraction(k, d) for d in dens for k in range(d)})
        for t1 in angles:
            for t2 in angles:
                s_mat = torus_from_angles(p, (t1, t2))
                lam = LogLikeMap("Sp4Cayley", 4, p)
                img = lambda_subsystem(apply(lam, s_mat))
                s = TorusElement.multiplicative((t1, t2), p, basis="epsilon")
                rows.append((p, (t1, t2), minimal_levi_probe(rs, s, img)))
    return ProbeTable(tuple(p_values), max_den, rows)


@dataclass(frozen=True)
class Sp4Report:
    p: int
    lambda_s_is_zero: bool
    centralizer_dim: int
    orbit_dim: int
    image_orbit_dim: int
    phi_s_type: str
    phi_s_rationally_closed: bool
    closure_type: str
    closure_is_whole: bool
    probe_agrees: bool
    matrix_phi_s_agrees: bool

    @property
    def ok(self) -> bool:
        return (
            self.lambda_s_is_zero
            and self.orbit_dim == 4
            and self.image_orbit_dim == 0
            and not self.phi_s_rationally_closed
            and self.closure_is_whole
            and self.probe_agrees
            and self.matrix_phi_s_agrees
        )

    def to_json(self) -> dict:
        d = dict(self.__dict__)
        d["ok"] = self.ok
        return d


def sp4_isolated_report(p: int = 7) -> Sp4Report:
    """Facts about ``s = diag(1, -1, 1, -1)`` in Sp_4."""
    if p == 2:
        raise ValueError("p must not be 2")
    F = field_for(p)
    rs = c2()
    lam = LogLikeMap("Sp4Cayley", 4, p)
    s_mat = ExactMatrix.diag(F, [1, -1, 1, -1])
    x = apply(lam, s_mat)
    cdim = matrix_centralizer_dim(s_mat, "sp")
    image_cdim = matrix_centralizer_dim(x, "sp")
    s = TorusElement.multiplicative((0, Fraction(1, 2)), p, basis="epsilon")
    phi_s = centralizer_subsystem(rs, s)
    closure = rational_closure(phi_s)
    # Φ_s read off the matrix: root vectors fixed by conjugation
    fixed = tuple(
        i for i in range(len(rs.roots)) if s_mat @ root_matrix(F, rs, i) == root_matrix(F, rs, i) @ s_mat
    )
    verdict = minimal_levi_probe(rs, s, lambda_subsystem(x))
    return Sp4Report(
        p=p,
        lambda_s_is_zero=x.is_zero(),
        centralizer_dim=cdim,
        orbit_dim=10 - cdim,
        image_orbit_dim=10 - image_cdim,
        phi_s_type=phi_s.type_label(),
        phi_s_rationally_closed=is_rationally_closed(phi_s),
        closure_type=closure.type_label(),
        closure_is_whole=len(closure) == len(rs.roots),
        probe_agrees=verdict.agrees,
        matrix_phi_s_agrees=fixed == phi_s.members,
    )


def torus_formula_check(p: int, a, b) -> bool:
    """``lambda(diag(a, b, 1/a, 1/b)) = diag(a - 1/a, b - 1/b, 1/a - a, 1/b - b) / 2``."""
    F = field_for(p)
    a, b = F(a), F(b)
    ia, ib = F.inv(a), F.inv(b)
    half = F.inv(F(2))
    expected = ExactMatrix.diag(F, [F.norm(half * (a - ia)), F.norm(half * (b - ib)), F.norm(half * (ia - a)), F.norm(half * (ib - b))])
    return apply(LogLikeMap("Sp4Cayley", 4, p), torus(F, a, b)) == expected

