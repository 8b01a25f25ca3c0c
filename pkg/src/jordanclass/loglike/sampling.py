"""Random group elements with prescribed Jordan data."""

from __future__ import annotations

import random
from typing import Optional

from ..exactnum import ExactMatrix, JordanData, jordan_matrix
from ..exactnum.field import Field
from ..jclass import JordanClassDatum, enumerate_classes


def random_class(n: int, rng: random.Random, mode: str = "group") -> JordanClassDatum:
    return rng.choice(enumerate_classes(n, mode))


def random_eigenvalues(F: Field, slots, rng: random.Random, det_one: bool = False, tries: int = 1000) -> Optional[list]:
    """Distinct nonzero eigenvalues, one per slot, optionally with ``prod a^m = 1``."""
    k = len(slots)
    if F.p and F.p - 1 < k:
        return None
    for _ in range(tries):
        vals: list = []
        while len(vals) < k - (1 if det_one else 0):
            a = F.random(rng, nonzero=True)
            if a not in vals:
                vals.append(a)
        if not det_one:
            return vals
        prod = F.one
        for a, (m, _) in zip(vals, slots):
            prod = F.norm(prod * F.norm(a ** m))
        target = F.inv(prod)
        m_last = slots[-1][0]
        cands = [b for b in range(1, F.p) if F.norm(b ** m_last) == target and b not in vals] if F.p else []
        if cands:
            vals.append(rng.choice(cands))
            return vals
    return None


def element_with_data(F: Field, slots, eigs, rng: random.Random) -> tuple[ExactMatrix, JordanData]:
    blocks = tuple(sorted(((F(a), tuple(mu)) for a, (_, mu) in zip(eigs, slots)), key=lambda b: b[0]))
    jd = JordanData(F, blocks)
    h = ExactMatrix.random_invertible(F, jd.n, rng)
    return jordan_matrix(jd).conjugate_by(h), jd


def sample_element(
    F: Field, j: JordanClassDatum, rng: random.Random, det_one: bool = False
) -> Optional[tuple[ExactMatrix, JordanData]]:
    eigs = random_eigenvalues(F, j.slots, rng, det_one)
    if eigs is None:
        return None
    return element_with_data(F, j.slots, eigs, rng)
