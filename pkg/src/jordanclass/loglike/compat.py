"""Compatibility of log-like maps with Jordan decompositions, classes and induction."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..exactnum import ExactMatrix, JordanData, is_semisimple, jordan_chevalley, jordan_data, multiplicative_jordan
from ..jclass import LeviShape, induce, pattern_of
from .etale import etale_certificate
from .maps import LogLikeMap, apply
from .sampling import random_class, sample_element

MAX_WITNESSES = 5


@dataclass
class BatchReport:
    claim: str
    paper_ref: str
    samples: int = 0
    failures: int = 0
    witnesses: list = field(default_factory=list)
    skipped: int = 0

    def record(self, ok: bool, witness=None):
        self.samples += 1
        if not ok:
            self.failures += 1
            if witness is not None and len(self.witnesses) < MAX_WITNESSES:
                self.witnesses.append(witness)

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.samples > 0

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "paper_ref": self.paper_ref,
            "samples": self.samples,
            "failures": self.failures,
            "witnesses": self.witnesses,
        }


@dataclass(frozen=True)
class JordanCompatReport:
    g: JordanData
    image: JordanData
    semisimple_matches: bool
    image_of_semisimple_is_semisimple: bool

    @property
    def ok(self) -> bool:
        return self.semisimple_matches and self.image_of_semisimple_is_semisimple

    def to_json(self) -> dict:
        return {
            "g": self.g.to_json(),
            "image": self.image.to_json(),
            "semisimple_matches": self.semisimple_matches,
            "image_of_semisimple_is_semisimple": self.image_of_semisimple_is_semisimple,
        }


def check_jordan_compat(lam: LogLikeMap, g: ExactMatrix) -> JordanCompatReport:
    """Compare the semisimple part of ``lam(g)`` with ``lam(s)`` where ``g = su``."""
    s, _ = multiplicative_jordan(g)
    x = apply(lam, g)
    xs, _ = jordan_chevalley(x)
    ls = apply(lam, s)
    return JordanCompatReport(jordan_data(g), jordan_data(x), xs == ls, is_semisimple(ls))


def _in_locus(lam: LogLikeMap, g: ExactMatrix) -> bool:
    if lam.kind == "SLTraceShift":
        return etale_certificate(lam.n, lam.p, apply(lam, g)).in_locus
    return True


def check_stratification(lam: LogLikeMap, g1: ExactMatrix, g2: ExactMatrix) -> bool:
    """Equal patterns of ``g1, g2`` force equal patterns of their images."""
    for g in (g1, g2):
        if not _in_locus(lam, g):
            raise ValueError("element outside the étale locus of the map")
    if pattern_of(jordan_data(g1)) != pattern_of(jordan_data(g2)):
        return True
    return pattern_of(jordan_data(apply(lam, g1))) == pattern_of(jordan_data(apply(lam, g2)))


def unipotent_image_type(lam: LogLikeMap, part) -> tuple[int, ...]:
    """Jordan type of ``lam(u)`` for a unipotent ``u`` of type ``part``."""
    F = lam.field
    u = ExactMatrix.block_diag(F, [ExactMatrix.jordan_block(F, 1, k) for k in part])
    blocks = jordan_data(apply(lam, u)).blocks
    if len(blocks) != 1 or blocks[0][0] != 0:
        raise AssertionError("image of a unipotent element is not nilpotent")
    return blocks[0][1]


def check_induction_compat(lam: LogLikeMap, ls: LeviShape) -> bool:
    """Inducing the unipotent data and inducing its image under ``lam`` agree."""
    if lam.kind != "GLShift":
        raise ValueError("induction compatibility is tabulated for GLShift")
    image = LeviShape(ls.blocks, tuple(unipotent_image_type(LogLikeMap("GLShift", d, lam.p), mu) for d, mu in zip(ls.blocks, ls.parts)))
    return induce(ls) == induce(image)


def _group_sample(lam: LogLikeMap, rng: random.Random, j=None):
    det_one = lam.kind == "SLTraceShift"
    j = j or random_class(lam.n, rng)
    return j, sample_element(lam.field, j, rng, det_one)


def batch_jordan_compat(lam: LogLikeMap, samples: int, seed: int, require_locus: bool = True) -> BatchReport:
    if lam.kind == "Sp4Cayley":
        raise ValueError("use the Sp4 report for the symplectic map")
    rep = BatchReport(
        "semisimple part of lambda(g) equals lambda(s)",
        "log-like maps send semisimple elements to semisimple elements and respect Jordan decompositions",
    )
    rng = random.Random(seed)
    while rep.samples < samples:
        j, got = _group_sample(lam, rng)
        if got is None:
            rep.skipped += 1
            continue
        g, jd = got
        if require_locus and not _in_locus(lam, g):
            rep.skipped += 1
            continue
        r = check_jordan_compat(lam, g)
        rep.record(r.ok and r.g == jd, {"class": j.to_json(), "g": jd.to_json()})
    return rep


def batch_stratification(lam: LogLikeMap, samples: int, seed: int) -> BatchReport:
    if lam.kind == "Sp4Cayley":
        raise ValueError("use the Sp4 report for the symplectic map")
    rep = BatchReport(
        "same-class pairs map to same-pattern images",
        "log-like maps send Jordan classes into decomposition classes on the étale locus",
    )
    rng = random.Random(seed)
    while rep.samples < samples:
        j = random_class(lam.n, rng)
        pair = []
        for _ in range(2):
            _, got = _group_sample(lam, rng, j)
            if got is None or not _in_locus(lam, got[0]):
                break
            pair.append(got)
        if len(pair) < 2:
            rep.skipped += 1
            continue
        (g1, d1), (g2, d2) = pair
        ok = check_stratification(lam, g1, g2) and pattern_of(d1) == pattern_of(d2)
        rep.record(ok, {"class": j.to_json(), "g1": d1.to_json(), "g2": d2.to_json()})
    return rep
