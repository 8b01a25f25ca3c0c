"""Fibers of the trace-shift map on SL_n and its étale locus."""

from __future__ import annotations

from dataclasses import dataclass

from ..exactnum import ExactMatrix, Poly, distinct_root_count, field_for, resultant, roots
from ..exactnum.field import Elem


@dataclass(frozen=True)
class EtaleCertificate:
    x: ExactMatrix
    fiber_poly: Poly
    resultant_value: Elem
    in_locus: bool
    fiber_size: int

    def to_json(self) -> dict:
        return {
            "n": self.x.n,
            "p": self.x.field.p,
            "fiber_poly": str(self.fiber_poly),
            "resultant": str(self.resultant_value),
            "in_locus": self.in_locus,
            "fiber_size": self.fiber_size,
        }


def fiber_polynomial(x: ExactMatrix) -> Poly:
    """``det(x + tI) - 1``, whose roots ``t`` give the fiber ``{x + tI}``."""
    # det(tI - (-x)) is the characteristic polynomial of -x
    return (-x).char_poly() - 1


def etale_certificate(n: int, p: int, x: ExactMatrix) -> EtaleCertificate:
    F = field_for(p)
    if x.n != n or x.field != F:
        raise ValueError(f"expected a {n}x{n} matrix over {F!r}")
    if p and n % p == 0:
        raise ValueError(f"p={p} divides n={n}")
    if x.trace() != 0:
        raise ValueError("x must have trace zero")
    f = fiber_polynomial(x)
    R = resultant(f, f.derivative())
    size = distinct_root_count(f)
    cert = EtaleCertificate(x, f, R, R != 0, size)
    if cert.in_locus != (size == n):
        raise AssertionError("resultant and distinct-root count disagree")
    return cert


def fiber_points(x: ExactMatrix) -> list[ExactMatrix]:
    """Points ``x + tI`` of SL_n over the coefficient field mapping to ``x``."""
    return [x.shift(-t) for t in roots(fiber_polynomial(x))]
