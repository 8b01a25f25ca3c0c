"""Three concrete log-like maps from matrix groups to their Lie algebras."""

from __future__ import annotations

from dataclasses import dataclass

from ..exactnum import ExactMatrix, field_for, symplectic_form
from ..exactnum.field import Field

KINDS = ("GLShift", "SLTraceShift", "Sp4Cayley")
_ALIASES = {"gl": "GLShift", "sl": "SLTraceShift", "sp4": "Sp4Cayley", "sp": "Sp4Cayley"}


@dataclass(frozen=True)
class LogLikeMap:
    """``GLShift: g -> g - I``; ``SLTraceShift: g -> g - (tr g / n) I``; ``Sp4Cayley: g -> (g - g^-1)/2``."""

    kind: str
    n: int
    p: int = 0

    def __post_init__(self):
        kind = _ALIASES.get(self.kind, self.kind)
        if kind not in KINDS:
            raise ValueError(f"unknown log-like map {self.kind!r}; expected one of {KINDS}")
        object.__setattr__(self, "kind", kind)
        field_for(self.p)
        if self.n < 1:
            raise ValueError("n must be positive")
        if kind == "SLTraceShift" and self.p and self.n % self.p == 0:
            raise ValueError(f"the trace shift needs p not dividing n (n={self.n}, p={self.p})")
        if kind == "Sp4Cayley":
            if self.n != 4:
                raise ValueError("Sp4Cayley is defined for n = 4 only")
            if self.p == 2:
                raise ValueError("Sp4Cayley needs p != 2")

    @property
    def field(self) -> Field:
        return field_for(self.p)

    @property
    def ambient(self) -> str:
        return {"GLShift": "gl", "SLTraceShift": "sl", "Sp4Cayley": "sp"}[self.kind]

    def in_group(self, g: ExactMatrix) -> bool:
        if g.n != self.n or g.field != self.field:
            return False
        if self.kind == "GLShift":
            return g.det() != 0
        if self.kind == "SLTraceShift":
            return g.det() == 1
        J = symplectic_form(self.field, 4)
        return g.T @ J @ g == J

    def in_algebra(self, x: ExactMatrix) -> bool:
        if x.n != self.n or x.field != self.field:
            return False
        if self.kind == "GLShift":
            return True
        if self.kind == "SLTraceShift":
            return x.trace() == 0
        J = symplectic_form(self.field, 4)
        return (x.T @ J + J @ x).is_zero()

    def in_image_locus(self, x: ExactMatrix) -> bool:
        """For GLShift, the image ``{x : det(x + I) != 0}``."""
        if self.kind != "GLShift":
            raise ValueError("image locus is only tabulated for GLShift")
        return x.shift(-1).det() != 0


def apply(lam: LogLikeMap, g: ExactMatrix) -> ExactMatrix:
    if not lam.in_group(g):
        raise ValueError(f"matrix is not in the group of the {lam.kind} map (n={lam.n}, p={lam.p})")
    F = lam.field
    if lam.kind == "GLShift":
        return g.shift(1)
    if lam.kind == "SLTraceShift":
        return g.shift(F.div(g.trace(), F(lam.n)))
    return (g - g.inverse()).scale(F.inv(F(2)))


def gl_shift_inverse(x: ExactMatrix) -> ExactMatrix:
    """``x + I``; inverse of GLShift on its image."""
    return x.shift(-1)
