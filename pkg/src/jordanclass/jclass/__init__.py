"""Combinatorics of Jordan classes of GL_n and decomposition classes of gl_n."""

from .classes import (
    ClassPoset,
    LocalFamily,
    class_poset,
    closure_contains,
    dim_class,
    dim_orbit,
    enumerate_classes,
    induce,
    is_closure_normal_gl,
    is_sheet_datum,
    local_data,
    regular_closure_contains,
    sheets,
)
from .data import JordanClassDatum, LeviShape, PointPattern, parse_slots, pattern_of
from .partitions import conjugate, dominates, make_partition, partitions

__all__ = [
    "ClassPoset", "LocalFamily", "class_poset", "closure_contains", "dim_class", "dim_orbit",
    "enumerate_classes", "induce", "is_closure_normal_gl", "is_sheet_datum", "local_data",
    "regular_closure_contains", "sheets", "JordanClassDatum", "LeviShape", "PointPattern",
    "parse_slots", "pattern_of", "conjugate", "dominates", "make_partition", "partitions",
]
