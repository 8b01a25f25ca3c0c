"""Root systems, prime classification and centralizer subsystems."""

from .primes import PrimeVerdict, classify_prime
from .subsystems import (
    PseudoLevi,
    Subsystem,
    TorusElement,
    centralizer_subsystem,
    is_rationally_closed,
    levi_subsystem,
    pseudo_levis,
    rational_closure,
    subsystem_type,
)
from .system import RootSystem, build_root_system, parse_type, product

__all__ = [
    "PrimeVerdict", "classify_prime", "PseudoLevi", "Subsystem", "TorusElement",
    "centralizer_subsystem", "is_rationally_closed", "levi_subsystem", "pseudo_levis",
    "rational_closure", "subsystem_type", "RootSystem", "build_root_system", "parse_type", "product",
]
