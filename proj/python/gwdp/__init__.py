"""Exact genus-0/1 Gromov-Witten invariants of del-Pezzo surfaces.

The heavy lifting lives in the compiled extension; this package re-exports
it and adds a couple of conveniences. Invariants are exact arbitrary-
precision integers (Python ints); t_terms returns fractions.Fraction.

>>> import gwdp
>>> gwdp.Engine("Bl1").n1("5L-2E1")
13775
"""

from ._gwdp import (
    DomainError,
    Engine,
    EngineError,
    Surface,
    decompositions2,
    format_class,
    is_candidate,
    parse_class,
    verify,
)

__all__ = [
    "DomainError",
    "Engine",
    "EngineError",
    "Surface",
    "decompositions2",
    "format_class",
    "is_candidate",
    "parse_class",
    "verify",
    "n0",
    "n1",
]

__version__ = "1.0.0"


def n0(surface, beta):
    """Genus-0 invariant of ``beta`` on ``surface`` (name or Surface)."""
    name = surface if isinstance(surface, str) else surface.name
    return Engine(name).n0(beta)


def n1(surface, beta):
    """Genus-1 invariant of ``beta`` on ``surface`` (name or Surface)."""
    name = surface if isinstance(surface, str) else surface.name
    return Engine(name).n1(beta)
