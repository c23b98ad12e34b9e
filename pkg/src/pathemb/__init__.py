"""Embedding rooted path structures: analysis, deciders and reductions."""

from .analysis import analyze, classify
from .families import gen_family
from .structures import (
    AtomicType,
    Graph,
    RootedPathStructure,
    Structure,
    StructureError,
    Vocabulary,
    as_rooted_path,
    atomic_type,
    gaifman,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "AtomicType",
    "Graph",
    "RootedPathStructure",
    "Structure",
    "StructureError",
    "Vocabulary",
    "analyze",
    "as_rooted_path",
    "atomic_type",
    "classify",
    "gaifman",
    "gen_family",
    "validate",
]
