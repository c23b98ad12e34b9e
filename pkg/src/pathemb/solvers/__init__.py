"""Embedding deciders, path problems and the colour-coding hash family."""

from .brute import brute_force_embedding, brute_force_homomorphism, is_embedding, is_homomorphism
from .colour_coding import SolverTrace, algorithm_AC, color_graph_A, embed_AC
from .hashing import HashAssignment, enumerate_hashes, find_injective
from .paths import LongShortInstance, connected, solve_longshort, solve_ustcon
from .tails import algorithm_B, color_graph_tail, embed_B

__all__ = [
    "HashAssignment",
    "LongShortInstance",
    "SolverTrace",
    "algorithm_AC",
    "algorithm_B",
    "brute_force_embedding",
    "brute_force_homomorphism",
    "color_graph_A",
    "color_graph_tail",
    "connected",
    "embed_AC",
    "embed_B",
    "enumerate_hashes",
    "find_injective",
    "is_embedding",
    "is_homomorphism",
    "solve_longshort",
    "solve_ustcon",
]
