"""Seeded random instances for the verification harness and the test suite.

Targets are biased toward yes-instances: with probability 1/2 a copy of
P is planted under a random injection before noise tuples are added.
"""

from __future__ import annotations

import random
from collections.abc import Sequence
from itertools import combinations

from .families import (
    BACKWARD,
    FORWARD,
    PATH_VOCABULARY,
    alternating,
    gen_family,
    path_from_orientations,
)
from .reductions import make_P_kl
from .structures import Graph, RootedPathStructure, Structure, validate

FAMILIES = ("1", "2", "3", "4", "Pkl")


def random_pattern(rng: random.Random, family: str, size: int) -> RootedPathStructure:
    """A member of ``family`` with ``size`` elements (P_{k,l} gets a random k)."""
    if family == "Pkl":
        ell = size - 1
        return make_P_kl(rng.randrange(ell), ell)
    return gen_family(int(family), size)


def random_tail_path(rng: random.Random, size: int, C: int) -> RootedPathStructure:
    """Rooted oriented path whose edges from index C on alternate.

    The first C - 1 edges are oriented at random; the alternation then
    continues from e_{C-1} (or starts at random when C = 1).
    """
    head = [rng.choice((FORWARD, BACKWARD)) for _ in range(min(C - 1, size - 1))]
    rest = size - 1 - len(head)
    if head:
        flip = BACKWARD if head[-1] == FORWARD else FORWARD
        tail = alternating(rest, flip)
    else:
        tail = alternating(rest, rng.choice((FORWARD, BACKWARD)))
    return path_from_orientations(head + tail)


def random_target(rng: random.Random, P: RootedPathStructure, n: int) -> Structure:
    """Target over P's vocabulary with universe b1..bn, planted with probability 1/2."""
    universe = [f"b{j}" for j in range(1, n + 1)]
    vocab = P.vocabulary
    rels: dict[str, set[tuple[str, ...]]] = {name: set() for name in vocab}
    if n >= P.k and rng.random() < 0.5:
        image = dict(zip(P.enumeration, rng.sample(universe, P.k)))
        for name, tuples in P.base.relations.items():
            rels[name].update(tuple(image[x] for x in tup) for tup in tuples)
    for name in vocab:
        arity = vocab.arity(name)
        for _ in range(rng.randint(0, n)):
            rels[name].add(tuple(rng.choice(universe) for _ in range(arity)))
    return validate(vocab, universe, rels)


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    """Erdos-Renyi graph on 0..n-1, edge probability 2/n by default."""
    p = 2 / n if p is None else p
    pairs = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_pairs(range(n), pairs)


def random_ac_instance(
    rng: random.Random, families: Sequence[str], max_k: int, max_n: int
) -> tuple[RootedPathStructure, Structure]:
    k = rng.randint(3, max_k)
    P = random_pattern(rng, rng.choice(list(families)), k)
    return P, random_target(rng, P, rng.randint(1, max_n))


def random_tail_instance(
    rng: random.Random, max_k: int, max_n: int, max_C: int = 3
) -> tuple[RootedPathStructure, Structure, int]:
    k = rng.randint(3, max_k)
    C = rng.randint(1, max_C)
    P = random_tail_path(rng, k, C)
    return P, random_target(rng, P, rng.randint(1, max_n)), C


__all__ = [
    "FAMILIES",
    "PATH_VOCABULARY",
    "random_ac_instance",
    "random_graph",
    "random_pattern",
    "random_tail_instance",
    "random_tail_path",
    "random_target",
]
