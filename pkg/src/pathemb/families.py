"""Generators for the four example families of rooted path structures.

Every structure is over ``{root: 1, E: 2}`` with universe ``p1..pk`` and
root ``p1``.  An edge e_i = (p_i, p_{i+1}) is *forward* when
E(p_i, p_{i+1}) holds and *backward* when E(p_{i+1}, p_i) holds.

1. rooted alternating paths: forward, backward, forward, ...
2. the same with every edge subdivided: forward, forward, backward, backward, ...
3. an alternating path whose final edge repeats the orientation of the
   one before it
4. an undirected (symmetric) prefix followed by an alternating tail that
   starts forward; the k-1 edges split as ceil((k-1)/2) symmetric, rest
   alternating
"""

from __future__ import annotations

from collections.abc import Sequence

from .structures import ROOT, RootedPathStructure, StructureError, as_rooted_path, validate

PATH_VOCABULARY = {ROOT: 1, "E": 2}
FORWARD, BACKWARD, BOTH = "forward", "backward", "both"


def point_names(k: int) -> list[str]:
    return [f"p{i}" for i in range(1, k + 1)]


def path_from_orientations(orientations: Sequence[str]) -> RootedPathStructure:
    """Rooted path over {root, E} with one orientation per edge."""
    names = point_names(len(orientations) + 1)
    arcs = []
    for i, way in enumerate(orientations):
        a, b = names[i], names[i + 1]
        if way in (FORWARD, BOTH):
            arcs.append((a, b))
        if way in (BACKWARD, BOTH):
            arcs.append((b, a))
        if way not in (FORWARD, BACKWARD, BOTH):
            raise ValueError(f"unknown orientation {way!r}")
    struct = validate(PATH_VOCABULARY, names, {ROOT: [(names[0],)], "E": arcs})
    return as_rooted_path(struct)


def alternating(n_edges: int, first: str = FORWARD) -> list[str]:
    other = BACKWARD if first == FORWARD else FORWARD
    return [first if j % 2 == 0 else other for j in range(n_edges)]


def family_orientations(family: int, size: int) -> list[str]:
    if family not in (1, 2, 3, 4):
        raise ValueError(f"unknown family {family}")
    if size < 3:
        raise StructureError(f"family {family} needs at least 3 elements, got {size}")
    n = size - 1
    if family == 1:
        return alternating(n)
    if family == 2:
        return [FORWARD if (j // 2) % 2 == 0 else BACKWARD for j in range(n)]
    if family == 3:
        head = alternating(n - 1)
        return head + [head[-1]]
    sym = (n + 1) // 2
    return [BOTH] * sym + alternating(n - sym)


def gen_family(family: int, size: int) -> RootedPathStructure:
    """The pictured structure of ``family`` scaled to ``size`` elements."""
    return path_from_orientations(family_orientations(family, size))
