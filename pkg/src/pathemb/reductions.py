"""Hardness gadgets and the long-short / embedding interreduction.

The gadget B(G, P, X, s, t) lives on the grid G x P.  An embedding of P
into it that stays column-aligned walks through the rows of G, and may
change row only across the edges of P listed in X, so it traces a short
s-t path in G.  The selectors pick X so that every embedding is forced
to be column-aligned.
"""

from __future__ import annotations

from collections.abc import Callable, Hashable, Iterable, Sequence
from dataclasses import dataclass
from itertools import product
from typing import Optional

from .analysis import max_degree, per_edge_degrees
from .families import PATH_VOCABULARY, gen_family, point_names
from .solvers.paths import shortest_path
from .structures import (
    ROOT,
    Graph,
    RootedPathStructure,
    Structure,
    StructureError,
    as_rooted_path,
    validate,
)

__all__ = [
    "GadgetSpec",
    "build_B",
    "gadget_structure",
    "element",
    "select_X_case1",
    "select_X_case2",
    "reduce_ustcon",
    "family_supply",
    "stretch_path_witness",
    "make_P_kl",
    "reduce_longshort",
    "gen_family",
]


def element(g: Hashable, p: str) -> str:
    """Name of the grid element (g, p)."""
    return f"({g},{p})"


@dataclass(frozen=True)
class GadgetSpec:
    G: Graph
    P: RootedPathStructure
    X: tuple[int, ...]
    s: Hashable
    t: Hashable

    def __post_init__(self) -> None:
        X = tuple(self.X)
        object.__setattr__(self, "X", X)
        if any(not 1 <= i < self.P.k for i in X):
            raise StructureError(f"X must hold edge indices in 1..{self.P.k - 1}")
        if any(a >= b for a, b in zip(X, X[1:])):
            raise StructureError("X must be strictly increasing")
        for v in (self.s, self.t):
            if v not in self.G:
                raise StructureError(f"unknown vertex {v!r}")


def gadget_structure(
    P: RootedPathStructure,
    vertices: Sequence[Hashable],
    arcs: Iterable[tuple[Hashable, Hashable]],
    X: Sequence[int],
    s: Hashable,
    t: Hashable,
) -> Structure:
    """The grid structure over ``vertices`` x P for an arbitrary arc set.

    ``arcs`` are ordered: (g, g') allows a row change from g in column i
    to g' in column i + 1 across an edge e_i in X.  Undirected graphs pass
    both orientations.
    """
    arcs = set(arcs)
    X = set(X)
    first = min(X) if X else None
    k = P.k
    pos = {p: j for j, p in enumerate(P.enumeration, start=1)}

    def allowed(i: int, g: Hashable, g2: Hashable) -> bool:
        if i + 1 == k and g2 != t:
            return False
        if i == first and g != s:
            return False
        if i not in X:
            return g == g2
        return g == g2 or (g, g2) in arcs

    universe = [element(g, p) for g in vertices for p in P.enumeration]
    if len(set(universe)) != len(universe):
        raise StructureError("vertex names collide in the grid")
    rels: dict[str, set[tuple[str, ...]]] = {name: set() for name in P.vocabulary}
    rels[ROOT] = {(element(s, P.point(1)),)}
    for name in P.vocabulary:
        if name == ROOT:
            continue
        for tup in P.base.tuples(name):
            cols = sorted({pos[q] for q in tup})
            # a window (i, i+1) covering every component of the tuple
            windows = [cols[0]] if len(cols) == 2 else [cols[0] - 1, cols[0]]
            for i in windows:
                if not 1 <= i <= k - 1:
                    continue
                for g, g2 in product(vertices, repeat=2):
                    if allowed(i, g, g2):
                        rows = {i: g, i + 1: g2}
                        rels[name].add(tuple(element(rows[pos[q]], q) for q in tup))
    return validate(P.vocabulary, universe, rels)


def build_B(spec: GadgetSpec) -> Structure:
    """The gadget B(G, P, X, s, t) for an undirected graph G."""
    arcs = [(u, v) for e in spec.G.edges for u, v in (tuple(e), tuple(e)[::-1])]
    return gadget_structure(spec.P, spec.G.vertices, arcs, spec.X, spec.s, spec.t)


def select_X_case1(P: RootedPathStructure, ell: int) -> tuple[int, ...]:
    """The edges just before the first ``ell`` unfoldable edges."""
    unfoldable = [i for i, d in enumerate(per_edge_degrees(P), start=1) if d >= 1]
    if len(unfoldable) < ell:
        raise StructureError(f"needs {ell} unfoldable edges, found {len(unfoldable)}")
    return tuple(i - 1 for i in unfoldable[:ell])


def select_X_case2(P: RootedPathStructure, ell: int) -> tuple[int, ...]:
    """The ``ell`` edges preceding the first edge unfoldable of degree ``ell``."""
    if ell == 0:
        return ()
    for i in range(1, P.k):
        if max_degree(P, i) >= ell:
            return tuple(range(i - ell, i))
    raise StructureError(f"no edge is unfoldable of degree {ell}")


SELECTORS = {1: select_X_case1, 2: select_X_case2}


def family_supply(family: int, start: int = 3) -> Callable[[], Iterable[RootedPathStructure]]:
    """A supply of ever larger members of one of the example families."""

    def supply():
        size = start
        while True:
            yield gen_family(family, size)
            size += 1

    return supply


def reduce_ustcon(
    G: Graph,
    s: Hashable,
    t: Hashable,
    ell: int,
    supply: Callable[[], Iterable[RootedPathStructure]],
    case: int,
    *,
    scan_limit: int = 64,
) -> tuple[RootedPathStructure, Structure]:
    """Map a ustcon instance to an embedding instance with the same answer.

    The first structure from ``supply`` that admits the case's X-selection
    for ``ell`` is used.
    """
    if case not in SELECTORS:
        raise ValueError(f"case must be 1 or 2, got {case}")
    if ell < 0:
        raise ValueError("ell must be non-negative")
    select = SELECTORS[case]
    for n, P in enumerate(supply()):
        if n >= scan_limit:
            break
        try:
            X = select(P, ell)
        except StructureError:
            continue
        return P, build_B(GadgetSpec(G, P, X, s, t))
    raise StructureError(f"supply exhausted after {scan_limit} structures without a suitable P")


def stretch_path_witness(
    P: RootedPathStructure, X: Sequence[int], path: Sequence[Hashable]
) -> dict[str, str]:
    """Embedding of P into the gadget read off an s-t path with at most |X| edges.

    The path is padded with copies of t to length |X|; column j then sits
    in the row reached after crossing the X-edges that precede p_j.
    """
    if len(path) - 1 > len(X):
        raise ValueError("path is longer than X allows")
    rows = list(path) + [path[-1]] * (len(X) + 1 - len(path))
    crossed = 0
    witness = {}
    marks = set(X)
    for j, p in enumerate(P.enumeration, start=1):
        if j - 1 in marks:
            crossed += 1
        witness[p] = element(rows[crossed], p)
    return witness


def ustcon_witness(spec: GadgetSpec) -> Optional[dict[str, str]]:
    """Stretched embedding from a shortest s-t path, if one fits into |X| edges."""
    path = shortest_path(spec.G, spec.s, spec.t)
    if path is None or len(path) - 1 > len(spec.X):
        return None
    return stretch_path_witness(spec.P, spec.X, path)


def make_P_kl(k: int, ell: int) -> RootedPathStructure:
    """Symmetric path p_1..p_{ell+1} with the single directed edge (p_{k+1}, p_{k+2})."""
    if not 0 <= k < ell:
        raise ValueError(f"need 0 <= k < ell, got k={k}, ell={ell}")
    names = point_names(ell + 1)
    arcs = []
    for i in range(1, ell + 1):
        a, b = names[i - 1], names[i]
        arcs.append((a, b))
        if i != k + 1:
            arcs.append((b, a))
    return as_rooted_path(validate(PATH_VOCABULARY, names, {ROOT: [(names[0],)], "E": arcs}))


def reduce_longshort(
    G: Graph, s: Hashable, t: Hashable, k: int, ell: int
) -> tuple[RootedPathStructure, Structure]:
    """The instance (P_{k,ell}, G') with G' = G plus a pendant q-chain hung off t by an arc."""
    if not 0 <= k < ell:
        raise ValueError(f"need 0 <= k < ell, got k={k}, ell={ell}")
    for v in (s, t):
        if v not in G:
            raise StructureError(f"unknown vertex {v!r}")
    names = [str(v) for v in G.vertices]
    tail = [f"q{j}" for j in range(1, ell - k + 1)]
    if len(set(names) | set(tail)) != len(names) + len(tail):
        raise StructureError("vertex names collide with the q-chain")
    arcs = [(str(u), str(v)) for e in G.edges for u, v in (tuple(e), tuple(e)[::-1])]
    arcs.append((str(t), tail[0]))
    for a, b in zip(tail, tail[1:]):
        arcs += [(a, b), (b, a)]
    target = validate(PATH_VOCABULARY, names + tail, {ROOT: [(str(s),)], "E": arcs})
    return make_P_kl(k, ell), target


def longshort_witness(
    G: Graph, s: Hashable, t: Hashable, k: int, ell: int, path: Sequence[Hashable]
) -> dict[str, str]:
    """Embedding of P_{k,ell} into G' from a long path at s or an exact-k s-t path."""
    names = point_names(ell + 1)
    if len(path) - 1 >= ell and path[0] == s:
        return {p: str(v) for p, v in zip(names, path)}
    if len(path) - 1 == k and path[0] == s and path[-1] == t:
        images = [str(v) for v in path] + [f"q{j}" for j in range(1, ell - k + 1)]
        return dict(zip(names, images))
    raise ValueError("path is neither long from s nor an s-t path of length k")
