"""Colour-coding decision procedure for embedding rooted path structures.

:func:`algorithm_AC` decides whether a rooted path structure P embeds into
a structure B for classes with boundedly many unfoldable edges of bounded
degree.  It splits off a short prefix by exhaustive search when P starts
with an unfoldable stretch, and otherwise colours B with the hash family
of :mod:`.hashing` and reduces the search to connectivity and long-short
path queries on coloured graphs, recursing on the remainder of P.

Everything here is exact: whenever the colour-coding route is not
applicable (P too short for the constants, B too small for the hash
family to be perfect, too many colours) the solver falls back to
:func:`.brute.brute_force_embedding`.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from ..analysis import critical_edges, per_edge_degrees
from ..structures import (
    Graph,
    RootedPathStructure,
    Structure,
    StructureError,
    atomic_type,
    cut_down,
    cut_up,
    induced,
    with_root,
)
from .brute import brute_force_embedding, iter_maps
from .hashing import is_perfect, kernels
from .paths import LongShortInstance, exact_path, long_path_from, solve_longshort

Oracle = Callable[[LongShortInstance], bool]

DEFAULT_K_MAX = 4


@dataclass
class SolverTrace:
    """Bookkeeping filled in by the colour-coding solvers.

    ``accepts`` collects ``(P, B, witness)`` for every accepting run of a
    colour-coded loop, with P and B the (sub)instance that loop worked on.
    """

    calls: int = 0
    max_depth: int = 0
    brute_force_calls: int = 0
    split_calls: int = 0
    colour_coded_calls: int = 0
    first_loop_accepts: int = 0
    second_loop_accepts: int = 0
    oracle_queries: int = 0
    accepts: list[tuple[Structure, Structure, dict[str, str]]] = field(default_factory=list)


def colourings(n: int, colours: Sequence[int], multiplier: float = 1.0) -> Iterator[tuple[int, ...]]:
    """The distinct restrictions to [n] of g o h_{p,q}, as colour tuples.

    g ranges over all maps from the hash range {0..len(colours)**2 - 1}
    into ``colours``.
    """
    parts = kernels(n, len(colours) ** 2, multiplier)
    if any(max(lab) == n - 1 for lab in parts):
        yield from product(colours, repeat=n)
        return
    seen: set[tuple[int, ...]] = set()
    for lab in parts:
        for assignment in product(colours, repeat=max(lab) + 1):
            f = tuple(assignment[x] for x in lab)
            if f not in seen:
                seen.add(f)
                yield f


def color_graph_A(
    P: RootedPathStructure, B: Structure, f: Mapping[str, int], b1: str
) -> Graph:
    """The coloured graph G(f, b1) on B minus b1.

    (b, b') is an edge when f(b) + 1 = f(b'), atyp(e_2^{-f(b)}) is contained
    in atyp((b, b')), and, for f(b) = 2, b is an atyp(e_1)-successor of b1.
    """
    if b1 not in B:
        raise StructureError(f"unknown element {b1!r}")
    vertices = [b for b in B.universe if b != b1]
    first = P.edge_type(1)
    pairs = []
    for b in vertices:
        for b2 in vertices:
            if f[b] + 1 != f[b2]:
                continue
            if not P.edge_type(2, f[b]) <= atomic_type(B, (b, b2)):
                continue
            if f[b] == 2 and not first <= atomic_type(B, (b1, b)):
                continue
            pairs.append((b, b2))
    return Graph.from_pairs(vertices, pairs)


def split_point(P: RootedPathStructure, unfoldable: Sequence[int], d: int) -> Optional[int]:
    """Least a with 1 < a < k - d such that none of e_{a+1}..e_{a+d} is unfoldable."""
    bad = set(unfoldable)
    for a in range(2, P.k - d):
        if not any(a + j in bad for j in range(1, d + 1)):
            return a
    return None


def _check_prefix_types(P: RootedPathStructure, a: int) -> None:
    # atyp(e_{a+i}) is contained in atyp(e_a^{-i}) for every later edge
    for i in range(1, P.k - a):
        assert P.edge_type(a + i) <= P.edge_type(a, i), (a, i)


class ColourGraphs:
    """Index-based G(f, b1) for one (P, B), built fast for many f and b1.

    Vertices are positions in B's universe.  ``adjacency(f, b1)`` has the
    same edges as :func:`color_graph_A` with f given as a tuple of colours.
    """

    def __init__(self, P: RootedPathStructure, B: Structure):
        n, els = len(B), B.universe
        first, even, odd = P.edge_type(1), P.edge_type(2), P.edge_type(2, 1)
        # arcs[u] = [(v, parity)]: atyp(e_2^{-j}) fits (u, v) for colours j of that parity
        self.arcs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for u in range(n):
            for v in range(n):
                if u == v:
                    continue
                at = atomic_type(B, (els[u], els[v]))
                if even <= at:
                    self.arcs[u].append((v, 0))
                if odd <= at:
                    self.arcs[u].append((v, 1))
        self.succ = [
            frozenset(v for v in range(n) if v != u and first <= atomic_type(B, (els[u], els[v])))
            for u in range(n)
        ]
        self.n = n

    def adjacency(self, f: Sequence[int], b1: int) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {}
        for u in range(self.n):
            if u == b1:
                continue
            fu = f[u]
            if fu == 2 and u not in self.succ[b1]:
                continue
            for v, parity in self.arcs[u]:
                if v != b1 and f[v] == fu + 1 and parity == fu % 2:
                    adj.setdefault(u, []).append(v)
                    adj.setdefault(v, []).append(u)
        return adj


class _ACSolver:
    def __init__(self, oracle: Oracle, k_max: int, multiplier: float, trace: SolverTrace):
        self.oracle = oracle
        self.k_max = k_max
        self.multiplier = multiplier
        self.trace = trace
        self.memo: dict[tuple, Optional[dict[str, str]]] = {}

    def brute(self, P: RootedPathStructure, B: Structure) -> Optional[dict[str, str]]:
        self.trace.brute_force_calls += 1
        return brute_force_embedding(P.base, B)

    def run(self, P: RootedPathStructure, B: Structure, depth: int) -> Optional[dict[str, str]]:
        trace = self.trace
        trace.calls += 1
        trace.max_depth = max(trace.max_depth, depth)
        k, n = P.k, len(B)
        degrees = per_edge_degrees(P)
        unfoldable = [i for i, deg in enumerate(degrees, start=1) if deg >= 1]
        c, d = len(unfoldable), max(degrees, default=0)
        if k <= 2 + c * d + d or n <= k or not is_perfect(n, k - 1, self.multiplier):
            return self.brute(P, B)
        a = split_point(P, unfoldable, d)
        if a is None:
            return self.brute(P, B)
        if __debug__:
            _check_prefix_types(P, a)
        if a > 2:
            return self.split(P, B, a, depth)
        if k - 1 > self.k_max - 1:
            return self.brute(P, B)
        return self.colour_code(P, B, depth)

    def split(self, P: RootedPathStructure, B: Structure, a: int, depth: int):
        self.trace.split_calls += 1
        head, rest = cut_down(P, a), cut_up(P, a)
        for h in iter_maps(head.base, B):
            used = {h[P.point(j)] for j in range(1, a)}
            B_h = with_root(induced(B, [b for b in B.universe if b not in used]), h[P.point(a)])
            tail = self.run(rest, B_h, depth + 1)
            if tail is not None:
                return {**h, **tail}
        return None

    def colour_code(self, P: RootedPathStructure, B: Structure, depth: int):
        self.trace.colour_coded_calls += 1
        k, n = P.k, len(B)
        els = B.universe
        graphs = ColourGraphs(P, B)
        succ = graphs.succ
        adjacency = graphs.adjacency
        # a b1 without atyp(e_1)-successors isolates every colour-2 vertex,
        # so neither loop can accept on it
        roots = [u for u in range(n) if succ[u]]
        cols = list(colourings(n, range(2, k + 1), self.multiplier))

        # first loop: some colour-2 vertex connected to some colour-k vertex
        for b1 in roots:
            for f in cols:
                sources = [s for s in sorted(succ[b1]) if f[s] == 2]
                if not sources or k not in f:
                    continue
                adj = adjacency(f, b1)
                path = _reach(adj, sources, lambda v: f[v] == k)
                if path is not None:
                    witness = {P.point(1): els[b1]}
                    for j, v in enumerate(path[: k - 1], start=2):
                        witness[P.point(j)] = els[v]
                    self._record(P, B, witness)
                    self.trace.first_loop_accepts += 1
                    return witness

        # second loop: long-short queries, then recurse on P cut at i
        i = next((j for j in range(3, k - 1) if j + 1 in set(critical_edges(P))), k - 1)
        rest = cut_up(P, i)
        for b1 in roots:
            for f in cols:
                sources = [s for s in sorted(succ[b1]) if f[s] == 2]
                targets = [t for t in range(n) if t != b1 and f[t] == i]
                if not sources or not targets:
                    continue
                adj = adjacency(f, b1)
                G = Graph.from_pairs(
                    [els[v] for v in range(n) if v != b1],
                    [(els[u], els[v]) for u, vs in adj.items() for v in vs if u < v],
                )
                for s in sources:
                    for t in targets:
                        self.trace.oracle_queries += 1
                        if not self.oracle(LongShortInstance(G, els[s], els[t], i - 2, k - 2)):
                            continue
                        keep = [b for b in range(n) if b != b1 and i < f[b] <= k]
                        tail = self.recurse(rest, B, keep, t, depth)
                        if tail is None:
                            continue
                        witness = self._second_loop_witness(P, G, els[b1], els[s], els[t], i, tail)
                        self._record(P, B, witness)
                        self.trace.second_loop_accepts += 1
                        return witness
        return None

    def recurse(self, rest: RootedPathStructure, B: Structure, keep: list[int], t: int, depth: int):
        els = B.universe
        members = frozenset(keep) | {t}
        key = (rest, B, members, t)
        if key not in self.memo:
            B_sub = with_root(induced(B, [els[v] for v in sorted(members)]), els[t])
            self.memo[key] = self.run(rest, B_sub, depth + 1)
        return self.memo[key]

    def _second_loop_witness(self, P, G, b1, s, t, i, tail):
        k = P.k
        path = exact_path(G, s, t, i - 2)
        if path is None:
            # the oracle answered through its long branch: a path of length
            # k-2 from s already spells out an embedding
            path = long_path_from(G, s, k - 2)
            return {P.point(1): b1, **{P.point(j): v for j, v in enumerate(path, start=2)}}
        witness = {P.point(1): b1}
        witness.update({P.point(j): v for j, v in enumerate(path, start=2)})
        witness.update(tail)
        return witness

    def _record(self, P, B, witness) -> None:
        self.trace.accepts.append((P.base, B, witness))


def _reach(adj: dict[int, list[int]], sources: list[int], is_target) -> Optional[list[int]]:
    """Shortest path in ``adj`` from any source to a target vertex."""
    parent: dict[int, Optional[int]] = {}
    queue = deque()
    for s in sources:
        if s not in parent:
            parent[s] = None
            queue.append(s)
    while queue:
        u = queue.popleft()
        if is_target(u):
            path = [u]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path[::-1]
        for v in adj.get(u, ()):
            if v not in parent:
                parent[v] = u
                queue.append(v)
    return None


def embed_AC(
    P: RootedPathStructure,
    B: Structure,
    oracle: Oracle = solve_longshort,
    *,
    k_max: int = DEFAULT_K_MAX,
    multiplier: float = 1.0,
    trace: Optional[SolverTrace] = None,
) -> Optional[dict[str, str]]:
    """Like :func:`algorithm_AC` but returns the embedding found, or None."""
    if P.vocabulary != B.vocabulary:
        raise StructureError("vocabulary mismatch")
    solver = _ACSolver(oracle, k_max, multiplier, trace if trace is not None else SolverTrace())
    return solver.run(P, B, 0)


def algorithm_AC(
    P: RootedPathStructure,
    B: Structure,
    oracle: Oracle = solve_longshort,
    *,
    k_max: int = DEFAULT_K_MAX,
    multiplier: float = 1.0,
    trace: Optional[SolverTrace] = None,
) -> bool:
    """Decide whether P embeds into B, querying ``oracle`` for long-short instances."""
    return embed_AC(P, B, oracle, k_max=k_max, multiplier=multiplier, trace=trace) is not None
