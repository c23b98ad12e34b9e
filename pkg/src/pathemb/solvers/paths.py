"""Connectivity, short s-t paths (ustcon) and the long-short path problem."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Optional

from ..structures import Graph, StructureError


@dataclass(frozen=True)
class LongShortInstance:
    graph: Graph
    s: Hashable
    t: Hashable
    k: int
    ell: int

    def __post_init__(self) -> None:
        for v in (self.s, self.t):
            if v not in self.graph:
                raise StructureError(f"unknown vertex {v!r}")
        if not 0 <= self.k < self.ell:
            raise ValueError(f"need 0 <= k < ell, got k={self.k}, ell={self.ell}")


def _require(G: Graph, *vertices) -> None:
    for v in vertices:
        if v not in G:
            raise StructureError(f"unknown vertex {v!r}")


def distances(G: Graph, source) -> dict:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in G.neighbors(u):
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def connected(G: Graph, s, t) -> bool:
    # breadth-first search stands in for a log-space connectivity routine
    _require(G, s, t)
    return t in distances(G, s)


def shortest_path(G: Graph, s, t) -> Optional[list]:
    _require(G, s, t)
    parent = {s: None}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        if u == t:
            path = [u]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path[::-1]
        for v in G.neighbors(u):
            if v not in parent:
                parent[v] = u
                queue.append(v)
    return None


def solve_ustcon(G: Graph, s, t, ell: int) -> bool:
    """Is there a path of length at most ``ell`` connecting ``s`` and ``t``?"""
    _require(G, s, t)
    return distances(G, s).get(t, ell + 1) <= ell


def long_path_from(G: Graph, s, length: int) -> Optional[list]:
    """Some simple path with ``length`` edges starting at ``s``, or None."""
    path = [s]
    on_path = {s}

    def extend() -> bool:
        if len(path) - 1 == length:
            return True
        for v in G.neighbors(path[-1]):
            if v not in on_path:
                path.append(v)
                on_path.add(v)
                if extend():
                    return True
                on_path.discard(path.pop())
        return False

    return list(path) if extend() else None


def exact_path(G: Graph, s, t, length: int) -> Optional[list]:
    """Some simple s-t path with exactly ``length`` edges, or None."""
    path = [s]
    on_path = {s}

    def extend() -> bool:
        if len(path) - 1 == length:
            return path[-1] == t
        for v in G.neighbors(path[-1]):
            if v not in on_path and (v != t or len(path) == length):
                path.append(v)
                on_path.add(v)
                if extend():
                    return True
                on_path.discard(path.pop())
        return False

    return list(path) if extend() else None


def solve_longshort(inst: LongShortInstance) -> bool:
    """A path of length >= ell with endpoint s, or an s-t path of length exactly k."""
    G = inst.graph
    return (
        long_path_from(G, inst.s, inst.ell) is not None
        or exact_path(G, inst.s, inst.t, inst.k) is not None
    )
