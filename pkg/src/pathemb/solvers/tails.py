"""Colour-coding decision procedure for rooted oriented paths with alternating tails.

Past index C every edge of such a path is foldable, so any simple walk
through the layered graph :func:`color_graph_tail` spells out a copy of
the tail.  :func:`algorithm_B` guesses an embedding of the prefix
p_1..p_C exhaustively and handles the tail by connectivity.
"""

from __future__ import annotations

from collections.abc import Mapping
from typing import Optional

from ..analysis import alternating_tail_constant, is_rooted_oriented_path
from ..structures import Graph, RootedPathStructure, Structure, StructureError, cut_down
from .brute import brute_force_embedding, iter_maps
from .colour_coding import DEFAULT_K_MAX, SolverTrace, _reach, colourings
from .hashing import is_perfect


def _require_oriented(P: RootedPathStructure) -> None:
    if not is_rooted_oriented_path(P):
        raise StructureError("not a rooted oriented path")


def color_graph_tail(
    P: RootedPathStructure, B: Structure, f: Mapping[str, int], h: Mapping[str, str]
) -> Graph:
    """The graph G(f, h) of the tail algorithm, straight from its definition.

    ``h`` maps p_1..p_C into B; C is read off as the number of prefix points.
    """
    _require_oriented(P)
    C = len(h)
    prefix = [P.point(j) for j in range(1, C + 1)]
    if set(h) != set(prefix):
        raise StructureError("h must be defined exactly on p1..pC")
    anchor = h[P.point(C)]
    removed = {h[p] for p in prefix[:-1]}
    vertices = [b for b in B.universe if b not in removed]
    keep = set(vertices)
    arcs_P = P.base.relations["E"]
    pairs = []
    for b, b2 in B.tuples("E"):
        if b not in keep or b2 not in keep:
            continue
        fb, fb2 = f[b], f[b2]
        if abs(fb - fb2) != 1 or min(fb, fb2) < C or max(fb, fb2) > P.k:
            continue
        if (P.point(fb), P.point(fb2)) not in arcs_P:
            continue
        if (fb == C and b != anchor) or (fb2 == C and b2 != anchor):
            continue
        pairs.append((b, b2))
    return Graph.from_pairs(vertices, pairs)


def embed_B(
    P: RootedPathStructure,
    B: Structure,
    C: int,
    *,
    k_max: int = DEFAULT_K_MAX,
    multiplier: float = 1.0,
    trace: Optional[SolverTrace] = None,
) -> Optional[dict[str, str]]:
    """Like :func:`algorithm_B` but returns the embedding found, or None."""
    if P.vocabulary != B.vocabulary:
        raise StructureError("vocabulary mismatch")
    _require_oriented(P)
    if C < 1:
        raise ValueError("C must be at least 1")
    if alternating_tail_constant(P) > C:
        raise StructureError(f"tail is not {C}-alternating")
    trace = trace if trace is not None else SolverTrace()
    trace.calls += 1
    k, n = P.k, len(B)
    colours = k - C + 1
    if k <= C or n <= k or colours > k_max - 1 or not is_perfect(n, colours, multiplier):
        trace.brute_force_calls += 1
        return brute_force_embedding(P.base, B)
    trace.colour_coded_calls += 1

    els = B.universe
    pos = B.index
    arcs_P = P.base.relations["E"]
    # up[j] / down[j]: direction of the P-edge between colours j and j+1
    up = {j: (P.point(j), P.point(j + 1)) in arcs_P for j in range(C, k)}
    out = [[pos[b2] for b, b2 in B.tuples("E") if b == x and b2 != x] for x in els]
    cols = list(colourings(n, range(C, k + 1), multiplier))

    for h in iter_maps(cut_down(P, C).base, B):
        anchor = pos[h[P.point(C)]]
        removed = {pos[h[P.point(j)]] for j in range(1, C)}
        for f in cols:
            # only colourings putting the anchor at colour C can connect
            if f[anchor] != C or k not in f:
                continue
            adj: dict[int, list[int]] = {}
            for u in range(n):
                if u in removed or (f[u] == C and u != anchor):
                    continue
                fu = f[u]
                for v in out[u]:
                    if v in removed or (f[v] == C and v != anchor):
                        continue
                    fv = f[v]
                    if fv == fu + 1 and fu < k and up[fu] or fv == fu - 1 and fv >= C and not up[fv]:
                        adj.setdefault(u, []).append(v)
                        adj.setdefault(v, []).append(u)
            path = _reach(adj, [anchor], lambda v: f[v] == k)
            if path is not None:
                witness = dict(h)
                for j, v in enumerate(path[: colours], start=C):
                    witness[P.point(j)] = els[v]
                trace.first_loop_accepts += 1
                trace.accepts.append((P.base, B, witness))
                return witness
    return None


def algorithm_B(
    P: RootedPathStructure,
    B: Structure,
    C: int,
    *,
    k_max: int = DEFAULT_K_MAX,
    multiplier: float = 1.0,
    trace: Optional[SolverTrace] = None,
) -> bool:
    """Decide whether a rooted oriented path P with a C-alternating tail embeds into B."""
    return embed_B(P, B, C, k_max=k_max, multiplier=multiplier, trace=trace) is not None
