"""Finite relational structures, atomic types and rooted path structures."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from types import MappingProxyType
from typing import Hashable

ROOT = "root"


class StructureError(ValueError):
    """Raised when a structure, graph or path violates one of its invariants."""


@lru_cache(maxsize=None)
def patterns(arity: int) -> tuple[tuple[int, ...], ...]:
    """All substitution patterns over the two variables for one arity."""
    return tuple(product((1, 2), repeat=arity))


@dataclass(frozen=True, eq=False)
class Vocabulary:
    symbols: Mapping[str, int]

    def __post_init__(self) -> None:
        items = dict(self.symbols)
        for name, arity in items.items():
            if not isinstance(name, str) or not name:
                raise StructureError(f"bad relation symbol {name!r}")
            if not isinstance(arity, int) or isinstance(arity, bool) or arity < 1:
                raise StructureError(f"arity of {name!r} must be a positive integer")
        object.__setattr__(self, "symbols", MappingProxyType(items))

    def arity(self, name: str) -> int:
        return self.symbols[name]

    def __contains__(self, name: object) -> bool:
        return name in self.symbols

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Vocabulary):
            return NotImplemented
        return dict(self.symbols) == dict(other.symbols)

    def __hash__(self) -> int:
        return hash(frozenset(self.symbols.items()))

    def __repr__(self) -> str:
        return f"Vocabulary({dict(self.symbols)!r})"


@dataclass(frozen=True, eq=False)
class Structure:
    """A finite structure; immutable once constructed.

    ``universe`` keeps the caller's order, which fixes every tie-break
    downstream.  Relations are stored as frozensets of tuples; use
    :meth:`tuples` for a deterministic iteration order.
    """

    vocabulary: Vocabulary
    universe: tuple[str, ...]
    relations: Mapping[str, frozenset[tuple[str, ...]]]

    def __post_init__(self) -> None:
        universe = tuple(self.universe)
        if not universe:
            raise StructureError("empty universe")
        if len(set(universe)) != len(universe):
            raise StructureError("duplicate element in universe")
        members = set(universe)
        rels: dict[str, frozenset[tuple[str, ...]]] = {}
        for name, tuples in self.relations.items():
            if name not in self.vocabulary:
                raise StructureError(f"unknown symbol {name!r}")
            arity = self.vocabulary.arity(name)
            clean = set()
            for tup in tuples:
                tup = tuple(tup)
                if len(tup) != arity:
                    raise StructureError(
                        f"arity mismatch: {name} has arity {arity}, got tuple {tup}"
                    )
                for el in tup:
                    if el not in members:
                        raise StructureError(f"unknown element {el!r} in {name}")
                clean.add(tup)
            rels[name] = frozenset(clean)
        for name in self.vocabulary:
            rels.setdefault(name, frozenset())
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "relations", MappingProxyType(rels))

    @cached_property
    def index(self) -> dict[str, int]:
        return {el: i for i, el in enumerate(self.universe)}

    def __len__(self) -> int:
        return len(self.universe)

    def __contains__(self, element: object) -> bool:
        return element in self.index

    def tuples(self, symbol: str) -> list[tuple[str, ...]]:
        idx = self.index
        return sorted(self.relations[symbol], key=lambda t: [idx[x] for x in t])

    def holds(self, symbol: str, tup: tuple[str, ...]) -> bool:
        return tup in self.relations[symbol]

    @cached_property
    def _type_cache(self) -> dict[tuple[str, str], AtomicType]:
        return {}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Structure):
            return NotImplemented
        return (
            self.vocabulary == other.vocabulary
            and self.universe == other.universe
            and dict(self.relations) == dict(other.relations)
        )

    def __hash__(self) -> int:
        return hash((self.vocabulary, self.universe))

    def __repr__(self) -> str:
        sizes = {name: len(t) for name, t in self.relations.items()}
        return f"Structure(|A|={len(self.universe)}, relations={sizes})"


def validate(
    vocabulary: Vocabulary | Mapping[str, int],
    universe: Iterable[str],
    relations: Mapping[str, Iterable[Iterable[str]]],
) -> Structure:
    """Build a structure, raising :class:`StructureError` on the first violated invariant."""
    if not isinstance(vocabulary, Vocabulary):
        vocabulary = Vocabulary(vocabulary)
    return Structure(vocabulary, tuple(universe), dict(relations))


def induced(struct: Structure, elements: Iterable[str]) -> Structure:
    """Induced substructure on ``elements`` (kept in the structure's own order)."""
    keep = set(elements)
    universe = tuple(el for el in struct.universe if el in keep)
    rels = {
        name: frozenset(t for t in tuples if all(x in keep for x in t))
        for name, tuples in struct.relations.items()
    }
    return Structure(struct.vocabulary, universe, rels)


def with_root(struct: Structure, element: str) -> Structure:
    """Copy of ``struct`` with ``root`` reinterpreted as ``{element}``."""
    if ROOT not in struct.vocabulary or struct.vocabulary.arity(ROOT) != 1:
        raise StructureError("vocabulary lacks the unary symbol 'root'")
    if element not in struct:
        raise StructureError(f"unknown element {element!r}")
    rels = dict(struct.relations)
    rels[ROOT] = frozenset({(element,)})
    return Structure(struct.vocabulary, struct.universe, rels)


# --- atomic types -----------------------------------------------------------

EQ = ("=", (1, 2))


@dataclass(frozen=True)
class AtomicType:
    """Atomic two-variable formulas satisfied by an ordered pair.

    An atom is ``(symbol, pattern)`` with ``pattern`` in ``{1,2}^arity``, or
    the equality marker :data:`EQ`.
    """

    atoms: frozenset

    def __le__(self, other: AtomicType) -> bool:
        return self.atoms <= other.atoms

    def __lt__(self, other: AtomicType) -> bool:
        return self.atoms < other.atoms

    def swap(self) -> AtomicType:
        return swap(self)

    def __repr__(self) -> str:
        parts = sorted(
            "x1=x2" if atom == EQ else f"{atom[0]}@{atom[1]}" for atom in self.atoms
        )
        return "{" + ", ".join(parts) + "}"


def atomic_type(struct: Structure, pair: tuple[str, str]) -> AtomicType:
    pair = (pair[0], pair[1])
    cache = struct._type_cache
    hit = cache.get(pair)
    if hit is not None:
        return hit
    for el in pair:
        if el not in struct:
            raise StructureError(f"unknown element {el!r}")
    atoms = set()
    for name in struct.vocabulary:
        rel = struct.relations[name]
        if not rel:
            continue
        for pat in patterns(struct.vocabulary.arity(name)):
            if tuple(pair[j - 1] for j in pat) in rel:
                atoms.add((name, pat))
    if pair[0] == pair[1]:
        atoms.add(EQ)
    result = AtomicType(frozenset(atoms))
    cache[pair] = result
    return result


def swap(atype: AtomicType) -> AtomicType:
    """Atomic type of the reversed pair; an involution."""
    out = set()
    for atom in atype.atoms:
        if atom == EQ:
            out.add(atom)
        else:
            name, pat = atom
            out.add((name, tuple(3 - j for j in pat)))
    return AtomicType(frozenset(out))


def edge_power(pair: tuple[Hashable, Hashable], ell: int) -> tuple[Hashable, Hashable]:
    """The pair itself for even ``ell``, the reversed pair for odd ``ell``."""
    a, b = pair
    return (a, b) if ell % 2 == 0 else (b, a)


# --- graphs -------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph; ``edges`` holds 2-element frozensets."""

    vertices: tuple
    edges: frozenset

    def __post_init__(self) -> None:
        vertices = tuple(self.vertices)
        if len(set(vertices)) != len(vertices):
            raise StructureError("duplicate vertex")
        members = set(vertices)
        edges = set()
        for e in self.edges:
            e = frozenset(e)
            if len(e) != 2:
                raise StructureError(f"self-loop or malformed edge {set(e)}")
            if not e <= members:
                raise StructureError(f"edge {set(e)} has an unknown endpoint")
            edges.add(e)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def from_pairs(cls, vertices: Iterable, pairs: Iterable[tuple]) -> Graph:
        return cls(tuple(vertices), frozenset(frozenset(p) for p in pairs))

    @cached_property
    def adjacency(self) -> dict:
        order = {v: i for i, v in enumerate(self.vertices)}
        adj: dict = {v: [] for v in self.vertices}
        for e in self.edges:
            u, v = tuple(e)
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(sorted(ns, key=order.__getitem__)) for v, ns in adj.items()}

    def neighbors(self, v) -> tuple:
        return self.adjacency[v]

    def has_edge(self, u, v) -> bool:
        return frozenset((u, v)) in self.edges

    def __contains__(self, v: object) -> bool:
        return v in self.adjacency

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Graph(|V|={len(self.vertices)}, |E|={len(self.edges)})"


def gaifman(struct: Structure) -> Graph:
    pairs = set()
    for tuples in struct.relations.values():
        for tup in tuples:
            distinct = set(tup)
            for a in distinct:
                for b in distinct:
                    if a != b:
                        pairs.add(frozenset((a, b)))
    return Graph(struct.universe, frozenset(pairs))


# --- rooted path structures ---------------------------------------------------


@dataclass(frozen=True, eq=False)
class RootedPathStructure:
    """A structure whose Gaifman graph is a path rooted at one endpoint.

    Build instances with :func:`as_rooted_path`; ``enumeration`` is
    p_1..p_k with p_1 the root and ``edges[i-1]`` is e_i = (p_i, p_{i+1}).
    """

    base: Structure
    enumeration: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    @property
    def k(self) -> int:
        return len(self.enumeration)

    @property
    def vocabulary(self) -> Vocabulary:
        return self.base.vocabulary

    def point(self, i: int) -> str:
        """p_i, 1-based."""
        if not 1 <= i <= self.k:
            raise IndexError(f"point index {i} outside 1..{self.k}")
        return self.enumeration[i - 1]

    def edge(self, i: int) -> tuple[str, str]:
        """e_i, 1-based."""
        if not 1 <= i <= self.k - 1:
            raise IndexError(f"edge index {i} outside 1..{self.k - 1}")
        return self.edges[i - 1]

    def edge_type(self, i: int, power: int = 0) -> AtomicType:
        """atyp(e_i^{-power})."""
        return atomic_type(self.base, edge_power(self.edge(i), power))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RootedPathStructure):
            return NotImplemented
        return self.base == other.base and self.enumeration == other.enumeration

    def __hash__(self) -> int:
        return hash((self.base, self.enumeration))

    def __repr__(self) -> str:
        return f"RootedPathStructure(k={self.k}, {self.enumeration})"


def as_rooted_path(struct: Structure) -> RootedPathStructure:
    vocab = struct.vocabulary
    if ROOT not in vocab or vocab.arity(ROOT) != 1:
        raise StructureError("bad root: vocabulary lacks the unary symbol 'root'")
    graph = gaifman(struct)
    k = len(struct)
    if len(graph.edges) != k - 1 or any(len(graph.neighbors(v)) > 2 for v in graph.vertices):
        raise StructureError("not a path")
    roots = struct.relations[ROOT]
    if len(roots) != 1:
        raise StructureError("bad root: root must hold exactly one element")
    (root,) = next(iter(roots))
    if len(graph.neighbors(root)) > 1:
        raise StructureError("bad root: root is not an endpoint")
    order = [root]
    prev = None
    while True:
        nxt = [v for v in graph.neighbors(order[-1]) if v != prev]
        if not nxt:
            break
        prev = order[-1]
        order.append(nxt[0])
    if len(order) != k:
        raise StructureError("not a path: Gaifman graph is disconnected")
    edges = tuple(zip(order, order[1:]))
    return RootedPathStructure(struct, tuple(order), edges)


def _sub_path(P: RootedPathStructure, lo: int, hi: int, base: Structure) -> RootedPathStructure:
    order = P.enumeration[lo - 1 : hi]
    return RootedPathStructure(base, order, tuple(zip(order, order[1:])))


def cut_down(P: RootedPathStructure, i: int) -> RootedPathStructure:
    """Substructure induced on p_1..p_i."""
    if not 1 <= i <= P.k:
        raise IndexError(f"cut index {i} outside 1..{P.k}")
    base = induced(P.base, P.enumeration[:i])
    return _sub_path(P, 1, i, base)


def cut_up(P: RootedPathStructure, i: int) -> RootedPathStructure:
    """Substructure induced on p_i..p_k, rerooted at p_i."""
    if not 1 <= i <= P.k:
        raise IndexError(f"cut index {i} outside 1..{P.k}")
    base = with_root(induced(P.base, P.enumeration[i - 1 :]), P.point(i))
    return _sub_path(P, i, P.k, base)
