"""Exhaustive homomorphism and embedding search, plus independent checkers."""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from typing import Optional

from ..structures import Structure, StructureError


def _check_vocabularies(A: Structure, B: Structure) -> None:
    if A.vocabulary != B.vocabulary:
        raise StructureError("vocabulary mismatch")


def is_homomorphism(A: Structure, B: Structure, h: Mapping[str, str]) -> bool:
    """Direct check of the definition: every tuple of A maps into the same relation of B."""
    if set(h) != set(A.universe) or any(v not in B for v in h.values()):
        return False
    for name, tuples in A.relations.items():
        target = B.relations[name]
        for tup in tuples:
            if tuple(h[x] for x in tup) not in target:
                return False
    return True


def is_embedding(A: Structure, B: Structure, h: Mapping[str, str]) -> bool:
    return is_homomorphism(A, B, h) and len(set(h.values())) == len(h)


def iter_maps(A: Structure, B: Structure, injective: bool = True) -> Iterator[dict[str, str]]:
    """All homomorphisms (embeddings if ``injective``) of A into B, lexicographically.

    Elements of A are assigned in universe order and candidates in B are
    tried in B's universe order.
    """
    _check_vocabularies(A, B)
    order = A.universe
    pos = A.index
    # tuples become checkable once their last-assigned component is placed
    due: list[list[tuple[str, tuple[str, ...]]]] = [[] for _ in order]
    for name, tuples in A.relations.items():
        for tup in tuples:
            due[max(pos[x] for x in tup)].append((name, tup))
    assignment: dict[str, str] = {}
    used: set[str] = set()

    def place(i: int) -> Iterator[dict[str, str]]:
        if i == len(order):
            yield dict(assignment)
            return
        a = order[i]
        for b in B.universe:
            if injective and b in used:
                continue
            assignment[a] = b
            if all(
                tuple(assignment[x] for x in tup) in B.relations[name] for name, tup in due[i]
            ):
                used.add(b)
                yield from place(i + 1)
                used.discard(b)
            del assignment[a]

    return place(0)


def brute_force_embedding(A: Structure, B: Structure) -> Optional[dict[str, str]]:
    """Lexicographically least embedding of A into B (in universe order), or None."""
    return next(iter_maps(A, B, injective=True), None)


def brute_force_homomorphism(A: Structure, B: Structure) -> Optional[dict[str, str]]:
    return next(iter_maps(A, B, injective=False), None)
