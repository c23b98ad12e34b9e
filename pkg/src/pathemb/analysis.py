"""Unfoldability, critical edges and alternating tails of rooted path structures.

Edge indices are 1-based throughout, matching e_1..e_{k-1}.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import asdict, dataclass, field
from typing import Optional

from .structures import ROOT, RootedPathStructure, StructureError, Vocabulary


def _check_edge(P: RootedPathStructure, i: int) -> None:
    if not 1 <= i <= P.k - 1:
        raise IndexError(f"edge index {i} outside 1..{P.k - 1}")


def is_unfoldable(P: RootedPathStructure, i: int, d: int) -> bool:
    """Whether e_i is unfoldable of degree ``d``.

    That is ``i > d`` and, for every ell in 1..d, atyp(e_i) is not contained
    in atyp(e_{i-ell}^{-ell}).
    """
    _check_edge(P, i)
    if i <= d:
        return False
    own = P.edge_type(i)
    return all(not own <= P.edge_type(i - ell, ell) for ell in range(1, d + 1))


def max_degree(P: RootedPathStructure, i: int) -> int:
    _check_edge(P, i)
    own = P.edge_type(i)
    d = 0
    # degree d+1 holds iff degree d holds and the (d+1)-th inclusion fails
    while d + 1 < i and not own <= P.edge_type(i - d - 1, d + 1):
        d += 1
    return d


def per_edge_degrees(P: RootedPathStructure) -> list[int]:
    return [max_degree(P, i) for i in range(1, P.k)]


def unfoldability_degree(P: RootedPathStructure) -> int:
    return sum(per_edge_degrees(P))


def unfoldable_edges(P: RootedPathStructure) -> list[int]:
    return [i for i in range(1, P.k) if is_unfoldable(P, i, 1)]


def critical_edges(P: RootedPathStructure) -> list[int]:
    """Indices i >= 2 with atyp(e_i) != atyp(e_{i-1}^{-1})."""
    return [i for i in range(2, P.k) if P.edge_type(i) != P.edge_type(i - 1, 1)]


def critical_bound(c: int, t: int) -> int:
    """Upper bound c + t(c+1) on the number of critical edges."""
    return c + t * (c + 1)


def two_var_atom_count(vocab: Vocabulary) -> int:
    """Number of atomic formulas in two variables: 2^arity per symbol, plus x1 = x2."""
    return sum(2 ** vocab.arity(name) for name in vocab) + 1


def is_rooted_oriented_path(P: RootedPathStructure) -> bool:
    vocab = P.vocabulary
    if dict(vocab.symbols) != {ROOT: 1, "E": 2}:
        raise StructureError("wrong vocabulary: rooted oriented paths are over {root, E}")
    arcs = P.base.relations["E"]
    allowed = set()
    for a, b in P.edges:
        if ((a, b) in arcs) == ((b, a) in arcs):
            return False
        allowed.update({(a, b), (b, a)})
    return all(arc in allowed for arc in arcs)


def alternating_tail_constant(P: RootedPathStructure) -> int:
    """Least C >= 1 such that no edge e_i with i >= C is unfoldable."""
    if not is_rooted_oriented_path(P):
        raise StructureError("not a rooted oriented path")
    unfoldable = unfoldable_edges(P)
    return unfoldable[-1] + 1 if unfoldable else 1


@dataclass
class AnalysisReport:
    per_edge_degree: list[int]
    unfoldability_degree: int
    unfoldable_edges: list[int]
    critical_edges: list[int]
    max_edge_degree: int
    alternating_tail_C: Optional[int] = None

    def to_dict(self) -> dict:
        return asdict(self)


def analyze(P: RootedPathStructure) -> AnalysisReport:
    degrees = per_edge_degrees(P)
    tail = None
    if dict(P.vocabulary.symbols) == {ROOT: 1, "E": 2} and is_rooted_oriented_path(P):
        tail = alternating_tail_constant(P)
    return AnalysisReport(
        per_edge_degree=degrees,
        unfoldability_degree=sum(degrees),
        unfoldable_edges=[i for i, d in enumerate(degrees, start=1) if d >= 1],
        critical_edges=critical_edges(P),
        max_edge_degree=max(degrees, default=0),
        alternating_tail_C=tail,
    )


WITHIN, EXCEEDS = "within bound", "exceeds bound"


@dataclass
class ClassificationReport:
    bound: int
    verdict: str
    max_unfoldability_degree: int
    all_oriented: bool
    common_tail_C: Optional[int]
    tail_within_bound: Optional[bool]
    reports: list[AnalysisReport] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "bound": self.bound,
            "verdict": self.verdict,
            "max_unfoldability_degree": self.max_unfoldability_degree,
            "all_oriented": self.all_oriented,
            "common_tail_C": self.common_tail_C,
            "tail_within_bound": self.tail_within_bound,
            "reports": [r.to_dict() for r in self.reports],
        }


def classify(sample: Sequence[RootedPathStructure], bound: int) -> ClassificationReport:
    """Apply the bounded-unfoldability dichotomy to a finite sample.

    The verdict only speaks about the sample relative to ``bound``; the
    class it was drawn from may behave differently beyond it.
    """
    if not sample:
        raise ValueError("empty sample")
    reports = [analyze(P) for P in sample]
    worst = max(r.unfoldability_degree for r in reports)
    oriented = all(r.alternating_tail_C is not None for r in reports)
    common = max(r.alternating_tail_C for r in reports) if oriented else None
    return ClassificationReport(
        bound=bound,
        verdict=WITHIN if worst <= bound else EXCEEDS,
        max_unfoldability_degree=worst,
        all_oriented=oriented,
        common_tail_C=common,
        tail_within_bound=(common <= bound) if oriented else None,
        reports=reports,
    )
