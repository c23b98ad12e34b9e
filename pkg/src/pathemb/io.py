"""Structure JSON and graph edge-list formats.

Structure JSON::

    {"vocabulary": {"root": 1, "E": 2},
     "universe": ["p1", "p2"],
     "relations": {"root": [["p1"]], "E": [["p1", "p2"]]}}

Edge list: a header line ``n m`` followed by ``m`` lines ``u v`` over the
0-based vertices ``0..n-1``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .structures import Graph, Structure, StructureError, validate

STRUCTURE_FIELDS = ("vocabulary", "universe", "relations")


class FormatError(StructureError):
    """Malformed input file."""


def parse_structure(text: str) -> Structure:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError("structure JSON must be an object")
    unknown = set(data) - set(STRUCTURE_FIELDS)
    if unknown:
        raise FormatError(f"unknown field(s): {', '.join(sorted(unknown))}")
    missing = [k for k in STRUCTURE_FIELDS if k not in data]
    if missing:
        raise FormatError(f"missing field(s): {', '.join(missing)}")
    vocab, universe, relations = data["vocabulary"], data["universe"], data["relations"]
    if not isinstance(vocab, dict) or not all(
        isinstance(a, int) and not isinstance(a, bool) for a in vocab.values()
    ):
        raise FormatError("vocabulary must map symbol names to integer arities")
    if not isinstance(universe, list) or not all(isinstance(x, str) for x in universe):
        raise FormatError("universe must be a list of strings")
    if not isinstance(relations, dict):
        raise FormatError("relations must be an object")
    rels = {}
    for name, tuples in relations.items():
        if not isinstance(tuples, list) or not all(isinstance(t, list) for t in tuples):
            raise FormatError(f"relation {name!r} must be a list of lists")
        as_tuples = [tuple(t) for t in tuples]
        if len(set(as_tuples)) != len(as_tuples):
            raise FormatError(f"duplicate tuple in relation {name!r}")
        rels[name] = as_tuples
    return validate(vocab, universe, rels)


def dump_structure(struct: Structure) -> str:
    """Serialize with keys in the order vocabulary, universe, relations."""
    data = {
        "vocabulary": dict(struct.vocabulary.symbols),
        "universe": list(struct.universe),
        "relations": {name: [list(t) for t in struct.tuples(name)] for name in struct.vocabulary},
    }
    return json.dumps(data, indent=2) + "\n"


def parse_graph(text: str) -> Graph:
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines:
        raise FormatError("empty edge list")
    try:
        rows = [[int(x) for x in line] for line in lines]
    except ValueError as exc:
        raise FormatError(f"non-integer token: {exc}") from exc
    if any(len(row) != 2 for row in rows):
        raise FormatError("every line must hold exactly two integers")
    (n, m), edges = rows[0], rows[1:]
    if n < 1 or m < 0:
        raise FormatError("header must give n >= 1 vertices and m >= 0 edges")
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    seen = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise FormatError(f"self-loop at {u}")
        key = frozenset((u, v))
        if key in seen:
            raise FormatError(f"duplicate edge ({u}, {v})")
        seen.add(key)
    return Graph.from_pairs(range(n), edges)


def dump_graph(G: Graph) -> str:
    """Edge list with vertices renumbered 0..n-1 in vertex order."""
    index = {v: j for j, v in enumerate(G.vertices)}
    pairs = sorted(tuple(sorted(index[v] for v in e)) for e in G.edges)
    lines = [f"{len(G.vertices)} {len(pairs)}"] + [f"{u} {v}" for u, v in pairs]
    return "\n".join(lines) + "\n"


def read_structure(path: str | Path) -> Structure:
    return parse_structure(Path(path).read_text(encoding="utf-8"))


def write_structure(struct: Structure, path: str | Path) -> None:
    Path(path).write_text(dump_structure(struct), encoding="utf-8")


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(G: Graph, path: str | Path) -> None:
    Path(path).write_text(dump_graph(G), encoding="utf-8")
