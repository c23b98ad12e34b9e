import pytest
from hypothesis import given, strategies as st

from pathemb.analysis import (
    EXCEEDS,
    WITHIN,
    alternating_tail_constant,
    analyze,
    classify,
    critical_bound,
    critical_edges,
    is_rooted_oriented_path,
    is_unfoldable,
    max_degree,
    per_edge_degrees,
    two_var_atom_count,
    unfoldability_degree,
    unfoldable_edges,
)
from pathemb.families import BACKWARD, BOTH, FORWARD, family_orientations, gen_family, path_from_orientations
from pathemb.structures import StructureError, Vocabulary, as_rooted_path, validate

from strategies import rooted_paths

F, B = FORWARD, BACKWARD


# Independent oracle: atomic types of path edges computed from orientations alone.
def _edge_atoms(ways, i, ell):
    """Atoms of e_i^{-ell} for the path with edge orientations ``ways`` (1-based i)."""
    way = ways[i - 1]
    atoms = set()
    if way in (F, BOTH):
        atoms.add((1, 2))
    if way in (B, BOTH):
        atoms.add((2, 1))
    if i == 1:
        atoms.add("root-first")
    if ell % 2:
        atoms = {a[::-1] if isinstance(a, tuple) else "root-second" for a in atoms}
    return atoms


def oracle_degree(ways, i):
    best = 0
    for d in range(0, i):
        if all(not _edge_atoms(ways, i, 0) <= _edge_atoms(ways, i - ell, ell) for ell in range(1, d + 1)):
            best = d
    return best


def oracle_degrees(ways):
    return [oracle_degree(ways, i) for i in range(1, len(ways) + 1)]


@pytest.mark.parametrize("family", [1, 2, 3, 4])
@pytest.mark.parametrize("size", range(3, 13))
def test_degrees_match_orientation_oracle(family, size):
    P = gen_family(family, size)
    assert per_edge_degrees(P) == oracle_degrees(family_orientations(family, size))


@given(st.lists(st.sampled_from((F, B, BOTH)), min_size=1, max_size=10))
def test_degrees_match_oracle_on_arbitrary_paths(ways):
    assert per_edge_degrees(path_from_orientations(ways)) == oracle_degrees(ways)


def test_every_edge_is_unfoldable_of_degree_zero():
    P = gen_family(2, 7)
    assert all(is_unfoldable(P, i, 0) for i in range(1, P.k))


def test_family_one_has_no_unfoldable_edge():
    for size in range(3, 13):
        P = gen_family(1, size)
        assert not any(is_unfoldable(P, i, 1) for i in range(1, P.k))
        assert unfoldability_degree(P) == 0


def test_family_four_has_degree_zero():
    assert all(unfoldability_degree(gen_family(4, n)) == 0 for n in range(3, 13))


def test_family_two_second_edge_has_degree_exactly_one():
    P = gen_family(2, 9)
    assert is_unfoldable(P, 2, 1) and not is_unfoldable(P, 2, 2)


def test_family_two_later_even_edges_have_degree_two():
    # e_4 = (p4, p5) is reversed; e_3^{-1} and e_2 both point the other way,
    # while e_1^{-3} = (p2, p1) matches it
    P = gen_family(2, 9)
    assert per_edge_degrees(P) == [0, 1, 0, 2, 0, 2, 0, 2]
    assert unfoldability_degree(P) == 7
    assert unfoldable_edges(P) == [2, 4, 6, 8]


def test_family_three_last_edge_degree_is_capped_by_its_index():
    for size in range(3, 13):
        P = gen_family(3, size)
        last = P.k - 1
        assert unfoldable_edges(P) == [last]
        assert max_degree(P, last) == last - 1
        assert not is_unfoldable(P, last, last)


def test_drawn_oriented_path_unfoldable_edges():
    P = path_from_orientations([F, F, F, B, B, B, B])
    assert unfoldable_edges(P) == [2, 3, 5, 6, 7]


@pytest.mark.parametrize("i", [0, 5])
def test_index_out_of_range(i):
    P = gen_family(1, 5)
    with pytest.raises(IndexError):
        is_unfoldable(P, i, 1)
    with pytest.raises(IndexError):
        max_degree(P, i)


@given(rooted_paths(min_size=2, max_size=9))
def test_unfoldability_properties(P):
    for i in range(1, P.k):
        top = max_degree(P, i)
        assert all(is_unfoldable(P, i, d) for d in range(top + 1))
        assert not is_unfoldable(P, i, top + 1)
        assert top < i
    crit = set(critical_edges(P))
    assert set(unfoldable_edges(P)) <= crit
    if P.k >= 3:
        assert 2 in crit
    report = analyze(P)
    assert report.unfoldability_degree == sum(report.per_edge_degree)
    assert report.unfoldable_edges == [i for i, d in enumerate(report.per_edge_degree, 1) if d >= 1]


def test_critical_edge_examples():
    for n in range(4, 13):
        assert len(critical_edges(gen_family(3, n))) == 2
        assert len(critical_edges(gen_family(4, n))) == 2
        assert critical_edges(gen_family(1, n)) == [2]


def test_critical_bound_and_atom_count():
    assert critical_bound(0, 3) == 3
    assert critical_bound(2, 5) == 17
    assert two_var_atom_count(Vocabulary({"root": 1, "E": 2})) == 7
    assert two_var_atom_count(Vocabulary({"E": 2})) == 5


@given(rooted_paths(min_size=2, max_size=10))
def test_critical_edges_within_bound(P):
    bound = critical_bound(len(unfoldable_edges(P)), two_var_atom_count(P.vocabulary))
    assert len(critical_edges(P)) <= bound


def test_oriented_path_recognition():
    assert is_rooted_oriented_path(gen_family(1, 6))
    assert not is_rooted_oriented_path(gen_family(4, 6))
    looped = validate(
        {"root": 1, "E": 2}, ["p1", "p2"], {"root": [("p1",)], "E": [("p1", "p2"), ("p2", "p2")]}
    )
    assert not is_rooted_oriented_path(as_rooted_path(looped))


def test_oriented_path_needs_exact_vocabulary():
    P = as_rooted_path(validate({"root": 1, "R": 2}, ["a", "b"], {"root": [("a",)], "R": [("a", "b")]}))
    with pytest.raises(StructureError, match="wrong vocabulary"):
        is_rooted_oriented_path(P)


def test_alternating_tail_examples():
    assert alternating_tail_constant(gen_family(1, 7)) == 1
    picture = path_from_orientations([B, F, F, B, F, B, F, B])
    assert alternating_tail_constant(picture) == 4
    for n in range(3, 10):
        assert alternating_tail_constant(gen_family(3, n)) == n
    with pytest.raises(StructureError):
        alternating_tail_constant(gen_family(4, 6))


def test_classify_examples():
    ones = classify([gen_family(1, n) for n in range(3, 11)], 0)
    assert ones.verdict == WITHIN and ones.all_oriented and ones.common_tail_C == 1
    threes = classify([gen_family(3, n) for n in range(4, 11)], 3)
    assert threes.verdict == EXCEEDS
    twos = classify([gen_family(2, 5), gen_family(2, 9)], 4)
    assert [r.unfoldability_degree for r in twos.reports] == [3, 7]
    assert twos.verdict == EXCEEDS
    assert classify([gen_family(4, 6)], 0).common_tail_C is None


def test_classify_rejects_empty_sample():
    with pytest.raises(ValueError, match="empty"):
        classify([], 1)


@given(st.lists(rooted_paths(min_size=2, max_size=6), min_size=1, max_size=4), st.randoms(), st.integers(0, 6))
def test_classify_is_order_independent(sample, rnd, bound):
    shuffled = list(sample)
    rnd.shuffle(shuffled)
    a, b = classify(sample, bound), classify(shuffled, bound)
    assert (a.verdict, a.max_unfoldability_degree, a.common_tail_C) == (
        b.verdict, b.max_unfoldability_degree, b.common_tail_C)
