import random

import pytest
from hypothesis import given, settings, strategies as st

from pathemb.analysis import is_rooted_oriented_path, max_degree, unfoldable_edges
from pathemb.families import BACKWARD, FORWARD, gen_family, path_from_orientations
from pathemb.generate import random_graph
from pathemb.reductions import (
    GadgetSpec,
    build_B,
    element,
    family_supply,
    gadget_structure,
    longshort_witness,
    make_P_kl,
    reduce_longshort,
    reduce_ustcon,
    select_X_case1,
    select_X_case2,
    stretch_path_witness,
    ustcon_witness,
)
from pathemb.solvers.brute import brute_force_embedding, is_embedding
from pathemb.solvers.paths import LongShortInstance, exact_path, long_path_from, shortest_path, solve_longshort
from pathemb.structures import Graph, StructureError, gaifman


def column(x: str) -> int:
    return int(x.rsplit(",p", 1)[1].rstrip(")"))


def row(x: str) -> str:
    return x[1:].rsplit(",p", 1)[0]


# ---------------------------------------------------------------- gadget


def small_path(n=4):
    return Graph.from_pairs(range(n), [(j, j + 1) for j in range(n - 1)])


def test_universe_is_the_product():
    P = gen_family(2, 5)
    G = small_path(3)
    B = build_B(GadgetSpec(G, P, (1, 3), 0, 2))
    assert len(B) == len(G) * P.k
    assert B.relations["root"] == {(element(0, "p1"),)}


def test_spec_invariants():
    P = gen_family(2, 5)
    G = small_path(3)
    for bad in [(0,), (5,), (3, 1), (2, 2)]:
        with pytest.raises(StructureError):
            GadgetSpec(G, P, bad, 0, 2)
    with pytest.raises(StructureError):
        GadgetSpec(G, P, (1,), 0, 9)


def test_drawn_example_with_a_directed_graph():
    # forward, forward, forward, then four backward edges; X = {e2, e6}
    P = path_from_orientations([FORWARD] * 3 + [BACKWARD] * 4)
    assert unfoldable_edges(P) == [2, 3, 5, 6, 7]
    rows = ["s", "g", "g'", "t"]
    arcs = [("s", "g'"), ("g", "s"), ("g'", "t"), ("g", "t")]
    B = gadget_structure(P, rows, arcs, (2, 6), "s", "t")

    def cell(r, j):
        return element(r, f"p{j}")

    expected = {
        (cell(r, a), cell(r, b))
        for r, pairs in {
            "s": [(1, 2), (2, 3), (3, 4), (5, 4), (6, 5), (7, 6)],
            "g": [(1, 2), (3, 4), (5, 4), (6, 5), (7, 6)],
            "g'": [(1, 2), (3, 4), (5, 4), (6, 5), (7, 6)],
            "t": [(1, 2), (3, 4), (5, 4), (6, 5), (7, 6), (8, 7)],
        }.items()
        for a, b in pairs
    }
    expected |= {
        (cell("s", 2), cell("g'", 3)),
        (cell("g'", 7), cell("s", 6)),
        (cell("t", 7), cell("g'", 6)),
        (cell("s", 7), cell("g", 6)),
        (cell("t", 7), cell("g", 6)),
    }
    assert B.relations["E"] == expected
    assert B.relations["root"] == {(cell("s", 1),)}


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5), st.sampled_from([1, 2, 3, 4]), st.integers(4, 8), st.randoms(use_true_random=False))
def test_gadget_projections_and_grid(n, family, size, rnd):
    rng = random.Random(rnd.random())
    G = random_graph(rng, n, 0.5)
    P = gen_family(family, size)
    X = tuple(sorted(rng.sample(range(1, P.k), rng.randint(0, min(3, P.k - 1)))))
    s, t = rng.choice(G.vertices), rng.choice(G.vertices)
    B = build_B(GadgetSpec(G, P, X, s, t))
    for e in gaifman(B).edges:
        x, y = sorted(e, key=column)
        # grid: neighbours sit in adjacent columns
        assert column(y) - column(x) == 1
        gx, gy = row(x), row(y)
        if gx != gy:
            assert column(x) in X
            assert G.has_edge(int(gx), int(gy))
    for x, y in B.relations["E"]:
        assert (f"p{column(x)}", f"p{column(y)}") in P.base.relations["E"]
    # rows stay fixed across edges outside X
    for x, y in B.relations["E"]:
        if min(column(x), column(y)) not in X:
            assert row(x) == row(y)


# ------------------------------------------------------------- selectors


def test_case1_selection():
    P = gen_family(2, 9)
    assert unfoldable_edges(P)[:2] == [2, 4]
    assert select_X_case1(P, 2) == (1, 3)
    with pytest.raises(StructureError):
        select_X_case1(gen_family(1, 7), 1)
    assert select_X_case1(gen_family(1, 7), 0) == ()


@pytest.mark.parametrize("size", range(5, 10))
def test_case2_selection(size):
    P = gen_family(3, size)
    last = P.k - 1
    assert max_degree(P, last) >= 2
    assert select_X_case2(P, 2) == (last - 2, last - 1)
    assert select_X_case2(P, 0) == ()
    with pytest.raises(StructureError):
        select_X_case2(gen_family(1, size), 1)


# --------------------------------------------------------- ustcon to emb


def test_adjacent_s_and_t_give_a_yes_instance():
    G = Graph.from_pairs(range(3), [(0, 1)])
    P, B = reduce_ustcon(G, 0, 1, 1, family_supply(2), 1)
    assert brute_force_embedding(P.base, B) is not None


def test_separated_s_and_t_give_a_no_instance():
    G = Graph.from_pairs(range(4), [(0, 1), (2, 3)])
    P, B = reduce_ustcon(G, 0, 3, 1, family_supply(2), 1)
    assert brute_force_embedding(P.base, B) is None


def test_exhausted_supply():
    with pytest.raises(StructureError, match="exhausted"):
        reduce_ustcon(small_path(2), 0, 1, 1, family_supply(1), 1, scan_limit=5)
    with pytest.raises(ValueError):
        reduce_ustcon(small_path(2), 0, 1, 1, family_supply(2), 3)


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_stretched_paths_embed(ell):
    P = gen_family(2, 2 * ell + 3)
    X = select_X_case1(P, ell)
    G = small_path(ell + 1)
    spec = GadgetSpec(G, P, X, 0, ell)
    B = build_B(spec)
    witness = ustcon_witness(spec)
    assert witness is not None and is_embedding(P.base, B, witness)
    # a shorter path, padded with its endpoint, works too
    short = GadgetSpec(G, P, X, 0, ell - 1)
    w = stretch_path_witness(P, X, shortest_path(G, 0, ell - 1))
    assert is_embedding(P.base, build_B(short), w)
    with pytest.raises(ValueError):
        stretch_path_witness(P, X[:-1], shortest_path(G, 0, ell))


def test_path_too_long_for_X_has_no_witness():
    P = gen_family(2, 7)
    spec = GadgetSpec(small_path(4), P, select_X_case1(P, 2), 0, 3)
    assert ustcon_witness(spec) is None
    assert brute_force_embedding(P.base, build_B(spec)) is None


# ------------------------------------------------------------ P_{k,ell}


def test_P_kl_examples():
    P = make_P_kl(1, 3)
    assert P.enumeration == ("p1", "p2", "p3", "p4")
    E = P.base.relations["E"]
    assert ("p2", "p3") in E and ("p3", "p2") not in E
    assert all((a, b) in E and (b, a) in E for a, b in [("p1", "p2"), ("p3", "p4")])
    assert make_P_kl(0, 1).base.relations["E"] == {("p1", "p2")}
    with pytest.raises(ValueError):
        make_P_kl(3, 3)


@pytest.mark.parametrize("k, ell", [(k, ell) for ell in range(2, 9) for k in range(ell) if k + 3 <= ell + 1])
def test_P_kl_single_unfoldable_edge(k, ell):
    P = make_P_kl(k, ell)
    assert unfoldable_edges(P) == [k + 2]
    assert max_degree(P, k + 2) == 1


@pytest.mark.parametrize("k, ell", [(k, ell) for ell in range(1, 8) for k in range(ell)])
def test_P_kl_orientation(k, ell):
    # symmetric edges remain on every path but the single-arc one
    assert is_rooted_oriented_path(make_P_kl(k, ell)) == (ell == 1)


# ------------------------------------------------------- longshort to emb


def test_longshort_target_shape():
    G = small_path(4)
    P, Gp = reduce_longshort(G, 0, 2, 1, 4)
    assert len(Gp) == len(G) + 4 - 1
    E = Gp.relations["E"]
    assert ("2", "q1") in E and ("q1", "2") not in E
    assert {("q1", "q2"), ("q2", "q1"), ("q2", "q3"), ("q3", "q2")} <= E
    assert Gp.relations["root"] == {("0",)}
    with pytest.raises(StructureError):
        reduce_longshort(Graph.from_pairs(["q1", "x"], [("q1", "x")]), "x", "q1", 0, 2)


def test_longshort_witnesses():
    G = small_path(5)
    P, Gp = reduce_longshort(G, 0, 2, 2, 3)
    long = long_path_from(G, 0, 3)
    assert is_embedding(P.base, Gp, longshort_witness(G, 0, 2, 2, 3, long))
    P, Gp = reduce_longshort(G, 1, 3, 2, 6)
    short = exact_path(G, 1, 3, 2)
    w = longshort_witness(G, 1, 3, 2, 6, short)
    assert is_embedding(P.base, Gp, w)
    assert [w[f"p{j}"] for j in range(4, 8)] == ["q1", "q2", "q3", "q4"]
    with pytest.raises(ValueError):
        longshort_witness(G, 1, 3, 2, 6, [1, 2])


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6), st.data())
def test_longshort_round_trip(n, data):
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    G = random_graph(rng, n, 0.4)
    s, t = data.draw(st.sampled_from(G.vertices)), data.draw(st.sampled_from(G.vertices))
    ell = data.draw(st.integers(1, 4))
    k = data.draw(st.integers(0, ell - 1))
    P, Gp = reduce_longshort(G, s, t, k, ell)
    expected = solve_longshort(LongShortInstance(G, s, t, k, ell))
    assert (brute_force_embedding(P.base, Gp) is not None) == expected
