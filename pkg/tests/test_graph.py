import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rankvc.errors import InputError
from rankvc.graph import (Exact, Graph, MatchingApprox, Provided, emit_dimacs, gnp,
                          is_vertex_cover, maximum_matching, parse_dimacs, vertex_cover)

from conftest import beta_by_subsets, matching_by_subsets, random_graph


def test_edges_are_canonical_and_self_loops_rejected():
    g = Graph([1, 2, 3], [(2, 1), (3, 2)])
    assert g.sorted_edges() == [(1, 2), (2, 3)]
    with pytest.raises(InputError):
        Graph([1], [(1, 1)])
    with pytest.raises(InputError):
        Graph([1], [(1, 2)])


def test_star_center_deletion_isolates_leaves():
    star = Graph.from_edges([(0, 1), (0, 2), (0, 3)])
    h = star.delete_vertex(0)
    assert h.m == 0
    assert sorted(h.isolated()) == [1, 2, 3]


def test_cycle_degrees():
    c4 = Graph.cycle(4)
    assert all(c4.degree(v) == 2 for v in c4.vertices)


def test_neighbors_consistent_with_edges():
    rng = random.Random(31)
    for _ in range(30):
        g = random_graph(rng, 8, 0.4)
        for v in g.vertices:
            expect = {u for e in g.edges for u in e if v in e and u != v}
            assert g.neighbors(v) == expect
            assert g.degree(v) == len(expect)


def test_delete_edges():
    g = Graph.complete(3).delete_edges([(2, 1)])
    assert not g.has_edge(1, 2)
    assert g.m == 2
    with pytest.raises(InputError):
        g.delete_edge(1, 2)


def test_graph_is_immutable_value():
    assert Graph.path(3) == Graph([1, 2, 3], [(1, 2), (2, 3)])
    assert hash(Graph.path(3)) == hash(Graph([1, 2, 3], [(2, 3), (1, 2)]))


# -- matching --------------------------------------------------------------

def test_matching_on_cycle_and_complete():
    assert len(maximum_matching(Graph.cycle(5))) == 2
    assert len(maximum_matching(Graph.complete(4))) == 2


def test_matching_is_a_matching():
    rng = random.Random(32)
    for _ in range(30):
        g = random_graph(rng, 9, 0.35)
        mm = maximum_matching(g)
        ends = [x for e in mm for x in e]
        assert len(ends) == len(set(ends))
        assert all(g.has_edge(*e) for e in mm)


def test_matching_size_matches_exhaustive_oracle():
    rng = random.Random(33)
    for i in range(60):
        g = random_graph(rng, rng.randint(1, 10), rng.choice([0.2, 0.4, 0.6]))
        assert len(maximum_matching(g)) == matching_by_subsets(g), i


# -- vertex cover ----------------------------------------------------------

def test_exact_cover_of_triangle():
    c = vertex_cover(Graph.complete(3), Exact())
    assert len(c) == 2


def test_matching_cover_of_path():
    c = vertex_cover(Graph.path(3), MatchingApprox())
    assert c in ({1, 2}, {2, 3})


def test_exact_cover_matches_bruteforce_beta():
    rng = random.Random(34)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 12), rng.choice([0.2, 0.4, 0.6]))
        c = vertex_cover(g, Exact())
        assert is_vertex_cover(g, c)
        assert len(c) == beta_by_subsets(g)


def test_exact_cover_bound_exceeded():
    assert vertex_cover(Graph.complete(5), Exact(3)) is None
    assert len(vertex_cover(Graph.complete(5), Exact(4))) == 4


def test_matching_cover_is_two_approximation():
    rng = random.Random(35)
    for _ in range(40):
        g = random_graph(rng, 10, 0.3)
        c = vertex_cover(g, MatchingApprox())
        assert is_vertex_cover(g, c)
        assert len(c) <= 2 * beta_by_subsets(g)


def test_provided_cover_validated():
    g = Graph.path(3)
    assert vertex_cover(g, Provided({2})) == {2}
    with pytest.raises(InputError):
        vertex_cover(g, Provided({1}))
    with pytest.raises(InputError):
        vertex_cover(g, Provided({9}))


# -- DIMACS ----------------------------------------------------------------

def test_parse_triangle():
    g = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert g == Graph.complete(3)


def test_parse_skips_comments_and_keeps_isolated():
    g = parse_dimacs("c hello\np edge 4 1\nc mid\ne 4 2\n")
    assert g.n == 4 and g.sorted_edges() == [(2, 4)]


def test_emit_is_canonical():
    text = "p edge 3 2\ne 3 2\ne 2 1\n"
    assert emit_dimacs(parse_dimacs(text)) == "p edge 3 2\ne 1 2\ne 2 3\n"


def test_emit_renames_vertices():
    g = Graph([5, 9], [(9, 5)])
    assert emit_dimacs(g) == "p edge 2 1\ne 1 2\n"


@pytest.mark.parametrize("text", [
    "",
    "e 1 2\n",
    "p edge 2\n",
    "p graph 2 1\ne 1 2\n",
    "p edge 2 1\ne 1 3\n",
    "p edge 2 1\ne 1 1\n",
    "p edge 2 2\ne 1 2\ne 2 1\n",
    "p edge 2 2\ne 1 2\n",
    "p edge 2 1\ne 1 x\n",
    "p edge 2 1\np edge 2 1\n",
    "p edge -2 0\n",
    "q\n",
    "p edge 2 1\ne 1 2 3\n",
])
def test_malformed_dimacs_raises_input_error(text):
    with pytest.raises(InputError):
        parse_dimacs(text)


@settings(max_examples=200, deadline=None)
@given(st.text(alphabet="pedgc 0123456789-\n\t", max_size=60))
def test_fuzzed_dimacs_never_crashes(text):
    try:
        g = parse_dimacs(text)
    except InputError:
        return
    assert parse_dimacs(emit_dimacs(g)) == g


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2 ** 32), st.integers(0, 9))
def test_dimacs_round_trip(seed, n):
    g = random_graph(random.Random(seed), n, 0.5)
    assert parse_dimacs(emit_dimacs(g)) == g


# -- generator -------------------------------------------------------------

def test_gnp_extremes():
    assert gnp(8, 1, random.Random(0)) == Graph.complete(8)
    assert gnp(8, 0, random.Random(0)).m == 0


def test_gnp_edge_frequency():
    g = gnp(60, Fraction(1, 4), random.Random(36))
    pairs = 60 * 59 // 2
    # binomial with mean 442.5 and sd ~ 18.8
    assert abs(g.m - pairs / 4) < 5 * 18.8


def test_gnp_rejects_bad_probability():
    with pytest.raises(InputError):
        gnp(3, Fraction(3, 2), random.Random(0))
