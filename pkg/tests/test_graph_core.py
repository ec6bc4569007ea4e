from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mergraph import (
    complement,
    complete_graph,
    construct_gamma_gamma_merg,
    construct_gamma_merg,
    graph_from_edge_text,
    graph_from_json,
    graph_to_edge_text,
    graph_to_json,
    induced_edge_count,
    is_spanning_subgraph,
    max_clique_size,
    new_graph,
    parse_graph,
)
from conftest import brute_max_clique, random_graph


@st.composite
def graphs(draw, max_n: int = 10):
    n = draw(st.integers(min_value=1, max_value=max_n))
    possible = list(combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(possible), max_size=len(possible))) if possible else []
    return new_graph(n, edges)


class TestNewGraph:
    def test_dedup_of_reversed_pair(self):
        g = new_graph(3, [(0, 1), (1, 0), (1, 2)])
        assert g.edges == frozenset({(0, 1), (1, 2)})

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            new_graph(2, [(0, 0)])

    def test_zero_nodes_rejected(self):
        with pytest.raises(ValueError):
            new_graph(0, [])

    def test_endpoint_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            new_graph(3, [(0, 3)])

    def test_complete_graph_degrees(self):
        g = complete_graph(9)
        assert len(g.edges) == 36
        assert all(g.degree(i) == 8 for i in range(9))


class TestNeighbors:
    def test_k4(self):
        assert complete_graph(4).neighbors(2) == {0, 1, 3}

    def test_path_midpoint(self):
        g = new_graph(3, [(0, 1), (1, 2)])
        assert g.neighbors(1) == {0, 2}

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            complete_graph(3).neighbors(3)

    def test_max_r_construction_core_degrees(self):
        # every node of the dense core of the 9-node construction has degree >= 5
        g, _ = construct_gamma_merg(9)
        assert all(g.degree(i) >= 5 for i in range(6))


class TestComplement:
    def test_complete_to_empty(self):
        assert complement(complete_graph(4)).edges == frozenset()

    def test_empty_to_complete(self):
        g = new_graph(3, [])
        assert complement(g) == complete_graph(3)

    def test_minimal_rs_graph_complement_is_tiny(self):
        g, _ = construct_gamma_gamma_merg(10)
        assert len(complement(g).edges) == 45 - 43 == 2

    @settings(max_examples=60)
    @given(graphs(max_n=12))
    def test_involution(self, g):
        assert complement(complement(g)) == g


class TestSpanningSubgraph:
    def test_cycle_inside_complete(self):
        c4 = new_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        assert is_spanning_subgraph(complete_graph(4), c4)
        assert not is_spanning_subgraph(c4, complete_graph(4))

    def test_odd_minimal_rs_graph_is_complete(self):
        g, _ = construct_gamma_gamma_merg(9)
        assert is_spanning_subgraph(complete_graph(9), g)
        assert is_spanning_subgraph(g, complete_graph(9))

    def test_node_count_mismatch(self):
        with pytest.raises(ValueError):
            is_spanning_subgraph(complete_graph(3), complete_graph(4))

    @settings(max_examples=60)
    @given(graphs(max_n=8), graphs(max_n=8))
    def test_mutual_spanning_is_equality(self, g, h):
        if g.n != h.n:
            return
        if is_spanning_subgraph(g, h) and is_spanning_subgraph(h, g):
            assert g == h


class TestInducedEdgeCount:
    def test_k5_triangle(self):
        assert induced_edge_count(complete_graph(5), {0, 2, 4}) == 3

    def test_small_subsets(self):
        g = complete_graph(6)
        assert induced_edge_count(g, set()) == 0
        assert induced_edge_count(g, {3}) == 0

    def test_core_of_9_node_construction(self):
        g, _ = construct_gamma_merg(9)
        assert induced_edge_count(g, {0, 1, 2, 3, 4, 5}) == 15

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            induced_edge_count(complete_graph(3), {0, 5})


class TestMaxClique:
    def test_complete(self):
        assert max_clique_size(complete_graph(7)) == 7

    def test_cycle(self):
        c5 = new_graph(5, [(i, (i + 1) % 5) for i in range(5)])
        assert max_clique_size(c5) == 2

    def test_10_node_max_r_construction(self):
        g, _ = construct_gamma_merg(10)
        assert max_clique_size(g) == 4

    def test_against_subset_enumeration(self):
        rng = random.Random(11)
        for _ in range(120):
            g = random_graph(rng, rng.randint(1, 10), rng.choice([0.2, 0.5, 0.8]))
            assert max_clique_size(g) == brute_max_clique(g)


@settings(max_examples=80)
@given(graphs(max_n=12))
def test_degree_sum_is_twice_edge_count(g):
    assert sum(g.degree(i) for i in range(g.n)) == 2 * len(g.edges)


class TestSerialization:
    def test_json_round_trip(self):
        g, _ = construct_gamma_merg(10)
        assert graph_from_json(graph_to_json(g)) == g

    def test_json_is_canonical(self):
        g = new_graph(4, [(2, 3), (0, 1)])
        assert graph_to_json(g) == '{"n":4,"edges":[[0,1],[2,3]]}\n'

    def test_edge_text_round_trip(self):
        g, _ = construct_gamma_gamma_merg(10)
        assert graph_from_edge_text(graph_to_edge_text(g)) == g

    def test_parse_sniffs_format(self):
        g = new_graph(3, [(0, 2)])
        assert parse_graph(graph_to_json(g)) == g
        assert parse_graph(graph_to_edge_text(g)) == g
        assert parse_graph("3\n0 2\n") == g

    def test_bad_json_rejected(self):
        with pytest.raises(ValueError):
            graph_from_json('{"nodes": 3}')

    def test_bad_edge_text_rejected(self):
        with pytest.raises(ValueError):
            graph_from_edge_text("3\n0 1 2\n")
