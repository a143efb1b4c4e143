import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gpindex import coarsen, quotient_graph, theta_star_partition, weight_by_orbit
from gpindex.graph import is_connected
from gpindex.quotient import decomposed_distances
from gpindex.relations import EdgePartition

from graphs_util import complete, connected_graphs, cycle, random_grouping, tree_t

F1 = [0, 1, 2]
F2 = [3, 4, 5, 6, 7, 8]


def _is_star(g, centre):
    return all(set(e) & {centre} for e in g.edges) and g.edge_count == g.vertex_count - 1


def test_tree_quotient_by_centre_edges():
    q = quotient_graph(tree_t(), F1)
    assert q.size == 4
    assert q.members == ((0,), (1, 4, 5), (2, 6, 7), (3, 8, 9))
    assert _is_star(q.quotient, 0)
    assert q.weights == (0, 0, 0, 0)


def test_tree_quotient_by_leaf_edges():
    q = quotient_graph(tree_t(), F2)
    assert q.size == 7
    assert q.members[0] == (0, 1, 2, 3)
    assert _is_star(q.quotient, 0)


def test_component_of_inverts_members():
    q = quotient_graph(tree_t(), F2)
    for c, members in enumerate(q.members):
        assert all(q.component_of[v] == c for v in members)


def test_empty_block_contracts_everything():
    q = quotient_graph(cycle(5), [])
    assert q.size == 1 and q.quotient.edge_count == 0


def test_full_block_returns_graph():
    g = complete(4)
    q = quotient_graph(g, range(g.edge_count))
    assert q.size == 4
    assert sorted(q.quotient.edges) == sorted(g.edges)


def test_parallel_adjacencies_collapse():
    g = cycle(4)
    q = quotient_graph(g, [g.edge_id(0, 1), g.edge_id(2, 3)])
    assert q.size == 2 and q.quotient.edges == ((0, 1),)


@pytest.mark.parametrize(
    "block, orbit, weights",
    [
        (F1, [1, 2, 3], (0, 1, 1, 1)),
        (F1, [4, 5, 6, 7, 8, 9], (0, 2, 2, 2)),
        (F2, [0], (1, 0, 0, 0, 0, 0, 0)),
    ],
)
def test_orbit_weights(block, orbit, weights):
    q = weight_by_orbit(quotient_graph(tree_t(), block), orbit)
    assert q.weights == weights
    assert sum(q.weights) == len(orbit)


@given(g=connected_graphs(min_vertices=2, max_vertices=14), seed=st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_quotients_connected(g, seed):
    base = theta_star_partition(g)
    for block in base.blocks:
        assert is_connected(quotient_graph(g, block).quotient)


@given(g=connected_graphs(min_vertices=1, max_vertices=16), seed=st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_distance_decomposes_over_coarser_partitions(g, seed):
    base = theta_star_partition(g)
    p = coarsen(base, random_grouping(len(base), random.Random(seed)))
    assert np.array_equal(decomposed_distances(g, p), g.distances)


def test_trivial_partition_decomposition():
    g = complete(5)
    whole = EdgePartition.from_blocks([range(g.edge_count)], g.edge_count)
    assert np.array_equal(decomposed_distances(g, whole), g.distances)


def test_decomposition_fails_when_not_coarser():
    # splitting an opposite-edge class of C6 breaks the identity
    g = cycle(6)
    p = EdgePartition.from_blocks([[0, 1, 2], [3, 4, 5]], 6)
    assert not np.array_equal(decomposed_distances(g, p), g.distances)
