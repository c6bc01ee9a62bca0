#!/usr/bin/env python
# -*- coding: utf-8 -*-

import networkx
import numpy as np
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st

from eternalguard.exceptions import (
    EmptyGraph, InvalidEdge, InvalidRange, InvalidVertex)
from eternalguard.graph import (
    UNREACHABLE, all_pairs_distances, build_graph, components, diameter,
    graph_power, induced_subgraph, is_connected, list_to_mask, mask_to_list)

from .base import TestCase
from .utils import (
    complete_graph, fig5_graph, fig7_graph, path_graph, random_graph,
    seeded_rng, small_graphs, to_networkx, v)

# rows v1..v12, columns v1..v12
FIG5_DISTANCES = [
    [0, 1, 1, 2, 3, 3, 2, 2, 3, 2, 3, 2],
    [1, 0, 2, 1, 2, 2, 1, 3, 2, 1, 4, 3],
    [1, 2, 0, 1, 2, 2, 3, 1, 4, 3, 2, 1],
    [2, 1, 1, 0, 1, 1, 2, 2, 3, 2, 3, 2],
    [3, 2, 2, 1, 0, 1, 1, 2, 2, 3, 3, 3],
    [3, 2, 2, 1, 1, 0, 2, 1, 3, 3, 2, 3],
    [2, 1, 3, 2, 1, 2, 0, 3, 1, 2, 4, 4],
    [2, 3, 1, 2, 2, 1, 3, 0, 4, 4, 1, 2],
    [3, 2, 4, 3, 2, 3, 1, 4, 0, 1, 5, 5],
    [2, 1, 3, 2, 3, 3, 2, 4, 1, 0, 5, 4],
    [3, 4, 2, 3, 3, 2, 4, 1, 5, 5, 0, 1],
    [2, 3, 1, 2, 3, 3, 4, 2, 5, 4, 1, 0],
]


class BuildGraphTests(TestCase):

    def test_fig5_shape(self):
        g = fig5_graph()
        self.assertEqual(g.vertex_count, 12)
        self.assertEqual(len(g.edges), 17)
        self.assertEqual(g.label(0), 'v1')
        self.assertEqual(g.label(11), 'v12')
        self.assertTrue(g.has_edge(v(5), v(7)))
        self.assertFalse(g.has_edge(v(1), v(4)))

    def test_duplicate_edges_collapse(self):
        g = build_graph(3, [(0, 1), (1, 0), (0, 1), (1, 2)])
        self.assertEqual(g.sorted_edges(), [(0, 1), (1, 2)])
        self.assertEqual(g.degree(1), 2)
        self.assertEqual(g.neighbors(1), [0, 2])

    def test_self_loop(self):
        with self.assertRaises(InvalidEdge):
            build_graph(3, [(0, 1), (2, 2)])

    def test_vertex_out_of_range(self):
        with self.assertRaises(InvalidVertex):
            build_graph(3, [(0, 3)])
        with self.assertRaises(InvalidVertex):
            build_graph(3, [(-1, 2)])

    def test_bad_vertex_count(self):
        with self.assertRaises(InvalidVertex):
            build_graph(-1, [])
        with self.assertRaises(InvalidVertex):
            build_graph('3', [])

    def test_labels_must_match(self):
        with self.assertRaises(InvalidVertex):
            build_graph(2, [(0, 1)], labels=['a'])
        with self.assertRaises(InvalidVertex):
            build_graph(2, [(0, 1)], labels=['a', 'a'])

    def test_index_of(self):
        g = fig5_graph()
        self.assertEqual(g.index_of('v10'), 9)
        self.assertEqual(g.index_of(3), 3)
        with self.assertRaises(InvalidVertex):
            g.index_of('v13')
        with self.assertRaises(InvalidVertex):
            g.index_of(12)

    def test_equality_and_digest(self):
        a = build_graph(3, [(0, 1), (1, 2)])
        b = build_graph(3, [(2, 1), (1, 0)])
        c = build_graph(3, [(0, 1)])
        self.assertEqual(a, b)
        self.assertEqual(a.digest, b.digest)
        self.assertNotEqual(a, c)
        self.assertNotEqual(a.digest, c.digest)

    def test_masks(self):
        self.assertEqual(mask_to_list(list_to_mask([5, 0, 3])), [0, 3, 5])
        self.assertEqual(mask_to_list(0), [])


class DistanceTests(TestCase):

    def test_fig5_matrix(self):
        dm = all_pairs_distances(fig5_graph())
        np.testing.assert_array_equal(dm.matrix, np.array(FIG5_DISTANCES))

    def test_fig5_examples(self):
        dm = all_pairs_distances(fig5_graph())
        self.assertEqual(dm.distance(v(1), v(5)), 3)
        self.assertEqual(dm.distance(v(1), v(9)), 3)
        self.assertEqual(dm.distance(v(9), v(11)), 5)

    def test_fig5_diameter(self):
        # v9 - v7 - v5 - v6 - v8 - v11 is a shortest path
        self.assertEqual(diameter(fig5_graph()), 5)

    def test_matrix_is_read_only(self):
        dm = all_pairs_distances(path_graph(3))
        with self.assertRaises(ValueError):
            dm.matrix[0, 1] = 7

    def test_cached(self):
        g = path_graph(4)
        self.assertIs(all_pairs_distances(g), all_pairs_distances(g))

    def test_disconnected(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        dm = all_pairs_distances(g)
        self.assertEqual(dm.distance(0, 1), 1)
        self.assertEqual(dm.distance(0, 2), UNREACHABLE)
        self.assertFalse(dm.distance(0, 2) <= 1000)
        self.assertEqual(diameter(g), UNREACHABLE)
        self.assertFalse(is_connected(g))
        self.assertEqual(components(g), [{0, 1}, {2, 3}])

    def test_single_vertex(self):
        g = build_graph(1, [])
        self.assertEqual(diameter(g), 0)
        self.assertTrue(is_connected(g))

    def test_empty_graph(self):
        g = build_graph(0, [])
        self.assertEqual(all_pairs_distances(g).matrix.shape, (0, 0))
        self.assertEqual(components(g), [])
        with self.assertRaises(EmptyGraph):
            diameter(g)

    def test_eccentricity(self):
        dm = all_pairs_distances(fig5_graph())
        self.assertEqual(dm.eccentricity(v(4)), 3)
        self.assertEqual(dm.eccentricity(v(4), within=range(8)), 2)
        self.assertEqual(dm.eccentricity(v(9)), 5)

    def test_pair_sum_is_ordered(self):
        dm = all_pairs_distances(fig5_graph())
        self.assertEqual(dm.pair_sum(range(8)), 100)
        self.assertEqual(dm.pair_sum([v(9), v(10)]), 2)

    def test_against_networkx(self):
        rng = seeded_rng(11)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 14), rng.random())
            dm = all_pairs_distances(g)
            lengths = dict(networkx.all_pairs_shortest_path_length(
                to_networkx(g)))
            for a in g.vertices:
                for b in g.vertices:
                    self.assertEqual(
                        dm.distance(a, b), lengths[a].get(b, UNREACHABLE))


    @hypothesis_settings(max_examples=80, deadline=None)
    @given(small_graphs(max_vertices=12))
    def test_metric_properties(self, g):
        d = all_pairs_distances(g).matrix
        np.testing.assert_array_equal(d, d.T)
        np.testing.assert_array_equal(np.diag(d), np.zeros(g.vertex_count))
        for k in g.vertices:
            self.assertTrue((d <= d[:, [k]] + d[[k], :]).all())


class GraphPowerTests(TestCase):

    def test_range_one_is_identity(self):
        g = fig5_graph()
        self.assertIs(graph_power(g, 1), g)

    def test_invalid_range(self):
        for r in (0, -2, 1.5, None):
            with self.assertRaises(InvalidRange):
                graph_power(fig5_graph(), r)

    def test_diameter_power_is_complete(self):
        g = fig5_graph()
        power = graph_power(g, diameter(g))
        self.assertEqual(len(power.edges), 12 * 11 // 2)
        self.assertEqual(power.labels, g.labels)

    def test_fig5_cube(self):
        g = fig5_graph()
        cube = graph_power(g, 3)
        for a in g.vertices:
            for b in g.vertices:
                if a != b:
                    self.assertEqual(
                        cube.has_edge(a, b), FIG5_DISTANCES[a][b] <= 3)

    def test_does_not_join_components(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        self.assertEqual(graph_power(g, 5).sorted_edges(), [(0, 1), (2, 3)])

    def test_complete_graph_fixed_point(self):
        g = complete_graph(5)
        self.assertEqual(graph_power(g, 2), g)

    @hypothesis_settings(max_examples=80, deadline=None)
    @given(small_graphs(), st.integers(min_value=1, max_value=5))
    def test_powers_are_nested(self, g, r):
        self.assertLessEqual(
            graph_power(g, r).edges, graph_power(g, r + 1).edges)

    @hypothesis_settings(max_examples=60, deadline=None)
    @given(small_graphs(), st.integers(min_value=1, max_value=4))
    def test_against_networkx_power(self, g, r):
        expected = networkx.power(to_networkx(g), r) if g.edges else None
        power = graph_power(g, r)
        if expected is None:
            self.assertEqual(power.edges, frozenset())
        else:
            self.assertEqual(
                power.edges,
                frozenset(tuple(sorted(e)) for e in expected.edges()))


class InducedSubgraphTests(TestCase):

    def test_fig7_induced_distance_is_longer(self):
        g = fig7_graph()
        self.assertEqual(all_pairs_distances(g).distance(0, 3), 2)
        sub = induced_subgraph(g, [0, 1, 2, 3, 4])
        self.assertEqual(sub.vertex_count, 5)
        self.assertEqual(all_pairs_distances(sub).distance(0, 3), 3)
        self.assertEqual(diameter(sub), 3)

    def test_keeps_original_labels(self):
        g = fig5_graph()
        sub = induced_subgraph(g, [v(9), v(10), v(7)])
        self.assertEqual(sub.labels, ('v7', 'v9', 'v10'))
        self.assertEqual(sub.sorted_edges(), [(0, 1), (1, 2)])
