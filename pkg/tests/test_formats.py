#!/usr/bin/env python
# -*- coding: utf-8 -*-

import json
import os

import mock

from eternalguard.clustering import GuardFleet, decompose
from eternalguard.exceptions import GraphFormatError, InvalidVertex
from eternalguard.formats import (
    format_edge_list, graph_from_dict, graph_to_dict, load_attacks,
    parse_attacks, parse_edge_list, parse_random_source, plan_from_dict,
    plan_to_dict, read_graph, read_plan, write_graph, write_plan)
from eternalguard.security import random_attacks

from .base import TestCase
from .utils import (
    FIG5_PATH, data_path, fig5_graph, fig5_plan, path_graph, tempdir, v)


class EdgeListTests(TestCase):

    def test_fig5_file(self):
        g = read_graph(FIG5_PATH)
        self.assertEqual(g.vertex_count, 12)
        self.assertEqual(len(g.edges), 17)
        # natural order, so v10 comes after v9
        self.assertEqual(g.labels[8:10], ('v9', 'v10'))

    def test_integer_endpoints(self):
        g = parse_edge_list(['3 2', '0 1', '1 2'])
        self.assertIsNone(g.labels)
        self.assertEqual(g.sorted_edges(), [(0, 1), (1, 2)])

    def test_comments_and_blank_lines(self):
        g = parse_edge_list([
            '# header next', '', '2 1  # two vertices', '   ', 'a b # edge'])
        self.assertEqual(g.labels, ('a', 'b'))
        self.assertEqual(len(g.edges), 1)

    def test_isolated_integer_vertex(self):
        g = parse_edge_list(['4 1', '0 1'])
        self.assertEqual(g.vertex_count, 4)

    def test_missing_header(self):
        with self.assertRaises(GraphFormatError) as cm:
            parse_edge_list(['# nothing'])
        self.assertEqual(cm.exception.line, 1)

    def test_bad_header(self):
        with self.assertRaises(GraphFormatError) as cm:
            parse_edge_list(['# comment', 'three 2', '0 1'])
        self.assertEqual(cm.exception.line, 2)

    def test_edge_count_mismatch(self):
        with self.assertRaises(GraphFormatError) as cm:
            parse_edge_list(['3 3', '0 1', '1 2'])
        self.assertEqual(cm.exception.line, 1)
        self.assertIn('3 edges', str(cm.exception))

    def test_three_tokens(self):
        with self.assertRaises(GraphFormatError) as cm:
            parse_edge_list(['3 2', '0 1', '1 2 3'])
        self.assertEqual(cm.exception.line, 3)

    def test_out_of_range(self):
        with self.assertRaises(GraphFormatError) as cm:
            parse_edge_list(['3 2', '0 1', '1 3'])
        self.assertEqual(cm.exception.line, 3)

    def test_self_loop(self):
        with self.assertRaises(GraphFormatError) as cm:
            parse_edge_list(['2 2', 'a b', 'b b'])
        self.assertEqual(cm.exception.line, 3)

    def test_label_count_mismatch(self):
        with self.assertRaises(GraphFormatError) as cm:
            parse_edge_list(['4 2', 'a b', 'b c'])
        self.assertIn('3 distinct labels', str(cm.exception))

    def test_format_round_trip(self):
        g = fig5_graph()
        text = format_edge_list(g)
        self.assertTrue(text.startswith('12 17\nv1 v2\n'))
        self.assertEqual(parse_edge_list(text.splitlines()), g)

    def test_utf16_file(self):
        with tempdir() as path:
            filename = os.path.join(path, 'g.edges')
            with open(filename, 'w', encoding='utf-16') as f:
                f.write('2 1\nä ö\n')
            self.assertEqual(read_graph(filename).labels, ('ä', 'ö'))


class GraphDictTests(TestCase):

    def test_round_trip(self):
        g = fig5_graph()
        d = json.loads(json.dumps(graph_to_dict(g)))
        self.assertEqual(graph_from_dict(d), g)
        self.assertEqual(graph_from_dict(d).labels, g.labels)

    def test_unlabelled(self):
        d = graph_to_dict(path_graph(3))
        self.assertNotIn('labels', d)
        self.assertEqual(d['edges'], [[0, 1], [1, 2]])

    def test_field_errors(self):
        cases = [
            ({'vertices': -1}, 'vertices'),
            ({'vertices': True}, 'vertices'),
            ({'vertices': 2, 'edges': 'x'}, 'edges'),
            ({'vertices': 2, 'edges': [[0]]}, 'edges'),
            ({'vertices': 2, 'edges': [[0, 2]]}, 'edges'),
            ({'vertices': 2, 'edges': [], 'labels': 'ab'}, 'labels'),
            ({'vertices': 2, 'edges': [], 'labels': ['a']}, 'labels'),
        ]
        for d, field in cases:
            with self.assertRaises(GraphFormatError) as cm:
                graph_from_dict(d)
            self.assertEqual(cm.exception.field, field, d)

    def test_json_file(self):
        with tempdir() as path:
            filename = os.path.join(path, 'g.json')
            write_graph(fig5_graph(), filename)
            self.assertEqual(read_graph(filename), fig5_graph())

    def test_invalid_json(self):
        with tempdir() as path:
            filename = os.path.join(path, 'g.json')
            with open(filename, 'w') as f:
                f.write('{\n"vertices": 3,\n}')
            with self.assertRaises(GraphFormatError) as cm:
                read_graph(filename)
            self.assertEqual(cm.exception.line, 3)

    def test_unknown_format(self):
        with self.assertRaises(GraphFormatError):
            read_graph(FIG5_PATH, format='gml')


class PlanDictTests(TestCase):

    def test_labels_in_output(self):
        d = plan_to_dict(fig5_plan())
        self.assertEqual(d['clusters'][1]['vertices'], ['v9', 'v10'])
        self.assertEqual(d['clusters'][0]['range'], 3)
        self.assertEqual(d['fleet'], {'ranges': [3, 1], 'counts': [1, 2]})
        self.assertEqual(d['uncovered'], [])

    def test_round_trip(self):
        plan = decompose(path_graph(5), GuardFleet([1], [1]))
        d = json.loads(json.dumps(plan_to_dict(plan)))
        self.assertEqual(plan_from_dict(d), plan)

    def test_file_round_trip(self):
        with tempdir() as path:
            filename = os.path.join(path, 'plan.json')
            write_plan(fig5_plan(), filename)
            self.assertEqual(read_plan(filename), fig5_plan())

    def test_missing_field(self):
        d = plan_to_dict(fig5_plan())
        del d['clusters']
        with self.assertRaises(GraphFormatError) as cm:
            plan_from_dict(d)
        self.assertEqual(cm.exception.field, 'clusters')

    def test_unknown_cluster_vertex(self):
        d = plan_to_dict(fig5_plan())
        d['clusters'][2]['vertices'] = ['v11', 'v99']
        with self.assertRaises(GraphFormatError) as cm:
            plan_from_dict(d)
        self.assertEqual(cm.exception.field, 'clusters[2].vertices')

    def test_bad_cluster_id(self):
        d = plan_to_dict(fig5_plan())
        d['clusters'][0]['id'] = '1'
        with self.assertRaises(GraphFormatError) as cm:
            plan_from_dict(d)
        self.assertEqual(cm.exception.field, 'clusters[0].id')

    def test_cluster_wider_than_range(self):
        d = plan_to_dict(fig5_plan())
        d['clusters'][0]['range'] = 1
        with self.assertRaises(GraphFormatError) as cm:
            plan_from_dict(d)
        self.assertEqual(cm.exception.field, 'clusters')

    def test_not_a_partition(self):
        d = plan_to_dict(fig5_plan())
        d['uncovered'] = ['v12']
        with self.assertRaises(GraphFormatError) as cm:
            plan_from_dict(d)
        self.assertEqual(cm.exception.field, 'clusters')

    def test_bad_fleet(self):
        d = plan_to_dict(fig5_plan())
        d['fleet'] = {'ranges': [1, 3], 'counts': [2, 1]}
        with self.assertRaises(GraphFormatError) as cm:
            plan_from_dict(d)
        self.assertEqual(cm.exception.field, 'fleet')


class AttackTests(TestCase):

    def test_single_attacks(self):
        attacks = load_attacks(data_path('fig5_attacks.txt'), fig5_plan())
        self.assertEqual(attacks, [v(1), v(5), v(9), v(11), v(12), v(8)])

    def test_batches(self):
        attacks = load_attacks(
            data_path('fig5_batches.txt'), fig5_plan(), batch=True)
        self.assertEqual(attacks, [
            frozenset([v(5), v(9), v(11)]),
            frozenset([v(1)]),
            frozenset([v(5), v(6)]),
        ])

    def test_indices(self):
        self.assertEqual(
            parse_attacks(['0 2', '1'], path_graph(3)), [0, 2, 1])

    def test_unknown_label(self):
        with self.assertRaises(InvalidVertex) as cm:
            parse_attacks(['v1', '# skip', 'v13'], fig5_graph())
        self.assertIn('line 3', str(cm.exception))

    def test_list_source(self):
        plan = fig5_plan()
        self.assertEqual(load_attacks(['v2', 'v3'], plan), [v(2), v(3)])
        self.assertEqual(
            load_attacks([['v5', 'v9']], plan, batch=True),
            [frozenset([v(5), v(9)])])

    def test_random_source(self):
        self.assertEqual(parse_random_source('random:100:7'), (100, 7))
        self.assertIsNone(parse_random_source('attacks.txt'))
        for bad in ('random:100', 'random:x:1', 'random:-1:3'):
            with self.assertRaises(GraphFormatError):
                parse_random_source(bad)

    def test_random_attacks_loaded(self):
        plan = fig5_plan()
        self.assertEqual(
            load_attacks('random:50:3', plan), random_attacks(plan, 50, 3))

    def test_environment_overrides_seed(self):
        plan = fig5_plan()
        with mock.patch.dict(os.environ, {'ETERNAL_GUARD_SEED': '5'}):
            attacks = load_attacks('random:50:3', plan)
        self.assertEqual(attacks, random_attacks(plan, 50, 5))
        self.assertNotEqual(attacks, random_attacks(plan, 50, 3))
