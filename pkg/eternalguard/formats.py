#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Graph, plan and attack file formats.

Edge list::

    # comments and blank lines are ignored
    12 17
    v1 v2
    v2 v4
    ...

If every endpoint token is an integer the endpoints are 0-based indices.
Otherwise they are labels; indices are assigned in natural label order
("v2" before "v10") and the number of distinct labels must equal n.
"""

import codecs
import json
import os
from collections import OrderedDict

from eternalguard import constants_internal
from eternalguard.clustering import Cluster, ClusterPlan, GuardFleet
from eternalguard.common_internal import natural_sort_key, resolve_seed
from eternalguard.exceptions import (
    EternalGuardError, GraphFormatError, InvalidVertex)
from eternalguard.graph import build_graph, all_pairs_distances
from eternalguard.security import random_attacks

ENCODINGS = ['ascii', 'utf-8', 'utf-16']


def read_text_lines(path):
    for e in ENCODINGS:
        try:
            with codecs.open(path, 'r', encoding=e) as f:
                return f.read().splitlines()
        except UnicodeDecodeError:
            continue
    raise GraphFormatError(
        'Cannot decode {} as any of {}'.format(path, ', '.join(ENCODINGS)))


def _content_lines(lines):
    '''(line number, tokens) for lines that are not blank or comments'''
    for number, line in enumerate(lines, start=1):
        line = line.split('#', 1)[0].strip()
        if line:
            yield number, line.split()


def _is_int(token):
    try:
        int(token)
    except ValueError:
        return False
    return True


# =============================================================================
# GRAPHS
# =============================================================================

def parse_edge_list(lines):
    rows = list(_content_lines(lines))
    if not rows:
        raise GraphFormatError('Missing header "n m"', line=1)
    header_line, header = rows[0]
    if len(header) != 2 or not all(_is_int(t) for t in header):
        raise GraphFormatError(
            'Header must be two integers "n m", got "{}"'.format(
                ' '.join(header)),
            line=header_line)
    n, m = int(header[0]), int(header[1])
    if n < 0 or m < 0:
        raise GraphFormatError(
            'Header values must be non-negative', line=header_line)

    pairs = []
    for number, tokens in rows[1:]:
        if len(tokens) != 2:
            raise GraphFormatError(
                'Edge line must have two endpoints, got {}'.format(
                    len(tokens)),
                line=number)
        pairs.append((number, tokens[0], tokens[1]))
    if len(pairs) != m:
        raise GraphFormatError(
            'Header declares {} edges but {} edge lines follow'.format(
                m, len(pairs)),
            line=header_line)

    tokens = [t for _, u, v in pairs for t in (u, v)]
    if all(_is_int(t) for t in tokens):
        labels = None
        index = int
    else:
        labels = sorted(set(tokens), key=natural_sort_key)
        if len(labels) != n:
            raise GraphFormatError(
                'Header declares {} vertices but edges name {} distinct '
                'labels'.format(n, len(labels)),
                line=header_line)
        position = {label: i for i, label in enumerate(labels)}
        index = position.__getitem__

    edges = []
    for number, u, v in pairs:
        a, b = index(u), index(v)
        if labels is None and not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(
                'Edge ({}, {}) references a vertex outside 0..{}'.format(
                    a, b, n - 1),
                line=number)
        if a == b:
            raise GraphFormatError(
                'Self-loop on vertex {}'.format(u), line=number)
        edges.append((a, b))
    return build_graph(n, edges, labels)


def format_edge_list(g):
    lines = ['{} {}'.format(g.vertex_count, len(g.edges))]
    for u, v in g.sorted_edges():
        lines.append('{} {}'.format(g.label(u), g.label(v)))
    return '\n'.join(lines) + '\n'


def graph_to_dict(g):
    d = OrderedDict([
        ('vertices', g.vertex_count),
        ('edges', [[u, v] for u, v in g.sorted_edges()]),
    ])
    if g.labels is not None:
        d['labels'] = list(g.labels)
    return d


def graph_from_dict(d):
    if not isinstance(d, dict):
        raise GraphFormatError('Graph must be a JSON object')
    n = d.get('vertices')
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise GraphFormatError(
            'Must be a non-negative integer, got {!r}'.format(n),
            field='vertices')
    edges = d.get('edges', [])
    if not isinstance(edges, list):
        raise GraphFormatError('Must be a list of pairs', field='edges')
    for i, pair in enumerate(edges):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise GraphFormatError(
                'Edge {} must be a pair, got {!r}'.format(i, pair),
                field='edges')
    labels = d.get('labels')
    if labels is not None and not isinstance(labels, list):
        raise GraphFormatError('Must be a list', field='labels')
    try:
        return build_graph(n, [tuple(p) for p in edges], labels)
    except EternalGuardError as e:
        field = 'labels' if 'label' in str(e) else 'edges'
        raise GraphFormatError(str(e), field=field) from None


def _infer_format(path):
    ext = os.path.splitext(path)[1].lower()
    if ext == '.json':
        return constants_internal.format_json
    return constants_internal.format_edges


def read_graph(path, format=None):
    format = format or _infer_format(path)
    if format not in constants_internal.graph_formats:
        raise GraphFormatError(
            'Unknown graph format "{}"; use one of {}'.format(
                format, ', '.join(constants_internal.graph_formats)))
    if format == constants_internal.format_edges:
        return parse_edge_list(read_text_lines(path))
    return graph_from_dict(_load_json(path))


def write_graph(g, path, format=None):
    format = format or _infer_format(path)
    with open(path, 'w', encoding='utf-8') as f:
        if format == constants_internal.format_json:
            f.write(dumps(graph_to_dict(g)))
        else:
            f.write(format_edge_list(g))


def _load_json(path):
    try:
        with open(path, encoding='utf-8') as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise GraphFormatError(
            'Invalid JSON: {}'.format(e.msg), line=e.lineno) from None


def dumps(d):
    return json.dumps(d, indent=2) + '\n'


# =============================================================================
# PLANS
# =============================================================================

def plan_to_dict(plan):
    g = plan.graph
    return OrderedDict([
        ('graph', graph_to_dict(g)),
        ('fleet', plan.fleet.to_dict()),
        ('clusters', [
            OrderedDict([
                ('id', c.id),
                ('vertices', [g.label(v) for v in c.vertices]),
                ('range', c.guard_range),
                ('guard', c.guard_id),
            ])
            for c in plan.clusters]),
        ('uncovered', [g.label(v) for v in sorted(plan.uncovered)]),
        ('unassigned_guards', list(plan.unassigned_guards)),
    ])


def _require(d, key, types):
    if key not in d:
        raise GraphFormatError('Missing', field=key)
    value = d[key]
    if not isinstance(value, types) or isinstance(value, bool):
        raise GraphFormatError(
            'Unexpected value {!r}'.format(value), field=key)
    return value


def plan_from_dict(d):
    if not isinstance(d, dict):
        raise GraphFormatError('Plan must be a JSON object')
    g = graph_from_dict(_require(d, 'graph', dict))
    fleet_dict = _require(d, 'fleet', dict)
    try:
        fleet = GuardFleet(fleet_dict.get('ranges', []),
                           fleet_dict.get('counts', []))
    except EternalGuardError as e:
        raise GraphFormatError(str(e), field='fleet') from None

    def resolve(token, field):
        try:
            return g.index_of(token)
        except InvalidVertex as e:
            raise GraphFormatError(str(e), field=field) from None

    clusters = []
    for i, c in enumerate(_require(d, 'clusters', list)):
        field = 'clusters[{}]'.format(i)
        if not isinstance(c, dict):
            raise GraphFormatError('Must be an object', field=field)
        try:
            clusters.append(Cluster(
                id=_require(c, 'id', int),
                vertices=tuple(resolve(v, 'vertices')
                               for v in _require(c, 'vertices', list)),
                guard_range=_require(c, 'range', int),
                guard_id=_require(c, 'guard', int)))
        except GraphFormatError as e:
            raise GraphFormatError(
                e.reason, field='{}.{}'.format(field, e.field)) from None
    uncovered = [resolve(v, 'uncovered')
                 for v in _require(d, 'uncovered', list)]
    unassigned = d.get('unassigned_guards', [])

    dm = all_pairs_distances(g)
    for c in clusters:
        worst = dm.max_pairwise(c.vertices)
        if not worst <= c.guard_range:
            raise GraphFormatError(
                'Cluster {} has pairwise distance {} beyond its range '
                '{}'.format(c.id, worst, c.guard_range),
                field='clusters')
    try:
        return ClusterPlan(g, fleet, clusters, uncovered, unassigned)
    except AssertionError as e:
        raise GraphFormatError(str(e), field='clusters') from None


def read_plan(path):
    return plan_from_dict(_load_json(path))


def write_plan(plan, path):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(dumps(plan_to_dict(plan)))


# =============================================================================
# ATTACKS
# =============================================================================

def parse_attacks(lines, g, batch=False):
    '''Vertices (labels or indices) separated by whitespace. With
    ``batch``, every line is one simultaneous multi-attack.'''
    attacks = []
    for number, tokens in _content_lines(lines):
        try:
            vertices = [g.index_of(t) for t in tokens]
        except InvalidVertex as e:
            raise InvalidVertex('line {}: {}'.format(number, e)) from None
        if batch:
            attacks.append(frozenset(vertices))
        else:
            attacks.extend(vertices)
    return attacks


def parse_random_source(source):
    '''"random:N:seed" -> (N, seed), or None for anything else'''
    parts = str(source).split(':')
    if parts[0] != constants_internal.random_attacks_prefix:
        return None
    if len(parts) != 3 or not all(_is_int(p) for p in parts[1:]):
        raise GraphFormatError(
            'Random attack source must look like "random:N:seed", '
            'got "{}"'.format(source),
            field='attacks')
    count, seed = int(parts[1]), int(parts[2])
    if count < 0 or seed < 0:
        raise GraphFormatError(
            'Count and seed must be non-negative', field='attacks')
    return count, seed


def load_attacks(source, plan, batch=False):
    if isinstance(source, (list, tuple)):
        if batch:
            return [frozenset(plan.graph.index_of(t) for t in item)
                    for item in source]
        return [plan.graph.index_of(t) for t in source]
    random_source = parse_random_source(source)
    if random_source is not None:
        count, seed = random_source
        return random_attacks(plan, count, resolve_seed(seed), batch=batch)
    return parse_attacks(read_text_lines(source), plan.graph, batch=batch)
