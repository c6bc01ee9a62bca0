#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Simple undirected graphs, hop distances and graph powers.

Vertices are 0-based indices. Adjacency is kept as one integer bitset per
vertex, so adjacency tests and neighbourhood intersections are single
integer operations; the clique and clustering code relies on that.
"""

# =============================================================================
# IMPORTS
# =============================================================================

import logging

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from eternalguard.common_internal import (
    id_label_name, make_hash, validate_positive_int)
from eternalguard.exceptions import (
    EmptyGraph, InvalidEdge, InvalidRange, InvalidVertex)

logger = logging.getLogger(__name__)

# cross-component distance; compares false against every finite range
UNREACHABLE = np.inf


# =============================================================================
# GRAPH
# =============================================================================

class Graph(object):

    def __init__(self, vertex_count, edges, labels=None):
        self.vertex_count = vertex_count
        self.edges = frozenset(edges)
        self.labels = tuple(labels) if labels is not None else None

        masks = [0] * vertex_count
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.neighbor_masks = tuple(masks)

        if self.labels is not None:
            self._index_of_label = {
                label: i for i, label in enumerate(self.labels)}
        else:
            self._index_of_label = None
        self._distances = None

    @property
    def vertices(self):
        return range(self.vertex_count)

    @property
    def all_mask(self):
        return (1 << self.vertex_count) - 1

    def sorted_edges(self):
        return sorted(self.edges)

    def has_edge(self, u, v):
        return bool(self.neighbor_masks[u] >> v & 1)

    def neighbors(self, v):
        return mask_to_list(self.neighbor_masks[v])

    def degree(self, v):
        return bin(self.neighbor_masks[v]).count('1')

    def label(self, v):
        if self.labels is None:
            return v
        return self.labels[v]

    def display(self, v):
        return id_label_name(v, self.label(v))

    def index_of(self, token):
        '''Resolve a label (or a plain index) to a vertex index'''
        if self._index_of_label is not None and token in self._index_of_label:
            return self._index_of_label[token]
        if isinstance(token, str) and self._index_of_label is not None:
            raise InvalidVertex('Unknown vertex label "{}"'.format(token))
        try:
            index = int(token)
        except (TypeError, ValueError):
            raise InvalidVertex(
                'Unknown vertex "{}"'.format(token)) from None
        self.check_vertex(index)
        return index

    def check_vertex(self, v):
        if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
            raise InvalidVertex('Vertex must be an index, got {!r}'.format(v))
        if not 0 <= v < self.vertex_count:
            raise InvalidVertex(
                'Vertex {} out of range for a graph with {} vertices'.format(
                    v, self.vertex_count))
        return int(v)

    def adjacency_matrix(self):
        n = self.vertex_count
        if not self.edges:
            return csr_matrix((n, n), dtype=np.int8)
        rows, cols = zip(*self.sorted_edges())
        data = np.ones(len(rows), dtype=np.int8)
        upper = csr_matrix((data, (rows, cols)), shape=(n, n))
        return (upper + upper.T).tocsr()

    @property
    def digest(self):
        canonical = '{}|{}|{}'.format(
            self.vertex_count,
            ';'.join('{},{}'.format(u, v) for u, v in self.sorted_edges()),
            ';'.join(str(l) for l in self.labels or ()))
        return make_hash(canonical)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.vertex_count == other.vertex_count and
            self.edges == other.edges and
            self.labels == other.labels)

    def __hash__(self):
        return hash((self.vertex_count, self.edges, self.labels))

    def __repr__(self):
        return '<Graph n={} m={}>'.format(self.vertex_count, len(self.edges))


def mask_to_list(mask):
    vertices = []
    while mask:
        low = mask & -mask
        vertices.append(low.bit_length() - 1)
        mask ^= low
    return vertices


def list_to_mask(vertices):
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def build_graph(vertex_count, edge_list, labels=None):
    if isinstance(vertex_count, bool) or not isinstance(
            vertex_count, (int, np.integer)) or vertex_count < 0:
        raise InvalidVertex(
            'vertex_count must be a non-negative integer, got {!r}'.format(
                vertex_count))
    vertex_count = int(vertex_count)

    if labels is not None:
        labels = list(labels)
        if len(labels) != vertex_count:
            raise InvalidVertex(
                'Expected {} labels, got {}'.format(vertex_count, len(labels)))
        if len(set(labels)) != len(labels):
            raise InvalidVertex('Vertex labels must be unique')

    edges = set()
    for pair in edge_list:
        try:
            u, v = pair
        except (TypeError, ValueError):
            raise InvalidEdge(
                'Edge must be a pair of vertices, got {!r}'.format(pair)
            ) from None
        for w in (u, v):
            if isinstance(w, bool) or not isinstance(w, (int, np.integer)):
                raise InvalidVertex(
                    'Edge endpoint must be an index, got {!r}'.format(w))
            if not 0 <= w < vertex_count:
                raise InvalidVertex(
                    'Edge ({}, {}) references a vertex outside '
                    '0..{}'.format(u, v, vertex_count - 1))
        if u == v:
            raise InvalidEdge('Self-loop on vertex {}'.format(u))
        edges.add((int(min(u, v)), int(max(u, v))))
    return Graph(vertex_count, edges, labels)


def induced_subgraph(g, vertices):
    '''Compact copy of the subgraph induced by ``vertices``; vertex i of the
    result is the i-th smallest member, labelled with its original label.
    '''
    members = sorted(set(g.check_vertex(v) for v in vertices))
    position = {v: i for i, v in enumerate(members)}
    edges = [
        (position[u], position[v]) for u, v in g.edges
        if u in position and v in position]
    labels = [str(g.label(v)) for v in members]
    return Graph(len(members), edges, labels)


# =============================================================================
# DISTANCES
# =============================================================================

class DistanceMatrix(object):
    '''All-pairs hop counts; UNREACHABLE across components. Read-only.'''

    def __init__(self, matrix):
        matrix = np.array(matrix, dtype=float)
        matrix.flags.writeable = False
        self.matrix = matrix

    @property
    def n(self):
        return self.matrix.shape[0]

    def distance(self, u, v):
        d = self.matrix[u, v]
        if np.isinf(d):
            return UNREACHABLE
        return int(d)

    def within(self, r):
        '''Boolean matrix of pairs at finite distance <= r'''
        return self.matrix <= r

    def eccentricity(self, v, within=None):
        '''Largest distance from v to the given vertices (default: all)'''
        if within is None:
            row = self.matrix[v]
        else:
            row = self.matrix[v, sorted(within)]
        if row.size == 0:
            return 0
        d = row.max()
        if np.isinf(d):
            return UNREACHABLE
        return int(d)

    def max_distance(self):
        if self.n == 0:
            return 0
        d = self.matrix.max()
        if np.isinf(d):
            return UNREACHABLE
        return int(d)

    def max_pairwise(self, vertices):
        idx = sorted(vertices)
        if len(idx) < 2:
            return 0
        d = self.matrix[np.ix_(idx, idx)].max()
        if np.isinf(d):
            return UNREACHABLE
        return int(d)

    def pair_sum(self, vertices):
        '''Sum of distances over ordered pairs of the given vertices'''
        idx = sorted(vertices)
        return int(self.matrix[np.ix_(idx, idx)].sum())

    def __eq__(self, other):
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return np.array_equal(self.matrix, other.matrix)

    __hash__ = None


def all_pairs_distances(g):
    if g._distances is not None:
        return g._distances
    n = g.vertex_count
    if n == 0:
        matrix = np.zeros((0, 0))
    else:
        # unit weights: Dijkstra settles vertices in BFS order
        matrix = shortest_path(
            g.adjacency_matrix(), method='D', directed=False,
            unweighted=True)
    dm = DistanceMatrix(matrix)
    g._distances = dm
    return dm


def diameter(g):
    if g.vertex_count == 0:
        raise EmptyGraph('The diameter of an empty graph is undefined')
    return all_pairs_distances(g).max_distance()


def components(g):
    if g.vertex_count == 0:
        return []
    count, labels = connected_components(
        g.adjacency_matrix(), directed=False)
    groups = [set() for _ in range(count)]
    for v, c in enumerate(labels):
        groups[c].add(v)
    return sorted(groups, key=min)


def is_connected(g):
    return len(components(g)) == 1


def graph_power(g, r):
    try:
        r = validate_positive_int(r, 'Range')
    except ValueError as e:
        raise InvalidRange(str(e)) from None
    if r == 1:
        return g
    dm = all_pairs_distances(g)
    upper = np.triu((dm.matrix > 0) & dm.within(r), k=1)
    rows, cols = np.nonzero(upper)
    edges = zip(rows.tolist(), cols.tolist())
    power = Graph(g.vertex_count, edges, g.labels)
    logger.debug('G^%s has %s edges (G has %s)',
                 r, len(power.edges), len(g.edges))
    return power
