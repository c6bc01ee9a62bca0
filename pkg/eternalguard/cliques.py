#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Maximal clique enumeration (Bron-Kerbosch with pivoting)

"""

# =============================================================================
# IMPORTS
# =============================================================================

import heapq
import logging
from collections import OrderedDict

from eternalguard.exceptions import WrongGraph
from eternalguard.graph import graph_power, list_to_mask, mask_to_list

logger = logging.getLogger(__name__)


def popcount(mask):
    return bin(mask).count('1')


# =============================================================================
# CLIQUE SET
# =============================================================================

class CliqueSet(object):
    '''Maximal cliques of one graph, in canonical order: descending size,
    then lexicographic by sorted vertex indices.
    '''

    def __init__(self, cliques, graph):
        self.cliques = canonical_order(cliques)
        self.source_graph_id = graph.digest
        self.vertex_count = graph.vertex_count

    def __iter__(self):
        return iter(self.cliques)

    def __len__(self):
        return len(self.cliques)

    def __getitem__(self, index):
        return self.cliques[index]

    def __contains__(self, clique):
        return tuple(sorted(clique)) in self.cliques

    def as_sets(self):
        return {frozenset(c) for c in self.cliques}

    def masks(self):
        return [list_to_mask(c) for c in self.cliques]

    def __repr__(self):
        return '<CliqueSet {} cliques>'.format(len(self.cliques))


def canonical_order(cliques):
    normalized = {tuple(sorted(c)) for c in cliques}
    return tuple(sorted(normalized, key=lambda c: (-len(c), c)))


# =============================================================================
# ENUMERATION
# =============================================================================

def degeneracy_ordering(g):
    '''Repeatedly remove a vertex of minimum remaining degree (lowest index
    on ties). Priority queue with lazy deletion, O(m log n).'''
    neighbors = [[] for _ in g.vertices]
    for u, w in g.edges:
        neighbors[u].append(w)
        neighbors[w].append(u)
    degree = [len(adjacent) for adjacent in neighbors]
    heap = [(d, v) for v, d in enumerate(degree)]
    heapq.heapify(heap)
    removed = [False] * g.vertex_count
    order = []
    while heap:
        d, v = heapq.heappop(heap)
        # stale entry: v is gone or its degree dropped since the push
        if removed[v] or d != degree[v]:
            continue
        removed[v] = True
        order.append(v)
        for w in neighbors[v]:
            if not removed[w]:
                degree[w] -= 1
                heapq.heappush(heap, (degree[w], w))
    return order


def _expand(adj, r, p, x, out):
    if not p and not x:
        out.append(r)
        return

    # pivot maximizing |P ∩ N(u)| over P ∪ X
    pivot_neighbors = 0
    best = -1
    for u in mask_to_list(p | x):
        count = popcount(p & adj[u])
        if count > best:
            best = count
            pivot_neighbors = adj[u]

    for v in mask_to_list(p & ~pivot_neighbors):
        bit = 1 << v
        _expand(adj, r | bit, p & adj[v], x & adj[v], out)
        p &= ~bit
        x |= bit


def maximal_cliques(g):
    adj = g.neighbor_masks
    found = []
    p = g.all_mask
    x = 0
    for v in degeneracy_ordering(g):
        bit = 1 << v
        _expand(adj, bit, p & adj[v], x & adj[v], found)
        p &= ~bit
        x |= bit
    cliques = CliqueSet([mask_to_list(m) for m in found], g)
    logger.debug('%s maximal cliques in %r', len(cliques), g)
    return cliques


def clique_decompositions(g, ranges):
    '''Maximal cliques of G^r for every range r, keyed by range'''
    decompositions = OrderedDict()
    for r in ranges:
        decompositions[r] = maximal_cliques(graph_power(g, r))
    return decompositions


def verify_clique_set(g, cs):
    if cs.source_graph_id != g.digest:
        raise WrongGraph(
            'Clique set was computed on a different graph')
    masks = cs.masks()
    for clique, mask in zip(cs.cliques, masks):
        for v in clique:
            if (mask & ~(1 << v)) & ~g.neighbor_masks[v]:
                return False
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            if i != j and a & b == a:
                return False
    covered = 0
    for mask in masks:
        covered |= mask
    return covered == g.all_mask
