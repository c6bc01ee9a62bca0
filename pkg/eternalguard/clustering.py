#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Greedy decomposition of a graph into guard clusters

Each guard of range r gets a cluster whose vertices are pairwise within r
hops in the whole graph. Candidate clusters are the maximal cliques of G^r;
the greedy loop repeatedly takes the clique covering the most uncovered
vertices, as in maximum coverage.
"""

# =============================================================================
# IMPORTS
# =============================================================================

import logging
from collections import OrderedDict, deque
from dataclasses import dataclass
from fractions import Fraction

from eternalguard import constants_internal
from eternalguard.cliques import clique_decompositions, popcount
from eternalguard.common_internal import (
    derive_rng, resolve_seed, validate_positive_int)
from eternalguard.exceptions import (
    Infeasible, InvalidFleet, InvalidRange, NoGuards)
from eternalguard.graph import (
    all_pairs_distances, diameter, induced_subgraph, is_connected,
    list_to_mask, mask_to_list)

logger = logging.getLogger(__name__)


# =============================================================================
# FLEET
# =============================================================================

class GuardFleet(object):
    '''``counts[i]`` guards of range ``ranges[i]``; ranges strictly
    decreasing.'''

    def __init__(self, ranges, counts):
        ranges = list(ranges)
        counts = list(counts)
        if len(ranges) != len(counts):
            raise InvalidFleet(
                'Got {} ranges but {} counts'.format(len(ranges), len(counts)))
        if not ranges:
            raise NoGuards('The guard fleet is empty')
        try:
            ranges = [validate_positive_int(r, 'Guard range') for r in ranges]
            counts = [validate_positive_int(c, 'Guard count') for c in counts]
        except ValueError as e:
            raise InvalidFleet(str(e)) from None
        for a, b in zip(ranges, ranges[1:]):
            if a <= b:
                raise InvalidFleet(
                    'Guard ranges must be distinct and strictly decreasing, '
                    'got {}'.format(ranges))
        self.ranges = tuple(ranges)
        self.counts = tuple(counts)

    @classmethod
    def from_pairs(cls, pairs):
        '''Build from (range, count) pairs in any order'''
        pairs = sorted(pairs, key=lambda pair: pair[0], reverse=True)
        return cls([r for r, _ in pairs], [c for _, c in pairs])

    @classmethod
    def parse(cls, ranges, counts):
        '''Parse comma separated CLI values, e.g. ("3,1", "1,2")'''
        try:
            ranges = [int(s) for s in str(ranges).split(',') if s.strip()]
            counts = [int(s) for s in str(counts).split(',') if s.strip()]
        except ValueError:
            raise InvalidFleet(
                'Ranges and counts must be comma separated integers, '
                'got "{}" and "{}"'.format(ranges, counts)) from None
        if len(ranges) != len(counts):
            raise InvalidFleet(
                'Got {} ranges but {} counts'.format(len(ranges), len(counts)))
        return cls.from_pairs(zip(ranges, counts))

    @property
    def total_guards(self):
        return sum(self.counts)

    def count_for(self, r):
        return self.counts[self.ranges.index(r)]

    def to_dict(self):
        return {'ranges': list(self.ranges), 'counts': list(self.counts)}

    def __eq__(self, other):
        if not isinstance(other, GuardFleet):
            return NotImplemented
        return self.ranges == other.ranges and self.counts == other.counts

    def __hash__(self):
        return hash((self.ranges, self.counts))

    def __repr__(self):
        return 'GuardFleet(ranges={}, counts={})'.format(
            list(self.ranges), list(self.counts))


@dataclass(frozen=True)
class Guard:
    guard_id: int
    guard_range: int


def expand_fleet(fleet):
    '''One Guard per unit of count; ids 1..total, longest range first'''
    guards = []
    for r, count in zip(fleet.ranges, fleet.counts):
        for _ in range(count):
            guards.append(Guard(len(guards) + 1, r))
    return guards


# =============================================================================
# PLAN
# =============================================================================

@dataclass(frozen=True)
class Cluster:
    id: int
    vertices: tuple
    guard_range: int
    guard_id: int

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self.vertices


class ClusterPlan(object):

    def __init__(self, graph, fleet, clusters, uncovered,
                 unassigned_guards=()):
        self.graph = graph
        self.fleet = fleet
        self.clusters = tuple(clusters)
        self.uncovered = frozenset(uncovered)
        self.unassigned_guards = tuple(unassigned_guards)
        self._cluster_of = {}
        for cluster in self.clusters:
            for v in cluster.vertices:
                if v in self._cluster_of:
                    raise AssertionError(
                        'Vertex {} is in clusters {} and {}'.format(
                            v, self._cluster_of[v].id, cluster.id))
                self._cluster_of[v] = cluster
        if set(self._cluster_of) & self.uncovered:
            raise AssertionError('A clustered vertex is marked uncovered')
        if len(self._cluster_of) + len(self.uncovered) != graph.vertex_count:
            raise AssertionError(
                'Clusters and uncovered vertices do not partition the graph')

    @property
    def covered_count(self):
        return len(self._cluster_of)

    @property
    def is_eternally_secure(self):
        return not self.uncovered

    def cluster_of(self, v):
        '''The cluster containing v, or None for an uncovered vertex'''
        return self._cluster_of.get(v)

    def get_cluster(self, cluster_id):
        for cluster in self.clusters:
            if cluster.id == cluster_id:
                return cluster
        raise KeyError(cluster_id)

    def summary(self):
        return OrderedDict([
            ('clusters', len(self.clusters)),
            ('covered', self.covered_count),
            ('uncovered', len(self.uncovered)),
            ('unassigned_guards', len(self.unassigned_guards)),
            ('eternally_secure', self.is_eternally_secure),
        ])

    def __eq__(self, other):
        if not isinstance(other, ClusterPlan):
            return NotImplemented
        return (
            self.graph == other.graph and
            self.fleet == other.fleet and
            self.clusters == other.clusters and
            self.uncovered == other.uncovered and
            self.unassigned_guards == other.unassigned_guards)

    __hash__ = None

    def __repr__(self):
        return '<ClusterPlan {} clusters, {} uncovered>'.format(
            len(self.clusters), len(self.uncovered))


def coverage_ratio(plan):
    n = plan.graph.vertex_count
    if n == 0:
        return Fraction(1)
    return Fraction(plan.covered_count, n)


def cluster_diameter(g, cluster):
    '''Largest pairwise distance of the cluster, measured in g'''
    return all_pairs_distances(g).max_pairwise(cluster.vertices)


def cluster_induced_diameter(g, cluster):
    '''Diameter of the subgraph induced by the cluster; may be UNREACHABLE'''
    return diameter(induced_subgraph(g, cluster.vertices))


def certify_cluster(dm, vertices, guard_range):
    worst = dm.max_pairwise(vertices)
    if not worst <= guard_range:
        raise AssertionError(
            'Cluster {} has pairwise distance {} > guard range {}'.format(
                sorted(vertices), worst, guard_range))


# =============================================================================
# TIE BREAK
# =============================================================================

class TieBreak(object):

    def __init__(self, seed=None):
        self.seed = seed

    @property
    def mode(self):
        if self.seed is None:
            return constants_internal.tie_break_deterministic
        return constants_internal.tie_break_seeded

    def rng(self):
        if self.seed is None:
            return None
        return derive_rng(self.seed, constants_internal.stream_tie_break)

    def __str__(self):
        if self.seed is None:
            return constants_internal.tie_break_deterministic
        return '{}:{}'.format(constants_internal.tie_break_seeded, self.seed)

    def __eq__(self, other):
        return isinstance(other, TieBreak) and self.seed == other.seed

    def __hash__(self):
        return hash(self.seed)


def parse_tie_break(spec):
    '''"det" or "seed:<n>"; the seed environment variable overrides <n>'''
    if spec is None or spec == constants_internal.tie_break_deterministic:
        return TieBreak()
    prefix, _, seed = str(spec).partition(':')
    if prefix == constants_internal.tie_break_seeded:
        try:
            seed = int(seed)
        except ValueError:
            seed = None
        if seed is not None and seed >= 0:
            return TieBreak(resolve_seed(seed))
    raise ValueError(
        'Tie-break must be "det" or "seed:<non-negative integer>", '
        'got "{}"'.format(spec))


# =============================================================================
# ALGORITHM
# =============================================================================

def single_guard_feasible(g, r):
    '''One guard of range r eternally secures a connected g iff r >= diam'''
    try:
        r = validate_positive_int(r, 'Range')
    except ValueError as e:
        raise InvalidRange(str(e)) from None
    if g.vertex_count > 0 and not is_connected(g):
        raise Infeasible(
            'A single guard cannot reach every component of a '
            'disconnected graph')
    return r >= diameter(g)


def decompose(g, fleet, tie_break=None):
    if fleet is None or fleet.total_guards < 1:
        raise NoGuards('decompose needs at least one guard')
    if tie_break is None:
        tie_break = TieBreak()
    rng = tie_break.rng()

    dm = all_pairs_distances(g)
    decompositions = clique_decompositions(g, fleet.ranges)
    ascending = sorted(fleet.ranges)
    masks = {r: decompositions[r].masks() for r in ascending}
    members = {r: set(decompositions[r].cliques) for r in ascending}

    guards_left = OrderedDict((r, deque()) for r in fleet.ranges)
    for guard in expand_fleet(fleet):
        guards_left[guard.guard_range].append(guard.guard_id)

    uncovered = g.all_mask
    clusters = []
    while uncovered and any(guards_left.values()):
        best_gain = 0
        best = []
        # smallest range first, canonical order within a decomposition
        for r in ascending:
            if not guards_left[r]:
                continue
            for clique, mask in zip(decompositions[r].cliques, masks[r]):
                gain = popcount(mask & uncovered)
                if gain > best_gain:
                    best_gain = gain
                    best = [(clique, mask)]
                elif gain == best_gain and gain > 0:
                    best.append((clique, mask))
        if best_gain == 0:
            break

        if rng is None:
            clique, mask = best[0]
        else:
            # a clique listed under several ranges is one candidate
            distinct = list(OrderedDict(
                (mask, clique) for clique, mask in best).items())
            mask, clique = distinct[int(rng.integers(len(distinct)))]

        # the smallest eligible range whose decomposition contains m
        r = min(
            rr for rr in ascending
            if guards_left[rr] and clique in members[rr])
        certify_cluster(dm, clique, r)

        guard_id = guards_left[r].popleft()
        vertices = tuple(mask_to_list(mask & uncovered))
        cluster = Cluster(
            id=len(clusters) + 1, vertices=vertices,
            guard_range=r, guard_id=guard_id)
        clusters.append(cluster)
        uncovered &= ~list_to_mask(clique)
        logger.debug(
            'Cluster %s: %s vertices, guard %s (range %s), %s uncovered left',
            cluster.id, len(vertices), guard_id, r, popcount(uncovered))

    unassigned = sorted(
        guard_id for ids in guards_left.values() for guard_id in ids)
    plan = ClusterPlan(
        g, fleet, clusters, mask_to_list(uncovered), unassigned)
    logger.info(
        'Decomposed %r into %s clusters; %s of %s vertices covered',
        g, len(plan.clusters), plan.covered_count, g.vertex_count)
    return plan
