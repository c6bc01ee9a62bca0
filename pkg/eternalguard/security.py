#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Attack/response simulation against a cluster plan.

Every cluster has exactly one guard and only that guard answers attacks on
the cluster's vertices, so the responding guard is never ambiguous. A move
is atomic within one time step; only its hop count is recorded.
"""

# =============================================================================
# IMPORTS
# =============================================================================

import json
import logging
from collections import Counter, OrderedDict
from dataclasses import asdict, dataclass, replace
from typing import Optional

import numpy as np

from eternalguard import constants_internal
from eternalguard.common_internal import derive_rng, make_hash
from eternalguard.exceptions import EmptyGraph, NoGuards
from eternalguard.graph import all_pairs_distances

logger = logging.getLogger(__name__)


# =============================================================================
# TYPES
# =============================================================================

@dataclass(frozen=True)
class GuardPosition:
    guard_id: int
    vertex: int
    guard_range: int
    cluster_id: int


@dataclass(frozen=True)
class Event:
    time: int
    kind: str
    vertex: int
    guard_id: Optional[int] = None
    path_length: Optional[int] = None
    cluster_id: Optional[int] = None
    detail: Optional[str] = None

    def to_dict(self):
        return OrderedDict(
            (k, v) for k, v in asdict(self).items() if v is not None)


# =============================================================================
# STATE
# =============================================================================

class SimulationState(object):

    def __init__(self, plan, positions, time=0):
        self.plan = plan
        self.graph = plan.graph
        self._dm = all_pairs_distances(plan.graph)
        self.positions = OrderedDict(
            (p.cluster_id, p) for p in positions)
        if len(self.positions) != len(plan.clusters):
            raise AssertionError(
                'Expected one guard per cluster ({}), got {}'.format(
                    len(plan.clusters), len(self.positions)))
        self.time = time
        self.log = []
        self._covered = np.zeros(self.graph.vertex_count, dtype=bool)
        for cluster in plan.clusters:
            self._covered[list(cluster.vertices)] = True

    def guard_positions(self):
        return list(self.positions.values())

    def _secured(self):
        '''Boolean vector: vertex within range of at least one guard'''
        if not self.positions:
            return np.zeros(self.graph.vertex_count, dtype=bool)
        rows = [p.vertex for p in self.positions.values()]
        ranges = np.array([p.guard_range for p in self.positions.values()])
        reach = self._dm.matrix[rows] <= ranges[:, None]
        return reach.any(axis=0)

    def is_vertex_secured(self, v):
        v = self.graph.check_vertex(v)
        return any(
            self._dm.matrix[p.vertex, v] <= p.guard_range
            for p in self.positions.values())

    def is_secure_configuration(self, covered_only=False):
        secured = self._secured()
        if covered_only:
            return bool(secured[self._covered].all())
        return bool(secured.all())

    # =========================================================================
    # LOG
    # =========================================================================

    def _record(self, **kwargs):
        event = Event(**kwargs)
        self.log.append(event)
        if event.kind == constants_internal.violation:
            logger.debug('t=%s violation at %s: %s',
                         event.time, event.vertex, event.detail)
        return event

    @property
    def violations(self):
        return sum(
            1 for e in self.log if e.kind == constants_internal.violation)

    def responses(self):
        return [e for e in self.log if e.kind == constants_internal.response]

    def log_digest(self):
        lines = [
            json.dumps(e.to_dict(), sort_keys=True) for e in self.log]
        return make_hash('\n'.join(lines))

    # =========================================================================
    # DYNAMICS
    # =========================================================================

    def _respond(self, v, cluster):
        position = self.positions[cluster.id]
        d = self._dm.distance(position.vertex, v)
        if not d <= position.guard_range:
            self._record(
                time=self.time, kind=constants_internal.violation, vertex=v,
                guard_id=position.guard_id, cluster_id=cluster.id,
                detail='guard {} at distance {} exceeds range {}'.format(
                    position.guard_id, d, position.guard_range))
            return
        self.positions[cluster.id] = replace(position, vertex=v)
        self._record(
            time=self.time, kind=constants_internal.response, vertex=v,
            guard_id=position.guard_id, path_length=d, cluster_id=cluster.id)

    def _verify(self):
        secured = self._secured()
        insecure = np.flatnonzero(self._covered & ~secured)
        if insecure.size:
            self._record(
                time=self.time, kind=constants_internal.violation,
                vertex=int(insecure[0]),
                detail='insecure configuration: vertices {}'.format(
                    insecure.tolist()))

    def attack(self, v):
        v = self.graph.check_vertex(v)
        self.time += 1
        self._record(time=self.time, kind=constants_internal.attack, vertex=v)
        cluster = self.plan.cluster_of(v)
        if cluster is None:
            self._record(
                time=self.time, kind=constants_internal.violation, vertex=v,
                detail='attack on uncovered vertex {}'.format(
                    self.graph.display(v)))
            return self
        self._respond(v, cluster)
        self._verify()
        return self

    def attack_batch(self, targets):
        targets = sorted(set(self.graph.check_vertex(v) for v in targets))
        if not targets:
            return self

        step = self.time + 1
        rejected = False
        for v in targets:
            if self.plan.cluster_of(v) is None:
                rejected = True
                self._record(
                    time=step, kind=constants_internal.violation, vertex=v,
                    detail='batch targets uncovered vertex {}'.format(
                        self.graph.display(v)))
        load = Counter(self.plan.cluster_of(v).id for v in targets
                       if self.plan.cluster_of(v) is not None)
        for cluster_id, hits in sorted(load.items()):
            if hits > 1:
                rejected = True
                first = min(v for v in targets
                            if self.plan.cluster_of(v) is not None and
                            self.plan.cluster_of(v).id == cluster_id)
                self._record(
                    time=step, kind=constants_internal.violation,
                    vertex=first, cluster_id=cluster_id,
                    detail='cluster C{} attacked {} times in one step'.format(
                        cluster_id, hits))
        if rejected:
            return self

        self.time = step
        for v in targets:
            self._record(
                time=self.time, kind=constants_internal.attack, vertex=v)
        for v in targets:
            self._respond(v, self.plan.cluster_of(v))
        self._verify()
        return self

    def run_sequence(self, attacks, stop_on_violation=False):
        '''Fold single attacks (vertices) and batches (sets/lists) over the
        state; returns (state, violations logged by this run).'''
        before = self.violations
        for item in attacks:
            step_before = self.violations
            if isinstance(item, (set, frozenset, list, tuple)):
                self.attack_batch(item)
            else:
                self.attack(item)
            if stop_on_violation and self.violations > step_before:
                logger.info('Stopping at t=%s after a violation', self.time)
                break
        return self, self.violations - before


# =============================================================================
# FUNCTIONS
# =============================================================================

def cluster_center(dm, cluster):
    '''Member minimizing the largest ambient distance to the other members,
    lowest index on ties'''
    best = None
    best_ecc = None
    for v in sorted(cluster.vertices):
        ecc = dm.eccentricity(v, within=cluster.vertices)
        if best_ecc is None or ecc < best_ecc:
            best, best_ecc = v, ecc
    return best


def initial_placement(plan):
    if not plan.clusters:
        raise NoGuards('Cannot place guards: the plan has no clusters')
    dm = all_pairs_distances(plan.graph)
    positions = [
        GuardPosition(
            guard_id=cluster.guard_id,
            vertex=cluster_center(dm, cluster),
            guard_range=cluster.guard_range,
            cluster_id=cluster.id)
        for cluster in plan.clusters]
    return SimulationState(plan, positions)


def random_attacks(plan, count, seed, batch=False):
    '''``count`` uniform single-vertex attacks; with ``batch``, each step
    attacks one uniform vertex of every cluster at once.'''
    if plan.graph.vertex_count == 0:
        raise EmptyGraph('Cannot draw attacks on a graph with no vertices')
    rng = derive_rng(seed, constants_internal.stream_attacks)
    if not batch:
        return rng.integers(plan.graph.vertex_count, size=count).tolist()
    attacks = []
    for _ in range(count):
        attacks.append(frozenset(
            int(cluster.vertices[rng.integers(len(cluster.vertices))])
            for cluster in plan.clusters))
    return attacks


def mean_response_distance(state):
    lengths = [e.path_length for e in state.responses()]
    if not lengths:
        return None
    return float(np.mean(lengths))
