#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Average distance a guard moves to answer an attack.

The analytic value assumes every vertex is equally likely to be attacked
and the responding guard sits on a uniformly chosen other vertex of the
same cluster, which is what averaging over all ordered pairs means.
"""

import logging
import warnings
from collections import OrderedDict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from eternalguard import constants_internal
from eternalguard.common_internal import chunk_sizes, derive_rng
from eternalguard.exceptions import (
    NoSamples, PartialCoverageWarning, WrongGraph)
from eternalguard.graph import all_pairs_distances
from eternalguard.security import initial_placement

logger = logging.getLogger(__name__)

DEFAULT_CHUNK = 10000


@dataclass
class ResponseMetrics:
    tau_analytic: Fraction
    tau_empirical: Optional[float] = None
    per_cluster_rho: List[Tuple[int, Fraction]] = field(default_factory=list)
    sample_count: int = 0
    convention: Optional[str] = None
    partial: bool = False

    def to_dict(self):
        return OrderedDict([
            ('tau_analytic', float(self.tau_analytic)),
            ('tau_analytic_exact', str(self.tau_analytic)),
            ('tau_empirical', self.tau_empirical),
            ('sample_count', self.sample_count),
            ('convention', self.convention),
            ('partial', self.partial),
            ('per_cluster_rho', [
                OrderedDict([('cluster', cid), ('rho', float(rho))])
                for cid, rho in self.per_cluster_rho]),
        ])


def _check_plan_graph(g, plan):
    if plan.graph != g:
        raise WrongGraph('The plan was computed on a different graph')


def _normalizer(plan):
    '''Vertex count the average is taken over; the covered vertices when
    the plan leaves some uncovered.'''
    n = plan.graph.vertex_count
    if plan.uncovered:
        warnings.warn(
            '{} of {} vertices are uncovered; averaging over the {} '
            'covered vertices only'.format(
                len(plan.uncovered), n, plan.covered_count),
            PartialCoverageWarning)
        return plan.covered_count
    return n


def cluster_mean_distance(g, c):
    '''Mean ambient distance over ordered pairs of distinct members'''
    n_i = len(c.vertices)
    if n_i < 2:
        return Fraction(0)
    total = all_pairs_distances(g).pair_sum(c.vertices)
    return Fraction(total, n_i * (n_i - 1))


def average_response_distance(g, plan):
    '''Sum over clusters of the ordered pair-distance sum divided by
    (n_i - 1), all over n. A singleton contributes 0.'''
    _check_plan_graph(g, plan)
    n = _normalizer(plan)
    if n == 0:
        return Fraction(0)
    dm = all_pairs_distances(g)
    total = Fraction(0)
    for cluster in plan.clusters:
        n_i = len(cluster.vertices)
        if n_i < 2:
            continue
        total += Fraction(dm.pair_sum(cluster.vertices), n_i - 1)
    return total / n


def weighted_response_distance(g, plan):
    '''Same quantity written as the size-weighted mean of cluster rho'''
    _check_plan_graph(g, plan)
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', PartialCoverageWarning)
        n = _normalizer(plan)
    if n == 0:
        return Fraction(0)
    return sum(
        (len(c.vertices) * cluster_mean_distance(g, c)
         for c in plan.clusters), Fraction(0)) / n


# =============================================================================
# MONTE CARLO
# =============================================================================

def _reset_trials(plan, dm, attack_count, seed, chunk):
    clusters = plan.clusters
    sizes = np.array([len(c.vertices) for c in clusters])
    members = np.zeros((len(clusters), sizes.max()), dtype=int)
    vertices, cluster_index, position = [], [], []
    for i, cluster in enumerate(clusters):
        members[i, :len(cluster.vertices)] = cluster.vertices
        for j, v in enumerate(cluster.vertices):
            vertices.append(v)
            cluster_index.append(i)
            position.append(j)
    vertices = np.array(vertices)
    cluster_index = np.array(cluster_index)
    position = np.array(position)

    total = 0.0
    for counter, size in enumerate(chunk_sizes(attack_count, chunk)):
        rng = derive_rng(seed, constants_internal.stream_monte_carlo, counter)
        picked = rng.integers(len(vertices), size=size)
        v = vertices[picked]
        c = cluster_index[picked]
        others = sizes[c] - 1
        # uniform over the other members: draw 0..others-1, skip own slot
        j = np.floor(rng.random(size) * np.maximum(others, 1)).astype(int)
        j = j + (j >= position[picked])
        j = np.minimum(j, sizes[c] - 1)
        guard = members[c, j]
        total += dm.matrix[guard, v].sum()
    return total / attack_count


def _stationary_trials(plan, attack_count, seed, chunk):
    state = initial_placement(plan)
    covered = np.array(sorted(
        v for c in plan.clusters for v in c.vertices))
    for counter, size in enumerate(chunk_sizes(attack_count, chunk)):
        rng = derive_rng(seed, constants_internal.stream_monte_carlo, counter)
        for v in covered[rng.integers(len(covered), size=size)]:
            state.attack(int(v))
    lengths = [e.path_length for e in state.responses()]
    return float(np.mean(lengths))


def empirical_response_distance(plan, attack_count, seed,
                                convention=constants_internal.convention_reset,
                                chunk=DEFAULT_CHUNK):
    if isinstance(attack_count, bool) or not isinstance(
            attack_count, (int, np.integer)) or attack_count < 1:
        raise NoSamples(
            'Need at least one attack sample, got {!r}'.format(attack_count))
    if convention not in constants_internal.conventions:
        raise ValueError(
            'Convention must be one of {}, got "{}"'.format(
                ', '.join(constants_internal.conventions), convention))
    if not plan.clusters:
        raise NoSamples('The plan has no clusters to attack')
    if plan.uncovered:
        warnings.warn(
            'Sampling attacks on the {} covered vertices only'.format(
                plan.covered_count),
            PartialCoverageWarning)

    if convention == constants_internal.convention_reset:
        dm = all_pairs_distances(plan.graph)
        value = _reset_trials(plan, dm, int(attack_count), seed, chunk)
    else:
        value = _stationary_trials(plan, int(attack_count), seed, chunk)
    logger.info('Empirical response distance (%s, N=%s): %.4f',
                convention, attack_count, value)
    return float(value)


def response_metrics(g, plan, empirical=None, seed=0,
                     convention=constants_internal.convention_reset,
                     chunk=DEFAULT_CHUNK):
    tau = average_response_distance(g, plan)
    metrics = ResponseMetrics(
        tau_analytic=tau,
        per_cluster_rho=[
            (c.id, cluster_mean_distance(g, c)) for c in plan.clusters],
        partial=bool(plan.uncovered),
    )
    if empirical is not None:
        metrics.tau_empirical = empirical_response_distance(
            plan, empirical, seed, convention=convention, chunk=chunk)
        metrics.sample_count = int(empirical)
        metrics.convention = convention
    return metrics
