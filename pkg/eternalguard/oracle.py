#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Exhaustive reference implementations for small instances.

Nothing here is meant to scale. Every search refuses instances that exceed
its OracleBudget instead of silently truncating.
"""

# =============================================================================
# IMPORTS
# =============================================================================

import logging
import math
from collections import OrderedDict, deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from eternalguard.cliques import CliqueSet, clique_decompositions, popcount
from eternalguard.clustering import decompose
from eternalguard.common_internal import validate_positive_int
from eternalguard.exceptions import BudgetExceeded, Infeasible, InvalidRange
from eternalguard.graph import is_connected, mask_to_list

logger = logging.getLogger(__name__)

GREEDY_FACTOR = 1 - 1 / math.e


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 12
    max_guards: int = 4
    max_candidate_cliques: int = 24

    def __post_init__(self):
        for name in ('max_vertices', 'max_guards', 'max_candidate_cliques'):
            try:
                validate_positive_int(getattr(self, name), name)
            except ValueError as e:
                raise BudgetExceeded(str(e)) from None

    @classmethod
    def from_dict(cls, d):
        return cls(**(d or {}))


def _check_vertices(g, budget):
    if g.vertex_count > budget.max_vertices:
        raise BudgetExceeded(
            'Graph has {} vertices; oracle budget allows {}'.format(
                g.vertex_count, budget.max_vertices))


# =============================================================================
# CLIQUES
# =============================================================================

def brute_force_cliques(g, budget=None):
    '''Every subset in increasing bitmask order; keeps those that are
    complete and have no common neighbour outside themselves.'''
    budget = budget or OracleBudget()
    _check_vertices(g, budget)
    size = 1 << g.vertex_count
    complete = [True] * size
    common = [0] * size
    common[0] = g.all_mask
    found = []
    for mask in range(1, size):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        complete[mask] = complete[rest] and (
            rest & g.neighbor_masks[v]) == rest
        common[mask] = common[rest] & g.neighbor_masks[v]
        if complete[mask] and common[mask] == 0:
            found.append(mask_to_list(mask))
    return CliqueSet(found, g)


# =============================================================================
# COVERAGE
# =============================================================================

def optimal_coverage(g, fleet, budget=None):
    '''Exact maximum number of vertices covered by one maximal clique of
    G^r per guard of range r.

    Returns (Op, witness) where witness lists the chosen (range, clique)
    pairs. Two guards never need the same clique, so each range picks a
    combination of min(count, available) distinct cliques.
    '''
    budget = budget or OracleBudget()
    _check_vertices(g, budget)
    if fleet.total_guards > budget.max_guards:
        raise BudgetExceeded(
            'Fleet has {} guards; oracle budget allows {}'.format(
                fleet.total_guards, budget.max_guards))

    decompositions = clique_decompositions(g, fleet.ranges)
    candidates = sum(len(cs) for cs in decompositions.values())
    if candidates > budget.max_candidate_cliques:
        raise BudgetExceeded(
            '{} candidate cliques; oracle budget allows {}'.format(
                candidates, budget.max_candidate_cliques))

    groups = []
    for r, count in zip(fleet.ranges, fleet.counts):
        cs = decompositions[r]
        groups.append((r, min(count, len(cs)), cs.cliques, cs.masks()))

    # union of everything still choosable from group i onwards
    reach = [0] * (len(groups) + 1)
    for i in range(len(groups) - 1, -1, -1):
        union = reach[i + 1]
        for mask in groups[i][3]:
            union |= mask
        reach[i] = union

    best = [-1, ()]

    def search(i, covered, chosen):
        if i == len(groups):
            value = popcount(covered)
            if value > best[0]:
                best[0], best[1] = value, chosen
            return
        if popcount(covered | reach[i]) <= best[0]:
            return
        r, k, cliques, masks = groups[i]
        for combo in combinations(range(len(cliques)), k):
            union = covered
            for j in combo:
                union |= masks[j]
            search(i + 1, union,
                   chosen + tuple((r, cliques[j]) for j in combo))

    search(0, 0, ())
    logger.debug('Optimal coverage %s over %s candidates', best[0], candidates)
    return best[0], list(best[1])


@dataclass(frozen=True)
class CoverageComparison:
    greedy: int
    optimal: int
    homogeneous: bool

    @property
    def ratio(self):
        if self.optimal == 0:
            return Fraction(1)
        return Fraction(self.greedy, self.optimal)

    @property
    def bound(self):
        return GREEDY_FACTOR * self.optimal

    @property
    def margin(self):
        return self.greedy - self.bound

    @property
    def meets_guarantee(self):
        return self.greedy >= self.bound

    def to_dict(self):
        return OrderedDict([
            ('greedy', self.greedy),
            ('optimal', self.optimal),
            ('ratio', float(self.ratio)),
            ('bound', self.bound),
            ('margin', self.margin),
            ('homogeneous', self.homogeneous),
            ('meets_guarantee', self.meets_guarantee),
        ])


def greedy_vs_optimal(g, fleet, budget=None, tie_break=None):
    optimal, _ = optimal_coverage(g, fleet, budget)
    plan = decompose(g, fleet, tie_break)
    comparison = CoverageComparison(
        greedy=plan.covered_count, optimal=optimal,
        homogeneous=len(fleet.ranges) == 1)
    logger.info(
        'Greedy covers %s, optimum %s (bound %.3f)',
        comparison.greedy, comparison.optimal, comparison.bound)
    return comparison


# =============================================================================
# GAME
# =============================================================================

def _bfs_distances(g, source):
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def exhaustive_game_search(g, guard_range, budget=None):
    '''Whether one guard of the given range can answer every attack
    sequence of length up to |V| and stay in a secure position.

    The guard's response is forced (it must move to the attacked vertex),
    so the game tree branches on attacks only. Distances come from a
    separate BFS, not from the shared distance matrix.
    '''
    budget = budget or OracleBudget()
    try:
        r = validate_positive_int(guard_range, 'Range')
    except ValueError as e:
        raise InvalidRange(str(e)) from None
    _check_vertices(g, budget)
    if g.vertex_count == 0:
        return True
    if not is_connected(g):
        raise Infeasible('Game search needs a connected graph')

    n = g.vertex_count
    dist = [_bfs_distances(g, v) for v in g.vertices]

    def secure(p):
        return all(dist[p].get(v, math.inf) <= r for v in g.vertices)

    memo = {}

    def guard_survives(p, depth):
        if depth == 0:
            return True
        key = (p, depth)
        if key not in memo:
            memo[key] = all(
                dist[p][v] <= r and secure(v) and
                guard_survives(v, depth - 1)
                for v in g.vertices)
        return memo[key]

    return any(
        secure(p) and guard_survives(p, n) for p in g.vertices)
