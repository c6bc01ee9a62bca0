#!/usr/bin/env python
# -*- coding: utf-8 -*-

import json
import logging
import os
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Optional

import schema

import eternalguard
from eternalguard import constants_internal
from eternalguard.clustering import (
    GuardFleet, coverage_ratio, decompose, parse_tie_break)
from eternalguard.common_internal import file_hash, make_hash, resolve_seed
from eternalguard.exceptions import EternalGuardError, ScenarioError
from eternalguard.formats import load_attacks, read_graph
from eternalguard.metrics import response_metrics
from eternalguard.security import initial_placement

logger = logging.getLogger(__name__)


class Scenario(dict):
    '''One reproducible run: graph, fleet, tie-break, attacks, metrics.

    Relative paths resolve against ``base_dir`` (the scenario file's
    directory when loaded with ``Scenario.from_file``).
    '''

    def __init__(self, *args, base_dir='.', **kwargs):
        super().__init__(*args, **kwargs)
        self.base_dir = base_dir

    @classmethod
    def from_file(cls, path):
        try:
            with open(path, encoding='utf-8') as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise ScenarioError(
                '{}: line {}: {}'.format(path, e.lineno, e.msg)) from None
        if not isinstance(data, dict):
            raise ScenarioError('{}: must be a JSON object'.format(path))
        scenario = cls(data, base_dir=os.path.dirname(os.path.abspath(path)))
        scenario.clean()
        return scenario

    def clean(self):

        scenario_schema = schema.Schema({
            'graph': {
                'path': str,
                schema.Optional('format'): schema.Or(
                    *constants_internal.graph_formats),
            },
            'fleet': {'ranges': [int], 'counts': [int]},
            schema.Optional('tie_break'): str,
            schema.Optional('attacks'): {
                'source': schema.Or(str, list),
                schema.Optional('batch'): bool,
            },
            schema.Optional('metrics'): {
                schema.Optional('empirical'): schema.And(int, lambda n: n >= 1),
                schema.Optional('seed'): int,
                schema.Optional('convention'): schema.Or(
                    *constants_internal.conventions),
            },
            schema.Optional('stop_on_violation'): bool,
            schema.Optional('name'): str,
        })

        try:
            scenario_schema.validate(dict(self))
        except schema.SchemaError as e:
            raise ScenarioError('scenario: {}'.format(e)) from None

        try:
            self.fleet = GuardFleet.parse(
                ','.join(str(r) for r in self['fleet']['ranges']),
                ','.join(str(c) for c in self['fleet']['counts']))
            self.tie_break = parse_tie_break(self.get('tie_break'))
        except (EternalGuardError, ValueError) as e:
            raise ScenarioError('scenario: {}'.format(e)) from None

        graph_path = self.resolve_path(self['graph']['path'])
        if not os.path.isfile(graph_path):
            raise ScenarioError(
                'scenario: graph file "{}" not found'.format(graph_path))
        self.setdefault('metrics', {})
        self.setdefault('stop_on_violation', False)

    def resolve_path(self, path):
        if os.path.isabs(path):
            return path
        return os.path.join(self.base_dir, path)

    @property
    def graph_path(self):
        return self.resolve_path(self['graph']['path'])

    def attack_source(self):
        attacks = self.get('attacks')
        if attacks is None:
            return None, False
        source = attacks['source']
        batch = attacks.get('batch', False)
        if isinstance(source, str) and not source.startswith(
                constants_internal.random_attacks_prefix + ':'):
            source = self.resolve_path(source)
        return source, batch

    def input_hashes(self):
        hashes = OrderedDict([
            ('scenario', make_hash(json.dumps(dict(self), sort_keys=True))),
            ('graph_file', file_hash(self.graph_path)),
        ])
        source, _ = self.attack_source()
        if isinstance(source, str) and os.path.isfile(source):
            hashes['attacks_file'] = file_hash(source)
        return hashes


@dataclass
class RunReport:
    plan_summary: dict
    coverage_ratio: str
    tau_analytic: float
    tau_empirical: Optional[float] = None
    violations: int = 0
    steps: int = 0
    log_digest: Optional[str] = None
    tool_version: str = eternalguard.__version__
    input_hashes: dict = field(default_factory=dict)
    graph_digest: Optional[str] = None

    def to_dict(self):
        return OrderedDict([
            ('plan_summary', dict(self.plan_summary)),
            ('coverage_ratio', self.coverage_ratio),
            ('tau_analytic', self.tau_analytic),
            ('tau_empirical', self.tau_empirical),
            ('violations', self.violations),
            ('steps', self.steps),
            ('log_digest', self.log_digest),
            ('tool_version', self.tool_version),
            ('input_hashes', dict(self.input_hashes)),
            ('graph_digest', self.graph_digest),
        ])

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + '\n'


def run_scenario(scenario):
    g = read_graph(scenario.graph_path, scenario['graph'].get('format'))
    plan = decompose(g, scenario.fleet, scenario.tie_break)

    violations = 0
    steps = 0
    digest = None
    source, batch = scenario.attack_source()
    if source is not None:
        attacks = load_attacks(source, plan, batch=batch)
        state = initial_placement(plan)
        state, violations = state.run_sequence(
            attacks, stop_on_violation=scenario['stop_on_violation'])
        steps = state.time
        digest = state.log_digest()
        if violations:
            logger.warning('%s violations in %s steps', violations, steps)

    metrics_config = scenario['metrics']
    metrics = response_metrics(
        g, plan,
        empirical=metrics_config.get('empirical'),
        seed=resolve_seed(metrics_config.get('seed', 0)),
        convention=metrics_config.get(
            'convention', constants_internal.convention_reset))

    report = RunReport(
        plan_summary=plan.summary(),
        coverage_ratio=str(coverage_ratio(plan)),
        tau_analytic=float(metrics.tau_analytic),
        tau_empirical=metrics.tau_empirical,
        violations=violations,
        steps=steps,
        log_digest=digest,
        input_hashes=scenario.input_hashes(),
        graph_digest=g.digest,
    )
    return plan, report
