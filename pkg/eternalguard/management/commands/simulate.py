#!/usr/bin/env python
# -*- coding: utf-8 -*-

import logging
from collections import OrderedDict
from itertools import groupby

from django.core.management.base import CommandError

from eternalguard import constants_internal
from eternalguard.export import export_events, export_simulation
from eternalguard.formats import load_attacks
from eternalguard.management.base import EternalGuardCommand
from eternalguard.security import initial_placement, mean_response_distance

logger = logging.getLogger('eternalguard')


def get_simulation_summary(state, violations):
    g = state.graph
    per_step = []
    for time, events in groupby(state.log, key=lambda e: e.time):
        rows = []
        for event in events:
            row = event.to_dict()
            row['vertex'] = g.label(event.vertex)
            rows.append(row)
        per_step.append(OrderedDict([('time', time), ('events', rows)]))
    return OrderedDict([
        ('steps', state.time),
        ('violations', violations),
        ('per_step_events', per_step),
        ('mean_response_distance', mean_response_distance(state)),
        ('log_digest', state.log_digest()),
    ])


class Command(EternalGuardCommand):
    help = "Replay attacks against a cluster plan and report violations."

    def add_arguments(self, parser):
        parser.add_argument('--plan', required=True, help='Plan JSON file')
        parser.add_argument(
            '--attacks', required=True,
            help='Attack file, or "random:N:seed"')
        parser.add_argument(
            '--batch-mode', action='store_true', dest='batch_mode',
            help='Each line (or random step) is one simultaneous multi-attack')
        parser.add_argument(
            '--stop-on-violation', action='store_true',
            dest='stop_on_violation',
            help='Stop at the first violation and exit with status 2')
        parser.add_argument(
            '--events-csv', dest='events_csv', default=None,
            help='Also write the event log as CSV')
        self.add_out_argument(parser, help='Report file (default: stdout)')

    def handle(self, *args, **options):
        plan = self.load_plan(options)
        attacks = load_attacks(
            options['attacks'], plan, batch=options['batch_mode'])
        state = initial_placement(plan)
        state, violations = state.run_sequence(
            attacks, stop_on_violation=options['stop_on_violation'])

        if options['events_csv']:
            with open(options['events_csv'], 'w', newline='') as f:
                export_events(f, state)

        summary = get_simulation_summary(state, violations)
        if options['out']:
            with open(options['out'], 'w', encoding='utf-8') as f:
                export_simulation(f, summary)
        else:
            export_simulation(self.stdout, summary)

        if violations:
            logger.warning('{} violations in {} steps'.format(
                violations, state.time))
            if options['stop_on_violation']:
                raise CommandError(
                    'Violation detected at step {}'.format(state.time),
                    returncode=constants_internal.exit_violations)
        else:
            logger.info('{} steps, no violations'.format(state.time))
