#!/usr/bin/env python
# -*- coding: utf-8 -*-

import logging

from django.conf import settings
from django.core.management.base import CommandError

from eternalguard import constants_internal
from eternalguard.clustering import decompose, parse_tie_break
from eternalguard.formats import dumps, plan_to_dict
from eternalguard.management.base import EternalGuardCommand

logger = logging.getLogger('eternalguard')


class Command(EternalGuardCommand):
    help = "Split a graph into guard clusters and write the plan as JSON."

    def add_arguments(self, parser):
        self.add_graph_arguments(parser)
        self.add_fleet_arguments(parser)
        parser.add_argument(
            '--tie-break', dest='tie_break', default=None,
            help='"det" (default) or "seed:<n>"')
        self.add_out_argument(parser, help='Plan file (default: stdout)')

    def handle(self, *args, **options):
        g = self.load_graph(options)
        fleet = self.load_fleet(options)
        try:
            tie_break = parse_tie_break(
                options['tie_break'] or settings.ETERNALGUARD_TIE_BREAK)
        except ValueError as e:
            raise CommandError(
                str(e),
                returncode=constants_internal.exit_validation_error) from None

        plan = decompose(g, fleet, tie_break)
        for cluster in plan.clusters:
            logger.info('C{}: {} (range {}, guard {})'.format(
                cluster.id, ', '.join(str(g.label(v)) for v in cluster.vertices),
                cluster.guard_range, cluster.guard_id))
        if plan.uncovered:
            logger.warning('{} vertices left uncovered'.format(
                len(plan.uncovered)))
        self.write_output(dumps(plan_to_dict(plan)), options['out'])
