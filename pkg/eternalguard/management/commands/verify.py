#!/usr/bin/env python
# -*- coding: utf-8 -*-

import json

from django.conf import settings

from eternalguard.management.base import EternalGuardCommand
from eternalguard.oracle import OracleBudget, greedy_vs_optimal


class Command(EternalGuardCommand):
    help = "Compare greedy coverage with the exhaustive optimum."

    def add_arguments(self, parser):
        self.add_graph_arguments(parser)
        self.add_fleet_arguments(parser)
        parser.add_argument('--max-vertices', type=int, dest='max_vertices')
        parser.add_argument('--max-guards', type=int, dest='max_guards')
        parser.add_argument(
            '--max-candidate-cliques', type=int, dest='max_candidate_cliques')
        self.add_out_argument(parser)

    def get_budget(self, options):
        budget = dict(settings.ETERNALGUARD_ORACLE_BUDGET)
        for key in ('max_vertices', 'max_guards', 'max_candidate_cliques'):
            if options.get(key) is not None:
                budget[key] = options[key]
        return OracleBudget.from_dict(budget)

    def handle(self, *args, **options):
        g = self.load_graph(options)
        fleet = self.load_fleet(options)
        comparison = greedy_vs_optimal(g, fleet, self.get_budget(options))
        self.write_output(
            json.dumps(comparison.to_dict(), indent=2) + '\n', options['out'])
