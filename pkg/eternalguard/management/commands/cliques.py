#!/usr/bin/env python
# -*- coding: utf-8 -*-

import json
from collections import OrderedDict

from django.conf import settings

from eternalguard.cliques import maximal_cliques
from eternalguard.common_internal import natural_sort_key
from eternalguard.graph import graph_power
from eternalguard.management.base import EternalGuardCommand
from eternalguard.oracle import OracleBudget, brute_force_cliques


class Command(EternalGuardCommand):
    help = (
        "Maximal cliques of a graph or of its r-th power, one clique per "
        "line as sorted labels.")

    def add_arguments(self, parser):
        self.add_graph_arguments(parser)
        parser.add_argument(
            '--range', type=int, default=1, dest='guard_range',
            help='Enumerate the maximal cliques of G^range (default 1)')
        parser.add_argument(
            '--brute-force', action='store_true', dest='brute_force',
            help='Use the exhaustive subset oracle (small graphs only)')
        parser.add_argument(
            '--json', action='store_true', dest='as_json',
            help='Write a JSON object with range, count and cliques instead')
        self.add_out_argument(parser)

    def handle(self, *args, **options):
        g = self.load_graph(options)
        power = graph_power(g, options['guard_range'])
        if options['brute_force']:
            budget = OracleBudget.from_dict(
                settings.ETERNALGUARD_ORACLE_BUDGET)
            cliques = brute_force_cliques(power, budget)
        else:
            cliques = maximal_cliques(power)

        labelled = [
            sorted((g.label(v) for v in c), key=natural_sort_key)
            for c in cliques]
        if options['as_json']:
            result = OrderedDict([
                ('range', options['guard_range']),
                ('count', len(labelled)),
                ('cliques', labelled),
            ])
            text = json.dumps(result, indent=2) + '\n'
        else:
            text = ''.join(
                ' '.join(str(label) for label in c) + '\n' for c in labelled)
        self.write_output(text, options['out'])
