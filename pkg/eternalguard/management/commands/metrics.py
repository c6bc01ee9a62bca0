#!/usr/bin/env python
# -*- coding: utf-8 -*-

import json

from django.conf import settings

from eternalguard import constants_internal
from eternalguard.management.base import EternalGuardCommand
from eternalguard.metrics import response_metrics


class Command(EternalGuardCommand):
    help = "Average guard response distance of a plan, exact and sampled."

    def add_arguments(self, parser):
        parser.add_argument('--plan', required=True, help='Plan JSON file')
        parser.add_argument(
            '--empirical', type=int, default=None,
            help='Number of Monte-Carlo attacks to sample')
        parser.add_argument('--seed', type=int, default=None)
        parser.add_argument(
            '--convention', choices=constants_internal.conventions,
            default=constants_internal.convention_reset,
            help='Guard position before each sampled attack')
        self.add_out_argument(parser)

    def handle(self, *args, **options):
        plan = self.load_plan(options)
        metrics = response_metrics(
            plan.graph, plan,
            empirical=options['empirical'],
            seed=self.get_seed(options['seed']),
            convention=options['convention'],
            chunk=settings.ETERNALGUARD_MONTE_CARLO_CHUNK)
        self.write_output(
            json.dumps(metrics.to_dict(), indent=2) + '\n', options['out'])
