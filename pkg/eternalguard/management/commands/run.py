#!/usr/bin/env python
# -*- coding: utf-8 -*-

from django.core.management.base import CommandError

from eternalguard import constants_internal
from eternalguard.formats import write_plan
from eternalguard.management.base import EternalGuardCommand
from eternalguard.scenario import Scenario, run_scenario


class Command(EternalGuardCommand):
    help = "Run a scenario file end to end and write the run report."

    def add_arguments(self, parser):
        parser.add_argument(
            '--scenario', required=True, help='Scenario JSON file')
        parser.add_argument(
            '--plan-out', dest='plan_out', default=None,
            help='Also write the computed plan')
        self.add_out_argument(parser, help='Report file (default: stdout)')

    def handle(self, *args, **options):
        scenario = Scenario.from_file(options['scenario'])
        plan, report = run_scenario(scenario)
        if options['plan_out']:
            write_plan(plan, options['plan_out'])
        self.write_output(report.to_json(), options['out'])
        if report.violations and scenario['stop_on_violation']:
            raise CommandError(
                '{} violations'.format(report.violations),
                returncode=constants_internal.exit_violations)
