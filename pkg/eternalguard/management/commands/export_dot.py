#!/usr/bin/env python
# -*- coding: utf-8 -*-

import io

from eternalguard.export import export_dot
from eternalguard.management.base import EternalGuardCommand


class Command(EternalGuardCommand):
    help = "Write a plan as a Graphviz DOT graph, one colour per cluster."

    def add_arguments(self, parser):
        parser.add_argument('--plan', required=True, help='Plan JSON file')
        self.add_out_argument(parser, help='DOT file (default: stdout)')

    def handle(self, *args, **options):
        plan = self.load_plan(options)
        buffer = io.StringIO()
        export_dot(buffer, plan)
        self.write_output(buffer.getvalue(), options['out'])
