#!/usr/bin/env python
# -*- coding: utf-8 -*-

# =============================================================================
# IMPORTS
# =============================================================================

import logging
import sys

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from eternalguard import constants_internal
from eternalguard.clustering import GuardFleet
from eternalguard.common_internal import resolve_seed
from eternalguard.exceptions import EternalGuardError
from eternalguard.formats import read_graph, read_plan

# =============================================================================
# LOGGING
# =============================================================================

logger = logging.getLogger('eternalguard')


# =============================================================================
# COMMAND
# =============================================================================

class EternalGuardCommand(BaseCommand):
    '''Library and file errors become exit code 1 instead of a traceback.'''

    requires_system_checks = []

    def create_parser(self, prog_name, subcommand, **kwargs):
        '''Bad flags exit with the validation status, not argparse's 2.'''
        parser = super(EternalGuardCommand, self).create_parser(
            prog_name, subcommand, **kwargs)
        django_error = parser.error

        def error(message):
            if parser.called_from_command_line:
                parser.print_usage(sys.stderr)
                parser.exit(
                    constants_internal.exit_validation_error,
                    '{}: error: {}\n'.format(parser.prog, message))
            django_error(message)

        parser.error = error
        return parser

    def add_graph_arguments(self, parser):
        parser.add_argument(
            '--graph', required=True,
            help='Edge-list or JSON graph file')
        parser.add_argument(
            '--format', choices=constants_internal.graph_formats,
            default=None,
            help='Graph file format; inferred from the extension if omitted')

    def add_fleet_arguments(self, parser):
        parser.add_argument(
            '--ranges', required=True,
            help='Comma separated guard ranges, e.g. 3,1')
        parser.add_argument(
            '--counts', required=True,
            help='Comma separated guard counts per range, e.g. 1,2')

    def add_out_argument(self, parser, help='Output file (default: stdout)'):
        parser.add_argument('--out', default=None, help=help)

    def execute(self, *args, **options):
        try:
            return super(EternalGuardCommand, self).execute(*args, **options)
        except (EternalGuardError, OSError) as e:
            raise CommandError(
                str(e),
                returncode=constants_internal.exit_validation_error) from e

    def load_graph(self, options):
        return read_graph(options['graph'], options.get('format'))

    def load_plan(self, options):
        return read_plan(options['plan'])

    def load_fleet(self, options):
        return GuardFleet.parse(options['ranges'], options['counts'])

    def get_seed(self, seed):
        if seed is None:
            seed = settings.ETERNALGUARD_DEFAULT_SEED
        try:
            return resolve_seed(seed, settings.ETERNALGUARD_SEED_ENV)
        except ValueError as e:
            raise CommandError(
                str(e),
                returncode=constants_internal.exit_validation_error) from None

    def write_output(self, text, path):
        if path:
            with open(path, 'w', encoding='utf-8') as f:
                f.write(text)
            logger.info('Wrote {}'.format(path))
        else:
            self.stdout.write(text, ending='')
