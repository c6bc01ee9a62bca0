#!/usr/bin/env python
# -*- coding: utf-8 -*-

import os
import sys
from importlib import import_module

import django
import django.core.management
from django.conf import settings
from django.core.exceptions import ImproperlyConfigured
from django.core.management.color import color_style

import eternalguard
from eternalguard.settings import get_default_settings

# =============================================================================
# CONSTANTS
# =============================================================================

APP_NAME = 'eternalguard'

# subcommands spelled with a dash on the command line
COMMAND_ALIASES = {
    'export-dot': 'export_dot',
}


# =============================================================================
# CLASSES
# =============================================================================

class EternalGuardManagementUtility(django.core.management.ManagementUtility):

    def limit_text(self, helptext, limit=80):
        if len(helptext) <= limit:
            return helptext
        limited = helptext
        while len(limited) > limit - 3:
            limited = " ".join(limited.split()[:-1])
        if limited != helptext:
            limited += "..."
        return limited

    def get_commands(self):
        return {
            name: app
            for name, app in django.core.management.get_commands().items()
            if app == APP_NAME}

    def main_help_text(self, commands_only=False):
        """
        Returns the script's main help text, as a string.
        """
        names = sorted(
            name.replace('_', '-') if name in COMMAND_ALIASES.values()
            else name
            for name in self.get_commands())
        if commands_only:
            return '\n'.join(names)

        second_line = (
            "Type '{} help <subcommand>' for help on a specific "
            "subcommand.").format(self.prog_name)
        usage = ["", second_line, "", "Available subcommands:", ""]
        style = color_style()
        usage.append(style.NOTICE("[{}]".format(APP_NAME)))
        for name in names:
            helptext = " ".join(
                self.fetch_command(name).help.splitlines())
            helptext = self.limit_text(helptext, 80)
            usage.append("  {} - {}".format(name, helptext))
        return '\n'.join(usage)

    def fetch_command(self, subcommand):
        if subcommand in COMMAND_ALIASES:
            command_module = import_module(
                'eternalguard.management.commands.{}'.format(
                    COMMAND_ALIASES[subcommand]))
            return command_module.Command()
        return super(EternalGuardManagementUtility, self).fetch_command(
            subcommand)


# =============================================================================
# FUNCTIONS
# =============================================================================

def eternalguard_and_django_version(*args, **kwargs):
    eternalguard_ver = eternalguard.get_version()
    django_ver = django.get_version()
    return "eternalguard: {} - Django: {}".format(eternalguard_ver, django_ver)


def execute_from_command_line(arguments, script_file):
    try:
        subcommand = arguments[1]
    except IndexError:
        subcommand = 'help'  # default

    if subcommand in ('version', '--version'):
        sys.stdout.write(eternalguard_and_django_version() + '\n')
    else:
        utility = EternalGuardManagementUtility(arguments)
        utility.prog_name = script_file
        utility.execute()


def eternalguard_cli():
    """
    This function is the entry point for the ``eternalguard`` console script.
    """

    if os.getcwd() not in sys.path:
        sys.path.insert(0, os.getcwd())

    # a project settings module is optional; fall back to the defaults
    try:
        settings.INSTALLED_APPS
    except (ImportError, ImproperlyConfigured):
        settings.configure(**get_default_settings())

    execute_from_command_line(sys.argv, APP_NAME)
