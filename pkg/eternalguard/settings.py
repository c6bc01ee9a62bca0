#!/usr/bin/env python
# -*- coding: utf-8 -*-

from eternalguard.common_internal import SEED_ENV_VAR


def collapse_to_unique_list(*args):
    """Create a new list with all elements from a given lists without reapeated
    elements

    """
    combined = []
    for arg in args:
        for elem in arg or ():
            if elem not in combined:
                combined.append(elem)
    return combined


def get_default_settings(initial_settings=None):
    if initial_settings is None:
        initial_settings = {}
    logging = {
        'version': 1,
        'disable_existing_loggers': False,
        'root': {
            'level': 'WARNING',
            'handlers': ['console'],
        },
        'formatters': {
            'verbose': {
                'format': '[%(levelname)s|%(asctime)s] %(name)s > %(message)s'
            },
            'simple': {
                'format': '%(levelname)s %(message)s'
            },
        },
        'handlers': {
            'console': {
                'level': 'DEBUG',
                'class': 'logging.StreamHandler',
                'formatter': 'verbose'
            },
        },
        'loggers': {
            # library modules log under eternalguard.<module>
            'eternalguard': {
                'handlers': ['console'],
                'propagate': False,
                'level': initial_settings.get(
                    'ETERNALGUARD_LOG_LEVEL', 'INFO'),
            },
        }
    }

    return {
        'DEBUG': False,
        'SECRET_KEY': 'eternalguard-cli',
        'INSTALLED_APPS': ['eternalguard'],
        'DATABASES': {},
        'USE_TZ': True,
        'TIME_ZONE': 'UTC',

        'LOGGING': logging,

        'ETERNALGUARD_DEFAULT_SEED': 0,
        'ETERNALGUARD_SEED_ENV': SEED_ENV_VAR,
        'ETERNALGUARD_ORACLE_BUDGET': {
            'max_vertices': 12,
            'max_guards': 4,
            'max_candidate_cliques': 24,
        },
        'ETERNALGUARD_MONTE_CARLO_CHUNK': 10000,
        'ETERNALGUARD_TIE_BREAK': 'det',
    }


def augment_settings(settings):
    default_settings = get_default_settings(settings)
    for k, v in default_settings.items():
        settings.setdefault(k, v)
    settings['INSTALLED_APPS'] = collapse_to_unique_list(
        ['eternalguard'], settings.get('INSTALLED_APPS'))
