#!/usr/bin/env python
# -*- coding: utf-8 -*-

import hashlib
import os
import re

import numpy as np


def id_label_name(id, label):
    if label is not None and str(label) != str(id):
        return '{} (label: {})'.format(id, label)
    return '{}'.format(id)


_DIGITS_RE = re.compile(r'(\d+)')


def natural_sort_key(label):
    '''Sort key that orders "v2" before "v10".

    >>> sorted(['v10', 'v2', 'v1'], key=natural_sort_key)
    ['v1', 'v2', 'v10']

    '''
    parts = _DIGITS_RE.split(str(label))
    return [
        (0, int(part), '') if part.isdigit() else (1, 0, part)
        for part in parts if part != ''
    ]


def make_hash(s):
    if isinstance(s, str):
        s = s.encode()
    return hashlib.sha224(s).hexdigest()


def file_hash(path):
    with open(path, 'rb') as f:
        return make_hash(f.read())


def validate_positive_int(value, description):
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise ValueError(
            '{} must be an integer, got {!r}'.format(description, value))
    if value < 1:
        raise ValueError(
            '{} must be positive, got {}'.format(description, value))
    return int(value)


# =============================================================================
# SEEDING
# =============================================================================

SEED_ENV_VAR = 'ETERNAL_GUARD_SEED'


def resolve_seed(seed, env_var=SEED_ENV_VAR):
    '''The environment variable, when set, overrides an explicit seed'''
    env_value = os.environ.get(env_var)
    if env_value not in (None, ''):
        try:
            return int(env_value)
        except ValueError:
            raise ValueError(
                'Environment variable {} must be an integer, '
                'got "{}"'.format(env_var, env_value)) from None
    return seed


def derive_rng(master_seed, stream, counter=0):
    '''Counter-based splitting: (seed, stream, counter) names one
    independent generator, so chunks can be drawn in any order.
    '''
    seq = np.random.SeedSequence(
        entropy=int(master_seed), spawn_key=(int(stream), int(counter)))
    return np.random.default_rng(seq)


def chunk_sizes(total, chunk):
    sizes = [chunk] * (total // chunk)
    if total % chunk:
        sizes.append(total % chunk)
    return sizes
