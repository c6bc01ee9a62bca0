#!/usr/bin/env python
# -*- coding: utf-8 -*-

# REMEMBER TO ALSO UPDATE setup.py CLASSIFIERS ON MAJOR BUMPS
__version__ = '0.3.0'


# =============================================================================
# FUNCTIONS
# =============================================================================

def get_version():
    return __version__
