#!/usr/bin/env python
# -*- coding: utf-8 -*-

import warnings


# =============================================================================
# ERRORS
# =============================================================================

class EternalGuardError(ValueError):
    pass


class InvalidVertex(EternalGuardError):
    pass


class InvalidEdge(EternalGuardError):
    pass


class EmptyGraph(EternalGuardError):
    pass


class InvalidRange(EternalGuardError):
    pass


class InvalidFleet(EternalGuardError):
    pass


class Infeasible(EternalGuardError):
    pass


class NoGuards(EternalGuardError):
    pass


class WrongGraph(EternalGuardError):
    pass


class NoSamples(EternalGuardError):
    pass


class BudgetExceeded(EternalGuardError):
    pass


class ScenarioError(EternalGuardError):
    pass


class GraphFormatError(EternalGuardError):
    '''malformed graph, plan or attack file'''

    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        self.reason = message
        where = []
        if line is not None:
            where.append('line {}'.format(line))
        if field is not None:
            where.append('field "{}"'.format(field))
        if where:
            message = '{}: {}'.format(', '.join(where), message)
        super(GraphFormatError, self).__init__(message)


# =============================================================================
# WARNINGS
# =============================================================================

class PartialCoverageWarning(UserWarning):
    pass


warnings.simplefilter('default', PartialCoverageWarning)
