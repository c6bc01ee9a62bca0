#!/usr/bin/env python
# -*- coding: utf-8 -*-


# =============================================================================
# CONSTANTS
# =============================================================================

# event kinds
attack = 'Attack'
response = 'Response'
violation = 'Violation'

# tie-break modes for the greedy cluster decomposition
tie_break_deterministic = 'det'
tie_break_seeded = 'seed'

# Monte-Carlo conventions for the empirical response distance
convention_reset = 'reset'
convention_stationary = 'stationary'
conventions = (convention_reset, convention_stationary)

# random attack source spec, e.g. "random:10000:42"
random_attacks_prefix = 'random'

# independent random streams derived from one master seed
stream_tie_break = 0
stream_attacks = 1
stream_monte_carlo = 2

# CLI exit codes
exit_ok = 0
exit_validation_error = 1
exit_violations = 2

# graph file formats
format_edges = 'edges'
format_json = 'json'
graph_formats = (format_edges, format_json)
