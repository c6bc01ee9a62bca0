#!/usr/bin/env python
# -*- coding: utf-8 -*-

import csv
import dataclasses
import json

from eternalguard.security import Event, initial_placement

# one fill colour per cluster, cycled when there are more clusters
CLUSTER_COLORS = [
    '#1f77b4', '#ff7f0e', '#2ca02c', '#d62728', '#9467bd',
    '#8c564b', '#e377c2', '#bcbd22', '#17becf', '#aec7e8',
]
UNCOVERED_COLOR = 'grey'


def _quote(value):
    return '"{}"'.format(str(value).replace('\\', '\\\\').replace('"', '\\"'))


def get_dot_lines(plan):
    g = plan.graph
    guard_vertices = set()
    if plan.clusters:
        guard_vertices = {
            p.vertex for p in initial_placement(plan).guard_positions()}

    lines = ['graph G {', '  node [style=filled];']
    for cluster in plan.clusters:
        color = CLUSTER_COLORS[(cluster.id - 1) % len(CLUSTER_COLORS)]
        lines.append('  // C{} range {} guard {}'.format(
            cluster.id, cluster.guard_range, cluster.guard_id))
        for v in cluster.vertices:
            attrs = [
                'fillcolor={}'.format(_quote(color)),
                'cluster={}'.format(cluster.id),
            ]
            if v in guard_vertices:
                attrs.append('shape=doublecircle')
            lines.append('  {} [{}];'.format(
                _quote(g.label(v)), ', '.join(attrs)))
    for v in sorted(plan.uncovered):
        lines.append('  {} [fillcolor={}];'.format(
            _quote(g.label(v)), UNCOVERED_COLOR))
    for u, v in g.sorted_edges():
        lines.append('  {} -- {};'.format(
            _quote(g.label(u)), _quote(g.label(v))))
    lines.append('}')
    return lines


def export_dot(fp, plan):
    for line in get_dot_lines(plan):
        fp.write(line + '\n')


def export_report(fp, report):
    fp.write(report.to_json())


def export_simulation(fp, summary):
    fp.write(json.dumps(summary, indent=2, sort_keys=True) + '\n')


EVENT_COLUMNS = [f.name for f in dataclasses.fields(Event)]


def get_rows_for_events(state):
    g = state.graph
    rows = [EVENT_COLUMNS]
    for event in state.log:
        row = [getattr(event, name) for name in EVENT_COLUMNS]
        row[2] = g.label(event.vertex)
        rows.append(['' if value is None else value for value in row])
    return rows


def export_events(fp, state):
    writer = csv.writer(fp)
    writer.writerows(get_rows_for_events(state))

