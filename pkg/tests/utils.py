#!/usr/bin/env python
# -*- coding: utf-8 -*-

import contextlib
import os
import random
import shutil
import sys
import tempfile
from io import StringIO

import networkx
from hypothesis import strategies as st

from eternalguard.clustering import GuardFleet, decompose
from eternalguard.formats import read_graph
from eternalguard.graph import build_graph


DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')


def data_path(*parts):
    return os.path.join(DATA_DIR, *parts)


FIG5_PATH = data_path('fig5.edges')

# 0-based indices of the example graph's clusters
FIG5_C1 = (0, 1, 2, 3, 4, 5, 6, 7)
FIG5_C2 = (8, 9)
FIG5_C3 = (10, 11)


def v(number):
    '''index of the example graph's vertex "v<number>"'''
    return number - 1


def fig5_graph():
    return read_graph(FIG5_PATH)


def fig5_fleet():
    return GuardFleet([3, 1], [1, 2])


def fig5_plan():
    return decompose(fig5_graph(), fig5_fleet())


def fig7_graph():
    '''0 and 3 are two hops apart through 5, but three hops apart inside
    {0, 1, 2, 3, 4}.'''
    return build_graph(
        6, [(0, 1), (1, 2), (2, 3), (0, 5), (5, 3), (1, 4), (2, 4)])


def path_graph(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return build_graph(
        n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def edgeless_graph(n):
    return build_graph(n, [])


def random_graph(rng, n, p):
    return build_graph(n, [
        (i, j) for i in range(n) for j in range(i + 1, n)
        if rng.random() < p])


def random_connected_graph(rng, n, p):
    '''random spanning tree plus independent extra edges'''
    edges = set()
    for i in range(1, n):
        edges.add((rng.randrange(i), i))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.add((i, j))
    return build_graph(n, edges)


def random_fleet(rng, max_range=4, max_kinds=3, max_count=3):
    kinds = rng.randint(1, max_kinds)
    ranges = rng.sample(range(1, max_range + 1), min(kinds, max_range))
    return GuardFleet.from_pairs(
        (r, rng.randint(1, max_count)) for r in ranges)


def seeded_rng(seed):
    return random.Random(seed)


@st.composite
def small_graphs(draw, max_vertices=9):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, edges)


def to_networkx(g):
    nx_graph = networkx.Graph()
    nx_graph.add_nodes_from(g.vertices)
    nx_graph.add_edges_from(g.sorted_edges())
    return nx_graph


@contextlib.contextmanager
def capture_stdout(target=None):
    original = sys.stdout
    if target is None:
        target = StringIO()
    sys.stdout = target
    yield target
    target.seek(0)
    sys.stdout = original


@contextlib.contextmanager
def tempdir():
    path = tempfile.mkdtemp()
    try:
        yield path
    finally:
        shutil.rmtree(path, ignore_errors=True)


@contextlib.contextmanager
def cd(directory):
    """
    ::

        with cd(new_cwd):
            os.walk('.')
    """
    old_path = os.getcwd()
    os.chdir(directory)
    yield
    os.chdir(old_path)
