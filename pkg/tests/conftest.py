import random

import pytest

from loctour.graphs import PartialGraph, SimpleGraph


def graph(n, *edges):
    return SimpleGraph(n, frozenset(edges))


def pog(n, edges=(), arcs=()):
    return PartialGraph(n, frozenset(edges), frozenset(arcs))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> SimpleGraph:
    edges = {
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    }
    return SimpleGraph(n, frozenset(edges))


def random_pog(rng: random.Random, n: int, p: float = 0.5) -> PartialGraph:
    g = random_graph(rng, n, p)
    edges, arcs = set(), set()
    for u, v in g.edges:
        roll = rng.random()
        if roll < 0.5:
            edges.add((u, v))
        elif roll < 0.75:
            arcs.add((u, v))
        else:
            arcs.add((v, u))
    return PartialGraph(n, frozenset(edges), frozenset(arcs))


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
