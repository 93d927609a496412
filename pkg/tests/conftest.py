import random

import pytest

from spreadlab import Graph, is_connected


def random_connected_graph(rng: random.Random, n: int, extra_edge_prob: float = 0.3) -> Graph:
    """Random connected graph: a random spanning tree plus random extra edges."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u = order[i]
        v = order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < extra_edge_prob:
                edges.add((u, v))
    g = Graph(n, edges)
    assert is_connected(g)
    return g


def random_connected_bipartite(rng: random.Random, n: int) -> Graph:
    """Random connected bipartite graph on n >= 2 vertices."""
    while True:
        a = rng.randint(1, n - 1)
        b = n - a
        edges = {(i, a + rng.randrange(b)) for i in range(a)}
        for j in range(b):
            edges.add((rng.randrange(a), a + j))
        for i in range(a):
            for j in range(b):
                if rng.random() < 0.3:
                    edges.add((i, a + j))
        g = Graph(n, edges)
        if is_connected(g):
            return g


def random_cactus(rng: random.Random, n: int) -> Graph:
    """Random cactus: repeatedly glue a pendant edge or a cycle at a vertex."""
    edges = []
    built = 1
    while built < n:
        attach = rng.randrange(built)
        room = n - built
        if room >= 2 and rng.random() < 0.6:
            length = rng.randint(3, min(room + 1, 6))
            prev = attach
            for _ in range(length - 1):
                edges.append((prev, built))
                prev = built
                built += 1
            edges.append((prev, attach))
        else:
            edges.append((attach, built))
            built += 1
    return Graph(n, edges)


@pytest.fixture
def rng():
    return random.Random(20260824)
