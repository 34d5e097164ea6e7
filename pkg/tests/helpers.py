"""Shared seeded generators for the test suite."""

from antimagic.graph import Graph, is_connected
from antimagic.prng import Lcg


def random_graph(rng: Lcg, n_max: int = 40, m_max: int = 200) -> Graph:
    n = rng.randint(2, n_max)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    m = rng.randint(0, min(m_max, len(pairs)))
    edges = sorted(rng.sample(pairs, m))
    return Graph(n, edges)


def random_connected_graph(rng: Lcg, n_max: int = 40, m_max: int = 200) -> Graph:
    while True:
        g = random_graph(rng, n_max, m_max)
        if g.m and is_connected(g):
            return g


def random_composition(rng: Lcg, total_max: int = 60):
    """A tuple of parts >= 2 summing to at most total_max (sum >= 2)."""
    total = rng.randint(2, total_max)
    parts = []
    left = total
    while left >= 2:
        if left < 4:
            parts.append(left)
            break
        size = rng.randint(2, min(left - 2, 12))
        if left - size == 1:
            size += 1
        parts.append(size)
        left -= size
    return tuple(parts)
