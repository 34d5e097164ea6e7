import itertools

import pytest

from antimagic.errors import BudgetError
from antimagic.graph import Graph, is_antimagic
from antimagic.oracle import oracle_antimagic_exists


def test_single_edge():
    exists, witness = oracle_antimagic_exists(Graph(2, [(0, 1)]))
    assert exists
    o, l = witness
    assert is_antimagic(o, l)[0]


def test_edgeless():
    exists, witness = oracle_antimagic_exists(Graph(1, []))
    assert exists


def test_two_isolated_vertices_collide():
    # both isolated vertices carry sum 0, so nothing can work
    exists, witness = oracle_antimagic_exists(Graph(4, [(0, 1)]))
    assert not exists and witness is None


def test_triangle_and_paths():
    for g in [
        Graph(3, [(0, 1), (0, 2), (1, 2)]),
        Graph(3, [(0, 1), (1, 2)]),
        Graph(4, [(0, 1), (1, 2), (2, 3)]),
        Graph(4, [(0, 1), (0, 2), (0, 3)]),
    ]:
        exists, witness = oracle_antimagic_exists(g)
        assert exists
        assert is_antimagic(*witness)[0]


def test_witness_matches_exhaustive_check():
    # independent re-check of the witness against raw enumeration on C4
    g = Graph(4, [(0, 1), (0, 3), (1, 2), (2, 3)])
    exists, witness = oracle_antimagic_exists(g)
    assert exists
    found = False
    from antimagic.graph import ArcLabeling, Orientation, vertex_sums
    for bits in itertools.product([True, False], repeat=4):
        for perm in itertools.permutations(range(1, 5)):
            s = vertex_sums(Orientation(g, list(bits)), ArcLabeling(list(perm)))
            if len(set(s.sums)) == 4:
                found = True
    assert found


def test_budget():
    g = Graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    assert g.m == 10
    with pytest.raises(BudgetError):
        oracle_antimagic_exists(g)
