import random

import pytest

import oracles
from scramblegon import invariants as inv
from scramblegon import multigraph as mg


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return mg.from_edge_list(10, [(u, v, 1) for u, v in outer + inner + spokes])


def test_connectivity_chain_on_random_graphs():
    rng = random.Random(11)
    for _ in range(15):
        g = oracles.random_connected_graph(rng, rng.randrange(3, 9), 0.5)
        kappa = inv.vertex_connectivity(g)
        lam = inv.edge_connectivity(g)
        assert 1 <= kappa <= lam <= inv.min_degree(g)


def test_known_connectivities():
    assert inv.edge_connectivity(mg.cycle(5)) == 2
    assert inv.edge_connectivity(mg.complete(6)) == 5
    assert inv.edge_connectivity(mg.path(4)) == 1
    assert inv.edge_connectivity(mg.cycle(2)) == 2  # doubled edge
    assert inv.vertex_connectivity(mg.complete(5)) == 4
    assert inv.vertex_connectivity(mg.cycle(5)) == 2
    assert inv.vertex_connectivity(mg.star(4)) == 1
    assert inv.vertex_connectivity(petersen()) == 3
    assert inv.edge_connectivity(petersen()) == 3


def test_disconnected_graph_invariants():
    g = mg.from_edge_list(4, [(0, 1, 1), (2, 3, 1)])
    assert not inv.is_connected(g)
    assert inv.edge_connectivity(g) == 0
    assert inv.vertex_connectivity(g) == 0
    assert sorted(sorted(c) for c in inv.components(g)) == [[0, 1], [2, 3]]


def test_bridges():
    assert sorted(tuple(sorted(b)) for b in inv.bridges(mg.path(4))) == [(0, 1), (1, 2), (2, 3)]
    assert inv.bridges(mg.cycle(5)) == []
    # a doubled edge is never a bridge
    g = mg.from_edge_list(3, [(0, 1, 2), (1, 2, 1)])
    assert [tuple(sorted(b)) for b in inv.bridges(g)] == [(1, 2)]


def test_edge_boundary():
    q3 = mg.hypercube(3)
    singles = [inv.edge_boundary(q3, [v]) for v in range(8)]
    assert singles == [3] * 8
    with pytest.raises(ValueError):
        inv.edge_boundary(q3, [])
    with pytest.raises(ValueError):
        inv.edge_boundary(q3, range(8))


def test_min_cut_between_respects_multiplicities():
    g = mg.from_edge_list(4, [(0, 1, 3), (1, 2, 1), (2, 3, 3)])
    value, side = inv.min_cut_between(g, {0}, {3})
    assert value == 1
    assert side in ({0, 1}, frozenset({0, 1}))


def test_is_connected_subset():
    g = mg.cycle(6)
    assert inv.is_connected_subset(g, {0, 1, 2})
    assert not inv.is_connected_subset(g, {0, 2})
    assert not inv.is_connected_subset(g, set())
    assert inv.is_connected_subset(g, {4})


def test_independence_number_known():
    assert inv.independence_number(mg.complete(6)) == 1
    assert inv.independence_number(mg.cycle(5)) == 2
    assert inv.independence_number(mg.cycle(8)) == 4
    assert inv.independence_number(mg.complete_bipartite(3, 4)) == 4
    assert inv.independence_number(petersen()) == 4


def test_independence_number_against_brute_force():
    rng = random.Random(23)
    for _ in range(20):
        g = mg.random_graph(rng.randrange(2, 10), rng.choice([0.2, 0.5, 0.8]),
                            seed=rng.randrange(1 << 30))
        assert inv.independence_number(g) == oracles.brute_alpha(g)


def test_max_independent_set_is_witnessed():
    rng = random.Random(31)
    for _ in range(10):
        g = mg.random_graph(7, 0.5, seed=rng.randrange(1 << 30))
        s = inv.max_independent_set(g)
        assert len(s) == inv.independence_number(g)
        assert all(g.mult[u, v] == 0 for u in s for v in s if u != v)
