from __future__ import annotations

import numpy as np
import pytest

from mcmatch.graph_core import (EdgeListError, build_graph, generate_random,
                                generate_worst_case, permute_representation,
                                read_edge_list, write_edge_list)
from mcmatch.gabow import ScalingMatcher
from mcmatch.verify import oracle_max_matching


def test_empty_graph():
    g = build_graph(0, [])
    assert g.node_count == 0
    assert g.edge_count == 0


def test_adjacency_order_follows_edge_order():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert list(g.incident_edges(1)) == [0, 1]
    assert list(g.incident_edges(2)) == [1, 2]
    assert g.degree(0) == 1


def test_multigraph_accepted():
    g = build_graph(2, [(0, 1), (0, 1), (1, 1)])
    assert g.edge_count == 3
    # the self-loop appears twice in its endpoint's list
    assert list(g.incident_edges(1)) == [0, 1, 2, 2]


def test_endpoint_out_of_range_rejected():
    with pytest.raises(ValueError):
        build_graph(3, [(0, 1), (1, 3)])


def test_opposite():
    g = build_graph(3, [(0, 1), (2, 2)])
    assert g.opposite(0, 0) == 1
    assert g.opposite(0, 1) == 0
    assert g.opposite(1, 2) == 2
    with pytest.raises(ValueError):
        g.opposite(0, 2)


def test_worst_case_node_counts():
    for n, m, mode in ((16, 2, 0), (64, 200, 0), (64, 200, 1), (128, 512, 1)):
        g, z = generate_worst_case(n, m, mode)
        expect = 2 * int(np.sqrt(m / 2.0)) + 8 * (n // 8)
        if mode == 1:
            expect += sum(2 * k for k in range(5, n) if k * k < n)
        assert g.node_count == expect
        assert z == 0


def test_worst_case_edge_counts():
    for n, m, mode in ((16, 2, 0), (64, 200, 1)):
        g, _ = generate_worst_case(n, m, mode)
        c = 2 * int(np.sqrt(m / 2.0))
        expect = c * (c - 1) // 2 + (n // 8) * 14
        if mode == 1:
            expect += sum(2 * (2 * k) - 2 for k in range(5, n) if k * k < n)
        assert g.edge_count == expect


def test_worst_case_mode1_strictly_larger():
    g0, _ = generate_worst_case(64, 128, 0)
    g1, _ = generate_worst_case(64, 128, 1)
    extra = sum(2 * k for k in range(5, 64) if k * k < 64)
    assert g1.node_count == g0.node_count + extra
    assert extra > 0


def test_worst_case_greedy_exposes_chain_endpoints():
    # K2 plus two 8-node chains; greedy leaves both endpoints of each chain
    # exposed
    g, z = generate_worst_case(16, 2, 0)
    assert g.node_count == 18
    matcher = ScalingMatcher(g)
    size = matcher.init_greedy()
    assert g.node_count - 2 * size == 4
    exposed = [v for v in range(g.node_count) if matcher.mate[v] == -1]
    # chain nodes are numbered 2..9 and 10..17; ends are exposed
    assert exposed == [2, 9, 10, 17]


def test_generate_random_deterministic():
    a = generate_random(100, 400, 42)
    b = generate_random(100, 400, 42)
    assert np.array_equal(a.edge_source, b.edge_source)
    assert np.array_equal(a.edge_target, b.edge_target)
    c = generate_random(100, 400, 43)
    assert not (np.array_equal(a.edge_source, c.edge_source)
                and np.array_equal(a.edge_target, c.edge_target))


def test_generate_random_counts():
    g = generate_random(5, 0, 7)
    assert g.node_count == 5 and g.edge_count == 0
    g = generate_random(10, 40, 1)
    assert g.node_count == 10 and g.edge_count == 40


def test_permute_preserves_structure():
    g, _ = generate_worst_case(16, 8, 1)
    p = permute_representation(g, 5)
    assert p.node_count == g.node_count
    assert p.edge_count == g.edge_count
    assert p.degree_multiset() == g.degree_multiset()
    q = permute_representation(g, 5)
    assert np.array_equal(p.edge_source, q.edge_source)
    assert np.array_equal(p.edge_target, q.edge_target)


def test_permute_preserves_max_matching():
    rng = np.random.Generator(np.random.PCG64(9))
    for trial in range(50):
        n = int(rng.integers(1, 13))
        m = int(rng.integers(0, 20))
        g = generate_random(n, m, trial)
        p = permute_representation(g, trial + 1)
        assert oracle_max_matching(p) == oracle_max_matching(g)


def test_edge_list_round_trip(tmp_path):
    path = tmp_path / "g.txt"
    g, _ = generate_worst_case(16, 8, 0)
    write_edge_list(g, path)
    h = read_edge_list(path)
    assert h.node_count == g.node_count
    assert np.array_equal(h.edge_source, g.edge_source)
    assert np.array_equal(h.edge_target, g.edge_target)


def test_edge_list_parse(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("3 2\n0 1\n1 2\n")
    g = read_edge_list(path)
    assert g.node_count == 3 and list(g.edges()) == [(0, 1), (1, 2)]

    path.write_text("2 1\n0 5\n")
    with pytest.raises(EdgeListError) as err:
        read_edge_list(path)
    assert err.value.line == 2
    assert "endpoint out of range" in str(err.value)

    path.write_text("2\n")
    with pytest.raises(EdgeListError) as err:
        read_edge_list(path)
    assert err.value.line == 1

    path.write_text("2 2\n0 1\n")
    with pytest.raises(EdgeListError) as err:
        read_edge_list(path)
    assert err.value.line == 3


def test_adjacency_endpoint_invariant():
    rng = np.random.Generator(np.random.PCG64(3))
    for trial in range(20):
        g = generate_random(int(rng.integers(1, 15)), int(rng.integers(0, 30)),
                            trial)
        seen = {e: 0 for e in range(g.edge_count)}
        for v in range(g.node_count):
            for e in g.incident_edges(v):
                e = int(e)
                assert v in (g.edge_source[e], g.edge_target[e])
                seen[e] += 1
        for e, c in seen.items():
            assert c == 2  # once per endpoint; twice for a self-loop
