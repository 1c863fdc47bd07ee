import random

import pytest

from bturan.embedding import find_embedding, find_embedding_general
from bturan.general import new_general_graph
from bturan.maxcut import (
    bipartite_subgraph_from_cut,
    cut_guarantee,
    is_locally_optimal,
    max_balanced_cut_brute,
    switch_to_large_cut,
)
from bturan.patterns import double_star, path, star


def complete_graph(n):
    return new_general_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def random_graph(rng, n, p):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return new_general_graph(n, edges)


def test_edgeless():
    g = new_general_graph(6, [])
    cut = switch_to_large_cut(g)
    assert cut.cut_size == 0 == cut_guarantee(g)


def test_k4_reaches_maximum():
    g = complete_graph(4)
    cut = switch_to_large_cut(g)
    assert cut.cut_size == 4 == cut_guarantee(g) == max_balanced_cut_brute(g)


def test_small_star():
    g = new_general_graph(4, [(0, 1), (0, 2), (0, 3)])
    cut = switch_to_large_cut(g)
    assert cut.cut_size >= 2 == cut_guarantee(g)


def test_odd_vertex_count_rejected():
    with pytest.raises(ValueError, match="even"):
        switch_to_large_cut(new_general_graph(5, []))


def test_seed_validation():
    g = complete_graph(4)
    with pytest.raises(ValueError, match="balanced"):
        switch_to_large_cut(g, seed=[0, 0, 0, 1])
    with pytest.raises(ValueError, match="every vertex"):
        switch_to_large_cut(g, seed=[0, 1])


def test_off_cut_edge_from_default_seed():
    # the improving swap must see non-adjacent pairs too: the only edge
    # starts inside side A under the default seed
    g = new_general_graph(12, [(3, 4)])
    cut = switch_to_large_cut(g)
    assert cut.cut_size == 1 >= cut_guarantee(g)


def test_guarantee_and_local_optimality_random():
    rng = random.Random(2024)
    for _ in range(200):
        n2 = rng.choice(range(4, 25, 2))
        g = random_graph(rng, n2, rng.random())
        cut = switch_to_large_cut(g)
        assert cut.cut_size >= cut_guarantee(g)
        assert is_locally_optimal(g, cut)
        assert sum(cut.sides) == n2 // 2
        if n2 <= 12:
            assert cut.cut_size <= max_balanced_cut_brute(g)


def test_bipartite_subgraph_shape():
    g = complete_graph(4)
    cut = switch_to_large_cut(g)
    bip = bipartite_subgraph_from_cut(g, cut)
    assert (bip.a, bip.b) == (2, 2)
    assert bip.edge_count == cut.cut_size == 4  # the 4-cycle


def test_already_bipartite_keeps_all_edges():
    # two parts {0,1,2} and {3,4,5}, complete between them
    g = new_general_graph(6, [(i, j) for i in range(3) for j in range(3, 6)])
    seed = [0, 0, 0, 1, 1, 1]
    cut = switch_to_large_cut(g, seed=seed)
    assert cut.cut_size == g.edge_count == 9


def test_freeness_transfers_to_cut_subgraph():
    rng = random.Random(7)
    patterns = [path(4), star(3), double_star(2, 2), path(5)]
    checked = 0
    for _ in range(300):
        n2 = rng.choice((6, 8, 10))
        g = random_graph(rng, n2, rng.random() * 0.6)
        for pat in patterns:
            if find_embedding_general(g, pat) is not None:
                continue
            bip = bipartite_subgraph_from_cut(g, switch_to_large_cut(g))
            assert find_embedding(bip, pat) is None
            checked += 1
    assert checked > 50


def test_cut_witness_meets_transfer_bound():
    # pattern-free extremal general graphs keep n/(2n-1) of their edges
    from bturan.solver import solve_general

    for pattern, n2 in [(path(4), 6), (star(3), 6), (path(4), 8)]:
        res = solve_general(n2, pattern)
        g = res.certificate
        cut = switch_to_large_cut(g)
        assert cut.cut_size >= cut_guarantee(g)
        bip = bipartite_subgraph_from_cut(g, cut)
        assert find_embedding(bip, pattern) is None
