import networkx as nx
import pytest

from bturan.patterns import (
    CapExceeded,
    caterpillar,
    double_star,
    enumerate_trees_by_parts,
    exbc_defined,
    fits_host,
    free_trees,
    from_edges,
    parse_target,
    path,
    shape_caterpillar,
    shape_double_star,
    shape_path,
    shape_spider,
    shape_star,
    spider,
    star,
    TreeFamily,
    union_patterns,
)


def two_coloring_parts(edges, n):
    """Oracle: BFS 2-coloring of each component, smaller class first."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    color = [-1] * n
    p = q = 0
    for s in range(n):
        if color[s] != -1:
            continue
        color[s] = 0
        comp = {0: [s], 1: []}
        queue = [s]
        while queue:
            v = queue.pop(0)
            for w in adj[v]:
                if color[w] == -1:
                    color[w] = color[v] ^ 1
                    comp[color[w]].append(w)
                    queue.append(w)
        sizes = sorted((len(comp[0]), len(comp[1])))
        p += sizes[0]
        q += sizes[1]
    return min(p, q), max(p, q)


def test_double_star_22_parameters():
    d = double_star(2, 2)
    assert d.n == 6
    assert d.part_sizes == two_coloring_parts(d.edges, d.n) == (3, 3)
    assert d.max_degree == 3


def test_spider_311_parameters():
    s = spider(3, 1, 1)
    assert s.n == 6
    assert s.part_sizes == two_coloring_parts(s.edges, s.n) == (2, 4)
    assert s.max_degree == 3


def test_star_parameters():
    assert star(4).part_sizes == (1, 4)
    assert star(4).max_degree == 4


def test_spider_needs_three_legs():
    with pytest.raises(ValueError):
        spider(2, 1)


def test_from_edges_rejects_cycles_and_duplicates():
    with pytest.raises(ValueError, match="cycle"):
        from_edges([(0, 1), (1, 2), (2, 0)])
    with pytest.raises(ValueError, match="duplicate"):
        from_edges([(0, 1), (1, 0)])


def test_forest_identity():
    for pat in [path(5), spider(2, 2, 1), union_patterns(path(3), path(2)),
                double_star(3, 1), caterpillar(1, 1, 2)]:
        assert pat.edge_count == pat.n - len(pat.components)


def test_spider_leg_order_is_irrelevant():
    a = spider(3, 1, 2)
    b = spider(1, 2, 3)
    c = spider(2, 3, 1)
    assert a.key == b.key == c.key


def test_spider_of_unit_legs_is_a_star():
    assert spider(1, 1, 1, 1).key == star(4).key


def test_exbc_defined_excluded_list():
    assert not exbc_defined(path(2))
    assert not exbc_defined(union_patterns(path(2), path(2)))
    assert not exbc_defined(path(3))
    assert not exbc_defined(union_patterns(path(3), path(2)))
    assert not exbc_defined(path(4))
    assert exbc_defined(star(3))
    assert exbc_defined(path(5))
    assert exbc_defined(union_patterns(path(3), path(3)))


def test_enumerate_family_examples():
    assert {t.name for t in enumerate_trees_by_parts(1, 4)} == {"K1,4"}
    t23 = enumerate_trees_by_parts(2, 3)
    assert len(t23) == 2
    assert {t.name for t in t23} == {"P5", "S2,1,1"}
    t33 = enumerate_trees_by_parts(3, 3)
    assert len(t33) == 3
    assert {t.name for t in t33} == {"P6", "S2,2,1", "D2,2"}


def test_enumerate_family_cap():
    with pytest.raises(CapExceeded):
        enumerate_trees_by_parts(6, 7)
    assert len(enumerate_trees_by_parts(6, 7, cap=13)) > 0


def test_free_tree_counts_match_networkx():
    for m in range(2, 10):
        ours = len(free_trees(m))
        theirs = sum(1 for _ in nx.nonisomorphic_trees(m))
        assert ours == theirs


def test_family_counts_sum_to_free_tree_counts():
    expected = {2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47}
    for m, count in expected.items():
        total = sum(
            len(enumerate_trees_by_parts(k, m - k))
            for k in range(1, m // 2 + 1)
        )
        assert total == count


def test_family_members_are_nonisomorphic_to_networkx_partition():
    # cross-check one family against a networkx-based filter
    def nx_parts(t):
        coloring = nx.bipartite.color(t)
        ones = sum(coloring.values())
        return tuple(sorted((len(t) - ones, ones)))

    for (k, l) in [(2, 4), (3, 4), (2, 5)]:
        theirs = sum(1 for t in nx.nonisomorphic_trees(k + l) if nx_parts(t) == (k, l))
        assert len(enumerate_trees_by_parts(k, l)) == theirs


def test_fits_host():
    assert not fits_host(spider(3, 1, 1), 3, 3)
    assert fits_host(double_star(2, 2), 3, 3)
    assert not fits_host(path(5), 2, 2)
    assert fits_host(star(4), 9, 4)  # normalization swaps the host


def test_shapes():
    assert shape_path(path(6)) == 6
    assert shape_star(star(5)) == 5
    assert shape_star(path(3)) == 2  # P3 is the 2-leaf star
    assert shape_spider(spider(3, 1, 1)) == (3, 1, 1)
    assert shape_spider(path(5)) is None
    assert shape_double_star(double_star(2, 3)) == (3, 2)
    assert shape_double_star(path(4)) == (1, 1)
    assert shape_caterpillar(caterpillar(1, 0, 2)) == (2, 0, 1)
    assert shape_caterpillar(double_star(2, 2)) == (2, 1, 0)
    assert shape_caterpillar(star(4)) == (0, 2, 0)  # stars degenerate to spines
    assert shape_caterpillar(spider(2, 2, 2)) is None


def test_parse_target_literals():
    assert parse_target("P5").name == "P5"
    assert parse_target("K2").name == "P2"
    assert parse_target("K1,4").name == "K1,4"
    assert parse_target("S2,3*1").name == "S2,1,1,1"
    assert parse_target("S3,1,1").key == spider(3, 1, 1).key
    assert parse_target("D2,2").key == double_star(2, 2).key
    assert parse_target("Prst:1,1,2").key == caterpillar(1, 1, 2).key
    fam = parse_target("T3,3")
    assert isinstance(fam, TreeFamily) and (fam.k, fam.l) == (3, 3)
    assert parse_target("U(P3,K2)").key == union_patterns(path(3), path(2)).key
    assert parse_target("E:0-1,1-2").key == path(3).key


@pytest.mark.parametrize("bad", ["", "P1", "Q5", "K3,3", "S1", "S2", "T3", "D2", "Prst:1,2", "E:0-0"])
def test_parse_target_rejects(bad):
    with pytest.raises(ValueError):
        parse_target(bad)
