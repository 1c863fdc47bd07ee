import pytest
from hypothesis import given
import hypothesis.strategies as st

from bturan.embedding import (
    contains,
    find_embedding,
    find_embedding_general,
    is_family_free,
    verify_embedding,
)
from bturan.general import new_general_graph
from bturan.graphs import new_graph
from bturan.patterns import (
    TreeFamily,
    double_star,
    parse_target,
    path,
    spider,
    star,
    union_patterns,
)
from conftest import bipartite_graphs, brute_embeds

SMALL_PATTERNS = [
    path(2), path(3), path(4), path(5), path(6),
    star(3), star(4), star(5),
    spider(2, 1, 1), spider(3, 1, 1), spider(2, 2, 1),
    double_star(2, 2), double_star(2, 1),
    union_patterns(path(2), path(2)),
    union_patterns(path(3), path(2)),
    union_patterns(path(3), path(3)),
]


def k_ab(a, b):
    return new_graph(a, b, [(i, j) for i in range(a) for j in range(b)])


def test_extremal_two_bicliques_avoid_double_star():
    host = new_graph(
        4, 8,
        [(i, j) for i in range(2) for j in range(4)]
        + [(i, j) for i in range(2, 4) for j in range(4, 8)],
    )
    assert find_embedding(host, double_star(2, 2)) is None


def test_c6_avoids_spider_221():
    c6 = new_graph(3, 3, [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 0)])
    assert find_embedding(c6, spider(2, 2, 1)) is None


def test_too_few_vertices():
    assert find_embedding(k_ab(1, 1), path(3)) is None


def test_witness_is_verified():
    host = k_ab(3, 3)
    emb = find_embedding(host, path(6))
    assert emb is not None
    assert verify_embedding(host, path(6), emb)


def test_forest_components_flip_independently():
    # two 3-vertex paths need their centers on opposite sides of a (3,3) host
    host = k_ab(3, 3)
    pattern = union_patterns(path(3), path(3))
    emb = find_embedding(host, pattern)
    assert emb is not None
    assert verify_embedding(host, pattern, emb)


@given(bipartite_graphs(max_a=3, max_b=3), st.sampled_from(SMALL_PATTERNS))
def test_oracle_equivalence_small(host, pattern):
    ours = find_embedding(host, pattern)
    truth = brute_embeds(host, pattern)
    assert (ours is not None) == truth
    if ours is not None:
        assert verify_embedding(host, pattern, ours)


@given(bipartite_graphs(max_a=4, max_b=4), st.sampled_from(SMALL_PATTERNS),
       st.randoms(use_true_random=False))
def test_monotone_under_edge_addition(host, pattern, rng):
    if find_embedding(host, pattern) is None:
        return
    missing = [
        (i, j)
        for i in range(host.a)
        for j in range(host.b)
        if not host.has_edge(i, j)
    ]
    extra = rng.sample(missing, min(2, len(missing)))
    bigger = new_graph(host.a, host.b, host.edges() + extra)
    assert find_embedding(bigger, pattern) is not None


def test_quick_rejections():
    # part sizes cannot fit
    assert find_embedding(k_ab(3, 3), spider(3, 1, 1)) is None
    # more pattern edges than host edges
    host = new_graph(3, 3, [(0, 0), (1, 1)])
    assert find_embedding(host, path(5)) is None


def test_family_freeness():
    t33 = TreeFamily(3, 3)
    assert is_family_free(k_ab(2, 10), t33)
    assert not is_family_free(k_ab(3, 3), t33)  # spanning path exists
    assert is_family_free(new_graph(3, 3, []), t33)
    assert contains(k_ab(3, 3), parse_target("T3,3"))


def test_general_host_embedding():
    tri_plus = new_general_graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    assert find_embedding_general(tri_plus, path(4)) is not None
    assert find_embedding_general(tri_plus, star(3)) is not None
    assert find_embedding_general(tri_plus, star(4)) is None
    assert find_embedding_general(tri_plus, path(5)) is None  # only 4 vertices
