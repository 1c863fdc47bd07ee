import pytest

from bturan.constructions import (
    build_construction,
    claimed_edge_count,
    declared_target,
    expected_connected,
    parse_spec,
    spec,
)
from bturan.embedding import find_embedding
from bturan.graphs import is_connected
from bturan.patterns import double_star


def sweep_specs(limit=12):
    out = []
    for n in range(3, limit + 1):
        out += [spec("theta", n), spec("two_bicliques_2", n)]
    for n in range(4, limit + 1):
        out.append(spec("connected_D22", n))
    for n in range(1, limit + 1):
        out += [spec("matching", n), spec("two_stars", n),
                spec("spanning_double_star", n)]
    for n in range(2, limit + 1):
        for k in range(2, min(n, 4) + 1):
            out.append(spec("circulant", n, k))
    for n in range(1, limit + 1):
        for d in (1, 2, 3):
            out.append(spec("spider_blocks", n, d))
        for L in (2, 3, 4):
            out.append(spec("blocks_union", n, L))
        for v in (3, 4, 5, 6):
            out.append(spec("halved_blocks", n, v))
    for s in (1, 2, 3):
        for a in range(s + 1, limit + 1, 3):
            for b in range(a, limit + 1, 3):
                out.append(spec("disjoint_double_biclique", s, a, b))
    for s in (2, 3):
        for a in range(s + 2, limit + 1, 3):
            for b in range(a, limit + 1, 3):
                out.append(spec("bridged_double_biclique", s, a, b))
    for d in (2, 3):
        for a in range(d + 1, 8):
            for b in range(a, limit + 1, 2):
                out.append(spec("star_plus", a, b, d))
    return out


@pytest.mark.parametrize("cs", sweep_specs(), ids=lambda c: c.name)
def test_edge_count_identity(cs):
    assert build_construction(cs).edge_count == claimed_edge_count(cs)


@pytest.mark.parametrize("cs", sweep_specs(), ids=lambda c: c.name)
def test_declared_freeness(cs):
    target = declared_target(cs)
    if target is None:
        return
    assert find_embedding(build_construction(cs), target) is None


@pytest.mark.parametrize("cs", sweep_specs(), ids=lambda c: c.name)
def test_connectivity_matches_kind(cs):
    want = expected_connected(cs)
    if want is None:
        return
    assert is_connected(build_construction(cs)) == want


def test_theta_example():
    g = build_construction(spec("theta", 5))
    assert (g.a, g.b, g.edge_count) == (5, 5, 12)
    assert find_embedding(g, double_star(2, 2)) is None


def test_two_bicliques_example():
    g = build_construction(spec("two_bicliques_2", 6))
    assert g.edge_count == 16 == 4 * 6 - 8
    assert find_embedding(g, double_star(2, 2)) is None


def test_circulant_example():
    g = build_construction(spec("circulant", 5, 3))
    assert g.edge_count == 15
    assert set(g.left_degrees()) == {3} and set(g.right_degrees()) == {3}
    assert is_connected(g)


def test_disjoint_double_biclique_example():
    cs = spec("disjoint_double_biclique", 2, 6, 6)
    assert claimed_edge_count(cs) == 16
    # no connected pattern with smaller part above s embeds
    assert find_embedding(build_construction(cs), double_star(2, 2)) is None


def test_connected_d22_example():
    cs = spec("connected_D22", 6)
    g = build_construction(cs)
    assert g.edge_count == 15 == 4 * 6 - 9
    assert is_connected(g)
    assert find_embedding(g, double_star(2, 2)) is None


def test_matching_count():
    assert claimed_edge_count(spec("matching", 9)) == 9


def test_spanning_double_star_shape():
    g = build_construction(spec("spanning_double_star", 7))
    assert g.edge_count == 13
    assert is_connected(g)
    degs = sorted(g.left_degrees() + g.right_degrees(), reverse=True)
    assert degs[:2] == [7, 7] and set(degs[2:]) == {1}


def test_parameter_rejections():
    with pytest.raises(ValueError, match="k <= n"):
        build_construction(spec("circulant", 3, 5))
    with pytest.raises(ValueError, match="n >= 3"):
        build_construction(spec("theta", 2))
    with pytest.raises(ValueError, match="n >= 4"):
        build_construction(spec("connected_D22", 3))
    with pytest.raises(ValueError, match="min"):
        build_construction(spec("disjoint_double_biclique", 4, 3, 9))
    with pytest.raises(ValueError, match="a >= d"):
        build_construction(spec("star_plus", 2, 5, 2))
    with pytest.raises(ValueError):
        spec("theta", 1, 2)
    with pytest.raises(ValueError):
        spec("unknown_kind", 1)


def test_parse_spec():
    assert parse_spec("theta(7)") == spec("theta", 7)
    assert parse_spec("circulant(n=6,k=3)") == spec("circulant", 6, 3)
    with pytest.raises(ValueError):
        parse_spec("theta[7]")
