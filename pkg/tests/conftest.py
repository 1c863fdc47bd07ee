"""Shared strategies and independent oracles for the test suite."""

from __future__ import annotations

import itertools

from hypothesis import HealthCheck, settings
import hypothesis.strategies as st

from bturan.graphs import BipartiteGraph, new_graph

settings.register_profile(
    "workbench",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("workbench")


@st.composite
def bipartite_graphs(draw, min_a=1, max_a=5, min_b=1, max_b=5):
    a = draw(st.integers(min_a, max_a))
    b = draw(st.integers(min_b, max_b))
    if a == 0 or b == 0:
        return new_graph(a, b, [])
    edges = draw(
        st.sets(
            st.tuples(st.integers(0, a - 1), st.integers(0, b - 1)),
            max_size=a * b,
        )
    )
    return new_graph(a, b, edges)


def brute_embeds(host: BipartiteGraph, pattern) -> bool:
    """Independent containment oracle: try every injective vertex map.

    Side-respecting placement is implied by the edge checks, so this never
    consults the pattern's coloring or component plans."""
    verts = [(0, i) for i in range(host.a)] + [(1, j) for j in range(host.b)]
    if pattern.n > len(verts):
        return False
    for images in itertools.permutations(verts, pattern.n):
        ok = True
        for u, v in pattern.edges:
            su, iu = images[u]
            sv, iv = images[v]
            if su == sv:
                ok = False
                break
            i, j = (iu, iv) if su == 0 else (iv, iu)
            if not host.has_edge(i, j):
                ok = False
                break
        if ok:
            return True
    return False


def union_find_connected(g: BipartiteGraph) -> bool:
    """Connectivity oracle via union-find over the edge list."""
    total = g.a + g.b
    if total == 0:
        return True
    parent = list(range(total))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in g.edges():
        ru, rv = find(i), find(g.a + j)
        if ru != rv:
            parent[ru] = rv
    return len({find(x) for x in range(total)}) == 1


def all_subgraphs(a: int, b: int):
    """Every labeled subgraph of the complete host, as row tuples."""
    cells = [(i, j) for i in range(a) for j in range(b)]
    for picks in itertools.product((0, 1), repeat=len(cells)):
        rows = [0] * a
        for bit, (i, j) in zip(picks, cells):
            if bit:
                rows[i] |= 1 << j
        yield BipartiteGraph(a, b, tuple(rows))
