"""Balanced max-cut local search by endpoint swaps.

Starting from any balanced bipartition, repeatedly swap a pair u in A,
v in B whose exchange enlarges the cut; balance is preserved because
exactly one vertex crosses each way.  Swaps must range over all A x B
pairs, not only cut edges: summing the no-improving-swap condition over
every pair yields cut >= n/(2n-1) * e(G), while a cut-edge-only optimum
can strand edges inside a side (a single off-cut edge already beats it).
The resulting optimum is in particular stable under cut-edge endpoint
swaps, and turns a pattern-free general graph on 2n vertices into a
pattern-free balanced bipartite witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .general import GeneralGraph
from .graphs import BipartiteGraph, new_graph


@dataclass(frozen=True)
class BalancedCut:
    sides: tuple[int, ...]  # 0 = side A, 1 = side B; equal counts
    cut_size: int


def cut_guarantee(g: GeneralGraph) -> int:
    """ceil(n * e / (2n - 1)) for a 2n-vertex graph."""
    n = g.n // 2
    if n == 0:
        return 0
    return -(-n * g.edge_count // (2 * n - 1))


def _cut_size(g: GeneralGraph, sides) -> int:
    b_mask = 0
    for v, s in enumerate(sides):
        if s:
            b_mask |= 1 << v
    return sum((g.rows[v] & b_mask).bit_count() for v in range(g.n) if not sides[v])


def switch_to_large_cut(
    g: GeneralGraph, seed: tuple[int, ...] | list[int] | None = None
) -> BalancedCut:
    """Local optimum under single cut-edge endpoint swaps.

    Cut edges are scanned in lexicographic order and the scan restarts
    after every accepted swap, so the trajectory is deterministic.  The
    default seed puts vertices 0..n-1 on side A.
    """
    if g.n % 2:
        raise ValueError(f"balanced cut needs an even vertex count, got {g.n}")
    n = g.n // 2
    if seed is None:
        sides = [0] * n + [1] * n
    else:
        sides = list(seed)
        if len(sides) != g.n or any(s not in (0, 1) for s in sides):
            raise ValueError("seed must assign 0/1 to every vertex")
        if sum(sides) != n:
            raise ValueError("seed partition is not balanced")

    a_mask = b_mask = 0
    for v, s in enumerate(sides):
        if s:
            b_mask |= 1 << v
        else:
            a_mask |= 1 << v

    improved = True
    while improved:
        improved = False
        # pairs scanned lexicographically by labels; restart after a swap
        for u in range(g.n):
            if sides[u]:
                continue
            for v in range(g.n):
                if not sides[v]:
                    continue
                # swapping u <-> v changes the cut by
                # same(u) + same(v) - cross(u) - cross(v) + 2[uv is an edge]
                gain = (
                    (g.rows[u] & a_mask).bit_count()
                    + (g.rows[v] & b_mask).bit_count()
                    - (g.rows[u] & b_mask).bit_count()
                    - (g.rows[v] & a_mask).bit_count()
                    + 2 * (g.rows[u] >> v & 1)
                )
                if gain > 0:
                    sides[u], sides[v] = 1, 0
                    a_mask ^= (1 << u) | (1 << v)
                    b_mask ^= (1 << u) | (1 << v)
                    improved = True
                    break
            if improved:
                break

    return BalancedCut(tuple(sides), _cut_size(g, sides))


def is_locally_optimal(g: GeneralGraph, cut: BalancedCut) -> bool:
    """No single cut-edge endpoint swap increases the cut."""
    sides = list(cut.sides)
    base = _cut_size(g, sides)
    for u in range(g.n):
        if sides[u]:
            continue
        for v in range(g.n):
            if not sides[v] or not g.has_edge(u, v):
                continue
            sides[u], sides[v] = 1, 0
            bigger = _cut_size(g, sides) > base
            sides[u], sides[v] = 0, 1
            if bigger:
                return False
    return True


def bipartite_subgraph_from_cut(g: GeneralGraph, cut: BalancedCut) -> BipartiteGraph:
    """The cut edges as a bipartite graph on parts (n, n).

    Side-A vertices map to left indices in increasing label order, side-B
    vertices to right indices likewise."""
    if len(cut.sides) != g.n:
        raise ValueError("cut does not match the graph")
    left = [v for v in range(g.n) if cut.sides[v] == 0]
    right = [v for v in range(g.n) if cut.sides[v] == 1]
    lidx = {v: i for i, v in enumerate(left)}
    ridx = {v: i for i, v in enumerate(right)}
    edges = []
    for u, v in g.edges():
        if cut.sides[u] != cut.sides[v]:
            x, y = (u, v) if cut.sides[u] == 0 else (v, u)
            edges.append((lidx[x], ridx[y]))
    return new_graph(len(left), len(right), edges)


def max_balanced_cut_brute(g: GeneralGraph) -> int:
    """Exhaustive maximum over all balanced bipartitions (tiny graphs)."""
    if g.n % 2:
        raise ValueError(f"balanced cut needs an even vertex count, got {g.n}")
    n = g.n // 2
    import itertools

    best = 0
    rest = range(1, g.n)
    for combo in itertools.combinations(rest, n - 1):
        a_set = {0, *combo}
        sides = [0 if v in a_set else 1 for v in range(g.n)]
        best = max(best, _cut_size(g, sides))
    return best
