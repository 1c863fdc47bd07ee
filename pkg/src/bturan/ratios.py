"""Worst-case-ratio constructions and finite-size ratio witnesses.

The three connected-host constructions trade off against each other via
two shape parameters c (how lopsided a tree's bipartition may be) and p
(how long a path it may contain), both relative to the tree scale k.
Optimizing the tradeoff leads to the larger root of 14x^2 - 14x + 3 and
the numeric lower bounds 0.207 (connected-host ratio) and 0.1035
(connected-to-unrestricted ratio).  Real-valued block sizes round by
floor; at finite n the slack is absorbed by reporting the exactly
constructed edge counts, never a formula.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import BipartiteGraph, new_graph
from .constructions import build_construction, spec
from .patterns import Pattern


def x0() -> float:
    """Larger root of 14x^2 - 14x + 3 = 0, i.e. (7 + sqrt 7) / 14."""
    return (7.0 + math.sqrt(7.0)) / 14.0


def x0_bisect(tol: float = 1e-13) -> float:
    """The same root by bisection on [0.5, 1]; cross-check for the closed form."""

    def f(x: float) -> float:
        return 14.0 * x * x - 14.0 * x + 3.0

    lo, hi = 0.5, 1.0
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        if f(mid) <= 0.0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


def gamma_bc_lower() -> float:
    """(2 - 2 x0) / 3, the connected-host worst-case ratio lower bound."""
    return (2.0 - 2.0 * x0()) / 3.0


def gamma_cross_lower() -> float:
    """Half of gamma_bc_lower: connected over unrestricted values."""
    return gamma_bc_lower() / 2.0


@dataclass(frozen=True)
class RatioParams:
    c: float
    p: float
    k: int
    n: int

    def __post_init__(self):
        if not (2.0 / 3.0 <= self.c < 1.0):
            raise ValueError(f"need 2/3 <= c < 1, got c={self.c}")
        if not (0.0 < self.p <= self.c):
            raise ValueError(f"need 0 < p <= c, got p={self.p}")
        if self.k < 1 or self.n < 1:
            raise ValueError(f"need positive k and n, got k={self.k}, n={self.n}")


@dataclass(frozen=True)
class RatioReport:
    tree: str
    n: int
    variant: str
    source: str
    edges: int
    ratio: float


def _chain_path(edges: list, lefts: list[int], rights: list[int]) -> None:
    """Zigzag a_0 b_0 a_1 b_1 ... through equal-length index lists."""
    for t in range(len(lefts)):
        edges.append((lefts[t], rights[t]))
        if t + 1 < len(lefts):
            edges.append((lefts[t + 1], rights[t]))


def _build_kind1(params: RatioParams) -> BipartiteGraph:
    """Alternating complete blocks and path segments, linked into a chain.

    Block width m = floor((2c-1)k), path half-length w = floor((1-c)k).
    The highest-indexed right vertex of each block links to the first path
    vertex (left side); the last path vertex (right side) links to the
    lowest-indexed left vertex of the next block.  Leftover vertices
    continue the final path so the graph spans K_{n,n}.
    """
    m = math.floor((2 * params.c - 1) * params.k)
    w = math.floor((1 - params.c) * params.k)
    if m < 1:
        raise ValueError("biclique block is empty; increase c or k")
    if w < 1:
        raise ValueError("path block is empty; decrease c or increase k")
    period = m + w
    n = params.n
    t = n // period
    if t < 1:
        raise ValueError(f"host too small for one block period ({period})")
    edges: list[tuple[int, int]] = []
    for i in range(t):
        base = i * period
        edges += [(base + x, base + y) for x in range(m) for y in range(m)]
        lefts = [base + m + j for j in range(w)]
        rights = [base + m + j for j in range(w)]
        _chain_path(edges, lefts, rights)
        edges.append((base + m, base + m - 1))  # block's top right -> path start
        if i + 1 < t:
            edges.append(((i + 1) * period, base + m + w - 1))
    leftover = list(range(t * period, n))
    if leftover:
        edges.append((leftover[0], t * period - 1))
        _chain_path(edges, leftover, leftover)
    return new_graph(n, n, edges)


def _build_kind2(params: RatioParams) -> BipartiteGraph:
    """One universal left vertex and floor(pk/2) - 1 universal right
    vertices, no other edges; every path stops within 2*floor(pk/2)
    vertices."""
    s = math.floor(params.p * params.k / 2)
    if s < 2:
        raise ValueError("universal right block is empty; increase p*k")
    n = params.n
    edges = [(0, j) for j in range(n)]
    edges += [(i, j) for j in range(s - 1) for i in range(1, n)]
    return new_graph(n, n, edges)


def _build_kind3(params: RatioParams) -> BipartiteGraph:
    """A path on l vertices (l = smallest even number above pk) whose two
    endpoints are completed against two disjoint block pairs.

    Parts split as A1/A2/A3 and B1/B2/B3 with |A1| = |B1| = l/2 and
    |A2| = |B2| = alpha = floor((1 - c - p/2) k) - 2.  G1 is the path on
    A1 u B1 from u in A to v in B; G2 joins A2 completely to B3 + {v};
    G3 joins A3 + {u} completely to B2.
    """
    pk = params.p * params.k
    l = 2 * (math.floor(pk / 2) + 1)
    alpha = math.floor((1 - params.c - params.p / 2) * params.k) - 2
    if alpha < 1:
        raise ValueError("A2 block is empty; increase k or rebalance c, p")
    half = l // 2
    n = params.n
    if half + alpha + 1 > n:
        raise ValueError(f"host too small for blocks (need n >= {half + alpha + 1})")
    edges: list[tuple[int, int]] = []
    a1 = list(range(half))
    b1 = list(range(half))
    _chain_path(edges, a1, b1)  # u = left 0, v = right half-1
    v = half - 1
    a2 = list(range(half, half + alpha))
    b2 = list(range(half, half + alpha))
    a3 = list(range(half + alpha, n))
    b3 = list(range(half + alpha, n))
    edges += [(x, y) for x in a2 for y in [*b3, v]]
    edges += [(x, y) for x in [*a3, 0] for y in b2]
    return new_graph(n, n, edges)


def build_ratio_construction(kind: int, params: RatioParams) -> BipartiteGraph:
    if kind == 1:
        return _build_kind1(params)
    if kind == 2:
        return _build_kind2(params)
    if kind == 3:
        return _build_kind3(params)
    raise ValueError(f"kind must be 1, 2 or 3, got {kind}")


def kind2_longest_path_bound(params: RatioParams) -> int:
    """Vertex count of the longest path: 2 * floor(pk/2)."""
    return 2 * math.floor(params.p * params.k / 2)


def kind3_block_sizes(params: RatioParams) -> tuple[int, int]:
    """(|A1|, |A2|) = (l/2, alpha) after rounding."""
    l = 2 * (math.floor(params.p * params.k / 2) + 1)
    alpha = math.floor((1 - params.c - params.p / 2) * params.k) - 2
    return l // 2, alpha


def gamma_b_witness(tree: Pattern, n: int) -> BipartiteGraph:
    """A tree-free subgraph of K_{n,n} realizing the 2/3-ish edge fraction.

    Trees with nearly balanced parts (l < 2k) use the two-biclique
    construction on the smaller part; lopsided trees (l >= 2k) use complete
    blocks one short of the larger part."""
    if not tree.is_tree:
        raise ValueError("ratio witnesses are defined for trees")
    if n < tree.n:
        raise ValueError(f"need n >= {tree.n}, got {n}")
    k, l = tree.p, tree.q
    if l < 2 * k:
        return build_construction(spec("disjoint_double_biclique", k - 1, n, n))
    return build_construction(spec("blocks_union", n, l))


def gamma_b_witness_floor(tree: Pattern, n: int) -> float:
    """Guaranteed edge fraction floor for the witness, per the tradeoff."""
    k, l = tree.p, tree.q
    size = tree.n
    if l < 2 * k:
        return (2.0 / 3.0) * (size - 2) * n - size * size
    return (2.0 / 3.0 - 1.0 / l) * (size - 2) * n - l * l


def finite_ratio(
    tree: Pattern, n: int, variant: str = "b", source: str = "solver"
) -> RatioReport:
    """Edge count over ((|T| - 2) n), from an exact value or a witness."""
    if not tree.is_tree or tree.n < 3:
        raise ValueError("ratio reports need a tree on at least 3 vertices")
    denom = (tree.n - 2) * n
    if source == "solver":
        from .solver import SolverConfig, solve

        res = solve(n, n, tree, SolverConfig(variant=variant))
        if not res.exact:
            raise RuntimeError("solver budget exhausted; no exact ratio")
        edges = res.value
    elif source == "registry":
        from .registry import lookup

        res = lookup(tree, n, n, variant)
        if not res.is_exact:
            raise ValueError(
                f"registry has no exact value for {tree.name} at n={n} ({res.tag})"
            )
        edges = res.lo
    elif source == "witness":
        if variant != "b":
            raise ValueError("witness source covers the unrestricted variant only")
        edges = gamma_b_witness(tree, n).edge_count
    else:
        raise ValueError(f"source must be solver, registry or witness, got {source!r}")
    return RatioReport(tree.name, n, variant, source, edges, edges / denom)
