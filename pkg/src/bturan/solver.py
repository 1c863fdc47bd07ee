"""Exact extremal values by branch and bound over forbidden-copy deletions.

Search starts at the complete host.  A node with a copy of the forbidden
pattern branches on deleting each edge of that one copy's image: any
pattern-free subgraph misses at least one of those edges, so the leaves
(pattern-free graphs) cover every maximal pattern-free subgraph and the
maximum over leaves is exact.  For the connected-spanning variant, any
supergraph of a connected spanning candidate is again connected and
spanning, so restricting to connected leaves loses nothing.

Two tables keep the tree small: visited labeled graphs (collapses deletion
orderings) and visited canonical classes (collapses host symmetries).
Both are caches; correctness never depends on a hit.  Eviction is FIFO.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .general import GeneralGraph, canonical_key_general
from .graphs import (
    BipartiteGraph,
    CanonicalCode,
    canonical_code,
    is_connected,
    new_graph,
    within_part_key,
)
from .embedding import (
    find_embedding_general,
    find_embedding_masks,
)
from .patterns import DEFAULT_FAMILY_CAP, Pattern, Target, TreeFamily, exbc_defined


class BudgetExhausted(RuntimeError):
    pass


@dataclass
class SolverConfig:
    variant: str = "b"  # "b" or "bc"
    memo_capacity: int = 1_500_000
    node_budget: int = 20_000_000
    thread_budget: int = 1
    enumerate_extremal: bool = False
    family_cap: int = DEFAULT_FAMILY_CAP
    use_registry_seed: bool = True

    def __post_init__(self):
        if self.variant not in ("b", "bc"):
            raise ValueError(f"variant must be 'b' or 'bc', got {self.variant!r}")
        if self.memo_capacity <= 0 or self.node_budget <= 0 or self.thread_budget <= 0:
            raise ValueError("budgets must be positive")


@dataclass
class SolveStats:
    nodes: int = 0
    memo_hits: int = 0
    wall_time: float = 0.0


@dataclass
class SolveResult:
    a: int
    b: int
    target_name: str
    variant: str
    status: str  # "exact" or "inconclusive"
    value: int
    certificate: BipartiteGraph
    all_extremal: dict[CanonicalCode, BipartiteGraph] | None
    stats: SolveStats

    @property
    def exact(self) -> bool:
        return self.status == "exact"


class _Cache:
    """Insertion-ordered set with FIFO eviction."""

    def __init__(self, capacity: int):
        self.capacity = capacity
        self.data: dict = {}

    def __contains__(self, key) -> bool:
        return key in self.data

    def add(self, key) -> None:
        if len(self.data) >= self.capacity:
            self.data.pop(next(iter(self.data)))
        self.data[key] = None


def _members(target: Target, cap: int) -> tuple[Pattern, ...]:
    if isinstance(target, TreeFamily):
        return target.members(cap=cap)
    return (target,)


def _registry_seed(a, b, target, variant):
    """Best construction-backed lower bound graph, or None.

    Imported lazily; the registry builds on patterns/constructions only."""
    try:
        from . import registry

        res = registry.lookup(target, a, b, variant)
        wit = registry.witness_graph(res)
    except Exception:
        return None
    if wit is None or (wit.a, wit.b) != (a, b):
        return None
    return wit


def solve(a: int, b: int, target: Target, cfg: SolverConfig | None = None) -> SolveResult:
    """Maximum edges of a target-free subgraph of K_{a,b} (variant "b") or
    of a spanning-connected target-free subgraph (variant "bc")."""
    cfg = cfg or SolverConfig()
    if a < 1 or b < 1:
        raise ValueError(f"host parts must be >= 1, got ({a}, {b})")
    if cfg.variant == "bc" and isinstance(target, Pattern):
        if not exbc_defined(target):
            raise ValueError(
                f"the connected-spanning value is undefined for {target.name}"
            )
    members = _members(target, cfg.family_cap)
    bc = cfg.variant == "bc"
    enum = cfg.enumerate_extremal
    t0 = time.monotonic()

    rows = [(1 << b) - 1] * a
    cols = [(1 << a) - 1] * b
    n_edges = a * b

    best = -1
    best_graph: BipartiteGraph | None = None
    extremal: dict[CanonicalCode, BipartiteGraph] = {}

    if cfg.use_registry_seed:
        seed = _registry_seed(a, b, target, cfg.variant)
        if seed is not None and seed.edge_count > best:
            best = seed.edge_count
            best_graph = seed
    if best < 0 and not bc:
        # edgeless subgraph is always pattern-free: a floor certificate so
        # even a budget-starved run reports something verifiable
        best = 0
        best_graph = BipartiteGraph(a, b, (0,) * a)

    labeled_seen = _Cache(cfg.memo_capacity)
    class_seen = _Cache(cfg.memo_capacity)
    stats = SolveStats()

    def record_leaf(edge_total: int) -> None:
        nonlocal best, best_graph
        g = BipartiteGraph(a, b, tuple(rows))
        if bc and not is_connected(g):
            return
        if edge_total > best:
            best = edge_total
            best_graph = g
            if enum:
                extremal.clear()
                extremal[canonical_code(g)] = g
        elif enum and edge_total == best:
            code = canonical_code(g)
            if code not in extremal:
                extremal[code] = g

    def first_embedding():
        for member in members:
            res = find_embedding_masks(a, b, rows, cols, member)
            if res is not None:
                return member, res
        return None

    def expand(edge_total: int) -> None:
        stats.nodes += 1
        if stats.nodes > cfg.node_budget:
            raise BudgetExhausted()
        found = first_embedding()
        if found is None:
            record_leaf(edge_total)
            return
        member, assignment = found
        image = set()
        for u, v in member.edges:
            su, iu = assignment[u]
            sv, iv = assignment[v]
            image.add((iu, iv) if su == 0 else (iv, iu))
        child_total = edge_total - 1
        for i, j in sorted(image):
            if (child_total < best) if enum else (child_total <= best):
                continue
            rows[i] ^= 1 << j
            cols[j] ^= 1 << i
            key = tuple(rows)
            if key in labeled_seen:
                stats.memo_hits += 1
            else:
                labeled_seen.add(key)
                ckey = within_part_key(a, b, key)
                if ckey in class_seen:
                    stats.memo_hits += 1
                else:
                    class_seen.add(ckey)
                    expand(child_total)
            rows[i] ^= 1 << j
            cols[j] ^= 1 << i

    status = "exact"
    try:
        expand(n_edges)
    except BudgetExhausted:
        status = "inconclusive"

    stats.wall_time = time.monotonic() - t0
    if best < 0 or best_graph is None:
        raise RuntimeError(
            f"no feasible graph found for {target.name} in K_{{{a},{b}}} "
            f"variant {cfg.variant}"
            + (" before the node budget ran out" if status == "inconclusive" else "")
        )

    _verify_certificate(a, b, best_graph, members, best, bc)
    return SolveResult(
        a=a,
        b=b,
        target_name=target.name,
        variant=cfg.variant,
        status=status,
        value=best,
        certificate=best_graph,
        all_extremal=dict(extremal) if enum else None,
        stats=stats,
    )


def _verify_certificate(a, b, g: BipartiteGraph, members, value: int, bc: bool) -> None:
    if (g.a, g.b) != (a, b) or g.edge_count != value:
        raise RuntimeError("certificate does not match the reported value")
    cols = g.columns()
    for member in members:
        if find_embedding_masks(a, b, g.rows, cols, member) is not None:
            raise RuntimeError(f"certificate contains {member.name}")
    if bc and not is_connected(g):
        raise RuntimeError("certificate is not spanning-connected")


def enumerate_extremal(
    a: int, b: int, target: Target, variant: str = "b", cfg: SolverConfig | None = None
) -> SolveResult:
    """solve() with the full extremal set collected (canonical dedup)."""
    base = cfg or SolverConfig()
    run_cfg = SolverConfig(
        variant=variant,
        memo_capacity=base.memo_capacity,
        node_budget=base.node_budget,
        thread_budget=base.thread_budget,
        enumerate_extremal=True,
        family_cap=base.family_cap,
        use_registry_seed=base.use_registry_seed,
    )
    return solve(a, b, target, run_cfg)


# ---------------------------------------------------------------------------
# Classical (one-part) hosts, desk scale only.
# ---------------------------------------------------------------------------

GENERAL_HARD_CAP = 10


@dataclass
class GeneralSolveResult:
    n: int
    target_name: str
    status: str
    value: int
    certificate: GeneralGraph
    stats: SolveStats


def solve_general(
    n: int, pattern: Pattern, cfg: SolverConfig | None = None
) -> GeneralSolveResult:
    """Maximum edges of a pattern-free simple graph on n vertices."""
    cfg = cfg or SolverConfig()
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > GENERAL_HARD_CAP:
        raise ValueError(f"general hosts capped at {GENERAL_HARD_CAP} vertices, got {n}")
    t0 = time.monotonic()
    full = (1 << n) - 1
    rows = [full ^ (1 << v) for v in range(n)]
    n_edges = n * (n - 1) // 2

    best = -1
    best_graph: GeneralGraph | None = None
    labeled_seen = _Cache(cfg.memo_capacity)
    class_seen = _Cache(cfg.memo_capacity)
    stats = SolveStats()

    def expand(edge_total: int) -> None:
        nonlocal best, best_graph
        stats.nodes += 1
        if stats.nodes > cfg.node_budget:
            raise BudgetExhausted()
        g = GeneralGraph(n, tuple(rows))
        assignment = find_embedding_general(g, pattern)
        if assignment is None:
            if edge_total > best:
                best = edge_total
                best_graph = g
            return
        image = set()
        for u, v in pattern.edges:
            x, y = assignment[u], assignment[v]
            image.add((min(x, y), max(x, y)))
        child_total = edge_total - 1
        for u, v in sorted(image):
            if child_total <= best:
                continue
            rows[u] ^= 1 << v
            rows[v] ^= 1 << u
            key = tuple(rows)
            if key in labeled_seen:
                stats.memo_hits += 1
            else:
                labeled_seen.add(key)
                ckey = canonical_key_general(GeneralGraph(n, key))
                if ckey in class_seen:
                    stats.memo_hits += 1
                else:
                    class_seen.add(ckey)
                    expand(child_total)
            rows[u] ^= 1 << v
            rows[v] ^= 1 << u

    status = "exact"
    try:
        expand(n_edges)
    except BudgetExhausted:
        status = "inconclusive"
    stats.wall_time = time.monotonic() - t0
    assert best_graph is not None
    return GeneralSolveResult(
        n=n,
        target_name=pattern.name,
        status=status,
        value=best,
        certificate=best_graph,
        stats=stats,
    )
