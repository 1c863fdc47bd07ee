"""Pattern containment in bipartite (and small general) hosts.

Trees embed by backtracking along the pattern's precomputed BFS order:
the candidate set for a child is a single neighborhood of its parent's
image minus the vertices already used, so no general subgraph-isomorphism
machinery is needed.  Vertices only map onto host vertices of at least
their pattern degree.  Components are placed largest first and may pick
their orientation (which color class goes left) independently, sharing one
used-vertex set for disjointness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .general import GeneralGraph
from .graphs import BipartiteGraph
from .patterns import (
    DEFAULT_FAMILY_CAP,
    Pattern,
    Target,
    TreeFamily,
    fits_host,
)


@dataclass(frozen=True)
class Embedding:
    """Map pattern vertex -> (side, host index); side 0 = left."""

    assignment: tuple[tuple[int, int], ...]

    def image_edges(self, pattern: Pattern) -> list[tuple[int, int]]:
        """Host edges (left, right) hit by the pattern's edges."""
        out = []
        for u, v in pattern.edges:
            su, iu = self.assignment[u]
            sv, iv = self.assignment[v]
            out.append((iu, iv) if su == 0 else (iv, iu))
        return sorted(out)


def _degree_masks(degs, max_need: int) -> list[int]:
    """masks[d] = bitmask of vertices with degree >= d, for d <= max_need."""
    masks = [0] * (max_need + 1)
    full = 0
    for i, d in enumerate(degs):
        full |= 1 << i
        for need in range(1, min(d, max_need) + 1):
            masks[need] |= 1 << i
    masks[0] = full
    return masks


def find_embedding_masks(
    a: int,
    b: int,
    rows: tuple[int, ...] | list[int],
    cols: tuple[int, ...] | list[int],
    pattern: Pattern,
) -> list[tuple[int, int]] | None:
    """Core search on raw adjacency masks; returns the assignment list."""
    n_edges = sum(r.bit_count() for r in rows)
    if pattern.edge_count > n_edges or pattern.n > a + b:
        return None
    if pattern.is_tree and not fits_host(pattern, a, b):
        return None
    max_deg = pattern.max_degree
    ldeg = [r.bit_count() for r in rows]
    rdeg = [c.bit_count() for c in cols]
    lmask = _degree_masks(ldeg, max_deg)
    rmask = _degree_masks(rdeg, max_deg)
    plans = pattern.plans
    colors = pattern.colors
    degs = pattern.degrees
    assign: dict[int, tuple[int, int]] = {}
    used = [0, 0]  # left mask, right mask

    def place(ci: int, pos: int, flip: int) -> bool:
        if pos == len(plans[ci]):
            return next_component(ci + 1)
        v, parent = plans[ci][pos]
        side = colors[v] ^ flip
        need = degs[v]
        if parent is None:
            cand = (lmask[need] if side == 0 else rmask[need]) & ~used[side]
        else:
            ps, pi = assign[parent]
            nbrs = rows[pi] if ps == 0 else cols[pi]
            cand = nbrs & (lmask[need] if side == 0 else rmask[need]) & ~used[side]
        while cand:
            low = cand & -cand
            idx = low.bit_length() - 1
            cand ^= low
            assign[v] = (side, idx)
            used[side] |= low
            if place(ci, pos + 1, flip):
                return True
            used[side] ^= low
            del assign[v]
        return False

    def next_component(ci: int) -> bool:
        if ci == len(plans):
            return True
        if place(ci, 0, 0):
            return True
        return place(ci, 0, 1)

    if next_component(0):
        out: list[tuple[int, int]] = [(-1, -1)] * pattern.n
        for v, loc in assign.items():
            out[v] = loc
        return out
    return None


def find_embedding(host: BipartiteGraph, pattern: Pattern) -> Embedding | None:
    """Witness embedding of the pattern in the host, or None."""
    res = find_embedding_masks(
        host.a, host.b, host.rows, host.columns(), pattern
    )
    if res is None:
        return None
    return Embedding(tuple(res))


def verify_embedding(host: BipartiteGraph, pattern: Pattern, emb: Embedding) -> bool:
    """Re-check every invariant of a claimed embedding."""
    if len(emb.assignment) != pattern.n:
        return False
    if len(set(emb.assignment)) != pattern.n:
        return False
    for side, idx in emb.assignment:
        if side not in (0, 1):
            return False
        if idx >= (host.a if side == 0 else host.b) or idx < 0:
            return False
    for u, v in pattern.edges:
        su, iu = emb.assignment[u]
        sv, iv = emb.assignment[v]
        if su == sv:
            return False
        i, j = (iu, iv) if su == 0 else (iv, iu)
        if not host.has_edge(i, j):
            return False
    return True


def contains(host: BipartiteGraph, target: Target, cap: int = DEFAULT_FAMILY_CAP) -> bool:
    """True iff some member of the target embeds in the host."""
    if isinstance(target, TreeFamily):
        return any(
            find_embedding(host, member) is not None
            for member in target.members(cap=cap)
        )
    return find_embedding(host, target) is not None


def is_family_free(host: BipartiteGraph, target: Target, cap: int = DEFAULT_FAMILY_CAP) -> bool:
    """True iff no member of the target embeds in the host."""
    return not contains(host, target, cap=cap)


def find_embedding_general(host: GeneralGraph, pattern: Pattern) -> list[int] | None:
    """Embed a forest in a general host (no sides); assignment per vertex."""
    if pattern.edge_count > host.edge_count or pattern.n > host.n:
        return None
    rows = host.rows
    degs_h = host.degrees()
    masks = _degree_masks(degs_h, pattern.max_degree)
    plans = pattern.plans
    degs = pattern.degrees
    assign: dict[int, int] = {}
    used = 0

    def place(ci: int, pos: int) -> bool:
        nonlocal used
        if ci == len(plans):
            return True
        if pos == len(plans[ci]):
            return place(ci + 1, 0)
        v, parent = plans[ci][pos]
        need = degs[v]
        if parent is None:
            cand = masks[need] & ~used
        else:
            cand = rows[assign[parent]] & masks[need] & ~used
        while cand:
            low = cand & -cand
            idx = low.bit_length() - 1
            cand ^= low
            assign[v] = idx
            used |= low
            if place(ci, pos + 1):
                return True
            used ^= low
            del assign[v]
        return False

    if place(0, 0):
        out = [-1] * pattern.n
        for v, idx in assign.items():
            out[v] = idx
        return out
    return None
