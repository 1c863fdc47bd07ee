"""Small simple graphs on one vertex set, used by the classical-host solver
and the balanced-cut machinery.

Representation mirrors the bipartite side: one neighbor bitmask per vertex.
Canonical codes here must respect that rows and columns permute together,
so the search minimizes the placement-order serialization (each newly
placed vertex contributes its adjacency bits to the already-placed ones).
"""

from __future__ import annotations

from dataclasses import dataclass


class GgfParseError(ValueError):
    """Malformed general-graph text; carries the 1-based offending line."""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


@dataclass(frozen=True)
class GeneralGraph:
    n: int
    rows: tuple[int, ...]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            r = self.rows[u] >> (u + 1)
            v = u + 1
            while r:
                if r & 1:
                    out.append((u, v))
                r >>= 1
                v += 1
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)


def new_general_graph(n: int, edges) -> GeneralGraph:
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
        if u == v:
            raise ValueError(f"loop ({u}, {v}) not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return GeneralGraph(n, tuple(rows))


def canonical_key_general(g: GeneralGraph) -> tuple[int, ...]:
    """Serialization minimal over all vertex orderings.

    Level t places one vertex and records its adjacency to the t already
    placed vertices as a t-bit word (earlier placements = higher bits); the
    key is the word sequence.  Vertices with identical neighbor masks are
    interchangeable, and a branch dies as soon as its word exceeds the
    incumbent's word at the same level.
    """
    n = g.n
    if n == 0:
        return (0,)
    rows = g.rows
    best: list[list[int] | None] = [None]

    def rec(order: list[int], placed_mask: int, words: list[int]) -> None:
        depth = len(order)
        if depth == n:
            if best[0] is None or words < best[0]:
                best[0] = list(words)
            return
        seen = set()
        cands = []
        for v in range(n):
            if placed_mask >> v & 1:
                continue
            rv = rows[v]
            if rv in seen:
                continue
            seen.add(rv)
            w = 0
            for t, u in enumerate(order):
                w |= (rv >> u & 1) << (depth - 1 - t)
            cands.append((w, v))
        cands.sort()
        for w, v in cands:
            words.append(w)
            prefix_cmp = 0
            if best[0] is not None:
                bw = best[0]
                for t in range(len(words)):
                    if words[t] != bw[t]:
                        prefix_cmp = -1 if words[t] < bw[t] else 1
                        break
            if prefix_cmp <= 0:
                rec(order + [v], placed_mask | (1 << v), words)
            words.pop()

    rec([], 0, [])
    assert best[0] is not None
    return (n, *best[0])


def serialize_general(g: GeneralGraph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_general(text: str) -> GeneralGraph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise GgfParseError(1, "empty input")
    if not lines[0].isdigit():
        raise GgfParseError(1, f"expected vertex count, got {lines[0]!r}")
    n = int(lines[0])
    edges = []
    seen = set()
    for k, line in enumerate(lines[1:], start=2):
        parts = line.split(" ")
        if len(parts) != 2 or not parts[0].isdigit() or not parts[1].isdigit():
            raise GgfParseError(k, f"expected two integers, got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if u >= n or v >= n:
            raise GgfParseError(k, f"endpoint out of range ({u}, {v}) for n={n}")
        if u == v:
            raise GgfParseError(k, f"loop ({u}, {v})")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GgfParseError(k, f"duplicate edge ({u}, {v})")
        seen.add(key)
        edges.append((u, v))
    return new_general_graph(n, edges)
