"""Bipartite host graphs with bit-packed adjacency.

A graph living inside K_{a,b} is stored as one integer bitmask per left
vertex (bit j set = edge to right vertex j).  Part sizes are part of the
identity: isolated vertices matter, so (a, b) is carried everywhere and two
graphs with different part sizes are never equal or isomorphic.

Canonical codes make isomorphism testable by byte comparison.  Two graphs
get the same code iff they differ only by relabeling within the left part,
relabeling within the right part, and (when a == b) swapping the parts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np


class BgfParseError(ValueError):
    """Raised on malformed BGF text; carries the 1-based offending line."""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


@dataclass(frozen=True)
class BipartiteGraph:
    a: int
    b: int
    rows: tuple[int, ...]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (left, right) pairs in lexicographic order."""
        out = []
        for i, r in enumerate(self.rows):
            while r:
                low = r & -r
                out.append((i, low.bit_length() - 1))
                r ^= low
        return out

    def columns(self) -> tuple[int, ...]:
        """Per-right-vertex bitmask of left neighbors."""
        cols = [0] * self.b
        for i, r in enumerate(self.rows):
            bit = 1 << i
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= bit
                r ^= low
        return tuple(cols)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def left_degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    def right_degrees(self) -> tuple[int, ...]:
        return tuple(c.bit_count() for c in self.columns())

    def transpose(self) -> "BipartiteGraph":
        return BipartiteGraph(self.b, self.a, self.columns())


def new_graph(a: int, b: int, edges) -> BipartiteGraph:
    """Build a graph from an edge list; duplicates collapse silently."""
    if a < 0 or b < 0:
        raise ValueError(f"part sizes must be nonnegative, got ({a}, {b})")
    rows = [0] * a
    for i, j in edges:
        if not (0 <= i < a and 0 <= j < b):
            raise ValueError(f"edge ({i}, {j}) out of range for parts ({a}, {b})")
        rows[i] |= 1 << j
    return BipartiteGraph(a, b, tuple(rows))


def pad(g: BipartiteGraph, a: int, b: int) -> BipartiteGraph:
    """The same edge set viewed inside a larger host K_{a,b}."""
    if a < g.a or b < g.b:
        raise ValueError(f"cannot pad ({g.a}, {g.b}) down to ({a}, {b})")
    return BipartiteGraph(a, b, g.rows + (0,) * (a - g.a))


def is_connected(g: BipartiteGraph) -> bool:
    """True iff all a+b vertices lie in one component (spanning).

    Isolated vertices disconnect; the empty graph on zero vertices counts
    as connected.
    """
    total = g.a + g.b
    if total == 0:
        return True
    cols = g.columns()
    if g.a == 0 or g.b == 0:
        return total == 1
    seen_l, seen_r = 1, 0
    frontier_l, frontier_r = 1, 0
    while frontier_l or frontier_r:
        new_r = 0
        fl = frontier_l
        while fl:
            low = fl & -fl
            new_r |= g.rows[low.bit_length() - 1]
            fl ^= low
        new_r &= ~seen_r
        seen_r |= new_r
        new_l = 0
        fr = frontier_r | new_r
        while fr:
            low = fr & -fr
            new_l |= cols[low.bit_length() - 1]
            fr ^= low
        new_l &= ~seen_l
        seen_l |= new_l
        frontier_l, frontier_r = new_l, 0
        if not new_l and not new_r:
            break
    return seen_l.bit_count() == g.a and seen_r.bit_count() == g.b


# ---------------------------------------------------------------------------
# Canonical coding
#
# Serialization of a graph under a fixed ordering of the right part: write
# each left row as a b-bit integer (first placed column = most significant
# bit), then sort the row integers ascending.  The canonical serialization
# is the lexicographic minimum of that tuple over all right orderings; the
# optimal left ordering is the sort, so only right orderings are searched.
# Minimum is found by branch and bound over column placements: identical
# columns are interchangeable (one representative tried), and a node is cut
# when even the best possible completion of every row cannot beat the
# incumbent.  When a == b the transpose is canonicalized too and the smaller
# serialization wins, making the code invariant under part swap.
# ---------------------------------------------------------------------------

_NUMPY_MAX_COLS = 7


@dataclass(frozen=True, order=True)
class CanonicalCode:
    data: bytes = field(repr=False)

    def hex(self) -> str:
        return self.data.hex()


@lru_cache(maxsize=None)
def _mask_value_table(b: int) -> np.ndarray:
    """table[m, p] = value of row bitmask m under the p-th column order."""
    perms = list(itertools.permutations(range(b)))
    weights = np.zeros((len(perms), b), dtype=np.int64)
    for p, perm in enumerate(perms):
        for pos, j in enumerate(perm):
            weights[p, j] = 1 << (b - 1 - pos)
    masks = np.arange(1 << b, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(b)) & 1  # (2^b, b)
    return bits @ weights.T  # (2^b, n_perms)


def _canon_rows_numpy(a: int, b: int, rows: tuple[int, ...]) -> tuple[int, ...]:
    if a == 0:
        return ()
    table = _mask_value_table(b)
    vals = table[np.fromiter(rows, dtype=np.int64, count=a)]  # (a, n_perms)
    vals = np.sort(vals, axis=0)
    if a * b <= 63:
        # rows fit one machine word: lexicographic min of sorted tuples is
        # the numeric min of their fixed-width packings
        shifts = np.arange(a - 1, -1, -1, dtype=np.int64) * b
        packed = (np.int64(1) << shifts) @ vals
        return (int(packed.min()),)
    order = np.lexsort(vals[::-1])  # first row is the most significant key
    return tuple(int(v) for v in vals[:, order[0]])


def _canon_rows_search(a: int, b: int, rows: tuple[int, ...]) -> tuple[int, ...]:
    if a == 0:
        return ()
    cols = [0] * b
    for i, r in enumerate(rows):
        bit = 1 << i
        for j in range(b):
            if r >> j & 1:
                cols[j] |= bit
    degs = [r.bit_count() for r in rows]
    best: list[tuple[int, ...] | None] = [None]

    def rec(placed_mask: int, depth: int, prefix: list[int]) -> None:
        rem = b - depth
        if rem == 0:
            cand = tuple(sorted(prefix))
            if best[0] is None or cand < best[0]:
                best[0] = cand
            return
        # identical unplaced columns are interchangeable: one representative
        seen = set()
        for j in range(b):
            if placed_mask >> j & 1:
                continue
            cj = cols[j]
            if cj in seen:
                continue
            seen.add(cj)
            nxt = [(p << 1) | (cj >> i & 1) for i, p in enumerate(prefix)]
            if best[0] is not None:
                shift = rem - 1
                bound = sorted(
                    (p << shift) | ((1 << (degs[i] - p.bit_count())) - 1)
                    for i, p in enumerate(nxt)
                )
                if tuple(bound) >= best[0]:
                    continue
            rec(placed_mask | (1 << j), depth + 1, nxt)

    rec(0, 0, [0] * a)
    assert best[0] is not None
    return best[0]


def _canon_rows(a: int, b: int, rows: tuple[int, ...]) -> tuple[int, ...]:
    if b <= _NUMPY_MAX_COLS:
        return _canon_rows_numpy(a, b, rows)
    return _canon_rows_search(a, b, rows)


def canonical_rows(g: BipartiteGraph) -> tuple[int, int, tuple[int, ...]]:
    """(a, b, minimal serialization), swap-invariant when a == b."""
    ser = _canon_rows(g.a, g.b, g.rows)
    if g.a == g.b and g.a > 0:
        ser_t = _canon_rows(g.b, g.a, g.columns())
        if ser_t < ser:
            ser = ser_t
    return g.a, g.b, ser


def within_part_key(a: int, b: int, rows: tuple[int, ...]) -> tuple[int, ...]:
    """Serialization invariant under within-part relabelings only (no part
    swap); a coarser-cost stand-in for memo tables where swap invariance is
    unnecessary."""
    return _canon_rows(a, b, rows)


def canonical_code(g: BipartiteGraph) -> CanonicalCode:
    a, b, ser = canonical_rows(g)
    text = f"{a} {b}|" + ",".join(map(str, ser))
    return CanonicalCode(text.encode("ascii"))


def are_isomorphic_brute(g: BipartiteGraph, h: BipartiteGraph) -> bool:
    """Reference isomorphism test: all within-part permutations, plus the
    part swap when a == b.  Exponential; for cross-checks at tiny sizes."""
    if (g.a, g.b) != (h.a, h.b):
        return False

    def match_fixed(x: BipartiteGraph, y: BipartiteGraph) -> bool:
        # right permutation applied to x, rows compared as multisets
        for perm in itertools.permutations(range(x.b)):
            permuted = []
            for r in x.rows:
                v = 0
                for pos, j in enumerate(perm):
                    if r >> j & 1:
                        v |= 1 << pos
                permuted.append(v)
            if sorted(permuted) == sorted(y.rows):
                return True
        return False

    if match_fixed(g, h):
        return True
    if g.a == g.b and match_fixed(g.transpose(), h):
        return True
    return False


# ---------------------------------------------------------------------------
# BGF text format (bit exact): header "a b", one "i j" line per edge with
# 0-based endpoints sorted lexicographically, every line newline-terminated,
# no comments or blank lines.
# ---------------------------------------------------------------------------


def serialize_bgf(g: BipartiteGraph) -> str:
    lines = [f"{g.a} {g.b}"]
    lines.extend(f"{i} {j}" for i, j in g.edges())
    return "\n".join(lines) + "\n"


def _parse_int_pair(line: str, line_no: int) -> tuple[int, int]:
    parts = line.split(" ")
    if len(parts) != 2 or not parts[0].isdigit() or not parts[1].isdigit():
        raise BgfParseError(line_no, f"expected two integers, got {line!r}")
    return int(parts[0]), int(parts[1])


def parse_bgf(text: str) -> BipartiteGraph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise BgfParseError(1, "empty input")
    a, b = _parse_int_pair(lines[0], 1)
    rows = [0] * a
    for k, line in enumerate(lines[1:], start=2):
        i, j = _parse_int_pair(line, k)
        if i >= a:
            raise BgfParseError(k, f"left endpoint {i} out of range (a={a})")
        if j >= b:
            raise BgfParseError(k, f"right endpoint {j} out of range (b={b})")
        if rows[i] >> j & 1:
            raise BgfParseError(k, f"duplicate edge ({i}, {j})")
        rows[i] |= 1 << j
    return BipartiteGraph(a, b, tuple(rows))
