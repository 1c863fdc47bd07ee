"""Forbidden patterns: trees, small forests, and the all-trees-with-given
-part-sizes family.

A Pattern is a forest without isolated vertices.  Construction precomputes
everything the rest of the workbench needs: the 2-coloring, part sizes
(p <= q), maximum degree, and a per-component embedding plan (BFS order
from a centroid, parent before child) consumed by the embedder.

Part sizes of a multi-component pattern are the sums with every component
oriented smaller-class-first.  Components of a forest can flip
independently inside a host, so for forests this is a bookkeeping
convention, not a containment criterion; the embedder treats orientations
per component.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from functools import lru_cache

from .graphs import BipartiteGraph, canonical_code, new_graph


class CapExceeded(RuntimeError):
    """Family enumeration asked to go beyond the configured size cap."""


DEFAULT_FAMILY_CAP = 12


@dataclass(frozen=True)
class Pattern:
    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    colors: tuple[int, ...]
    p: int
    q: int
    max_degree: int
    plans: tuple[tuple[tuple[int, int | None], ...], ...]
    name: str
    key: bytes

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def part_sizes(self) -> tuple[int, int]:
        return (self.p, self.q)

    @property
    def is_tree(self) -> bool:
        return len(self.components) == 1

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Pattern({self.name})"


@dataclass(frozen=True)
class TreeFamily:
    """All trees whose 2-coloring classes have sizes k and l (k <= l)."""

    k: int
    l: int

    def __post_init__(self):
        if not (1 <= self.k <= self.l):
            raise ValueError(f"family needs 1 <= k <= l, got ({self.k}, {self.l})")

    @property
    def name(self) -> str:
        return f"T{self.k},{self.l}"

    def members(self, cap: int = DEFAULT_FAMILY_CAP) -> tuple[Pattern, ...]:
        return enumerate_trees_by_parts(self.k, self.l, cap=cap)


Target = Pattern | TreeFamily


def _components_of(n: int, adj) -> list[list[int]]:
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _centroid(comp: list[int], adj) -> int:
    """Vertex minimizing the largest branch; lowest index breaks ties."""
    comp_set = set(comp)
    size = {}
    order = []
    parent = {comp[0]: None}
    stack = [comp[0]]
    while stack:
        v = stack.pop()
        order.append(v)
        for w in adj[v]:
            if w in comp_set and w != parent[v]:
                parent[w] = v
                stack.append(w)
    for v in reversed(order):
        size[v] = 1 + sum(size[w] for w in adj[v] if parent.get(w) == v)
    total = len(comp)
    best_v, best_branch = None, total + 1
    for v in comp:
        branch = max(
            (size[w] if parent.get(w) == v else total - size[v])
            for w in adj[v]
        ) if adj[v] else 0
        if branch < best_branch or (branch == best_branch and v < best_v):
            best_v, best_branch = v, branch
    return best_v


def _bfs_plan(comp: list[int], root: int, adj) -> tuple[tuple[int, int | None], ...]:
    comp_set = set(comp)
    plan = [(root, None)]
    seen = {root}
    queue = [root]
    while queue:
        v = queue.pop(0)
        for w in sorted(adj[v]):
            if w in comp_set and w not in seen:
                seen.add(w)
                plan.append((w, v))
                queue.append(w)
    return tuple(plan)


def _color_component(comp: list[int], root: int, adj) -> dict[int, int]:
    colors = {root: 0}
    queue = [root]
    while queue:
        v = queue.pop(0)
        for w in adj[v]:
            if w not in colors:
                colors[w] = colors[v] ^ 1
                queue.append(w)
    return colors


def _pattern_key(n, components, colors, edges) -> bytes:
    """Isomorphism-complete key: minimum bipartite canonical code over all
    per-component orientation flips."""
    best = None
    for combo in range(1 << len(components)):
        side = {}
        for ci, comp in enumerate(components):
            flip = combo >> ci & 1
            for v in comp:
                side[v] = colors[v] ^ flip
        left = sorted(v for v in range(n) if side[v] == 0)
        right = sorted(v for v in range(n) if side[v] == 1)
        lidx = {v: i for i, v in enumerate(left)}
        ridx = {v: i for i, v in enumerate(right)}
        bip_edges = []
        for u, v in edges:
            if side[u] == 0:
                bip_edges.append((lidx[u], ridx[v]))
            else:
                bip_edges.append((lidx[v], ridx[u]))
        code = canonical_code(new_graph(len(left), len(right), bip_edges)).data
        if best is None or code < best:
            best = code
    return best


def from_edges(edge_list, name: str | None = None) -> Pattern:
    """Build a pattern from explicit edges; vertex labels are compacted.

    Rejects cycles and multi-edges.  Isolated vertices cannot be expressed
    (a vertex exists only via its edges), matching the standing assumption.
    """
    raw = list(edge_list)
    if not raw:
        raise ValueError("pattern needs at least one edge")
    verts = sorted({v for e in raw for v in e})
    relabel = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = set()
    for u, v in raw:
        u, v = relabel[u], relabel[v]
        if u == v:
            raise ValueError("loops are not allowed in a forest pattern")
        e = (min(u, v), max(u, v))
        if e in edges:
            raise ValueError(f"duplicate edge {e} in pattern")
        ru, rv = find(u), find(v)
        if ru == rv:
            raise ValueError(f"edge {e} closes a cycle; pattern must be a forest")
        parent[ru] = rv
        edges.add(e)
    sorted_edges = tuple(sorted(edges))
    adj_lists = [[] for _ in range(n)]
    for u, v in sorted_edges:
        adj_lists[u].append(v)
        adj_lists[v].append(u)
    adj = tuple(tuple(sorted(x)) for x in adj_lists)
    degrees = tuple(len(x) for x in adj)

    comps = _components_of(n, adj)
    colors = [0] * n
    for comp in comps:
        root = _centroid(comp, adj)
        local = _color_component(comp, root, adj)
        zeros = sum(1 for c in local.values() if c == 0)
        ones = len(local) - zeros
        # orient smaller class to color 0; tie goes to the class of the
        # lowest vertex for determinism
        flip = ones < zeros or (ones == zeros and local[comp[0]] == 1)
        for v, c in local.items():
            colors[v] = c ^ int(flip)
    p = sum(1 for c in colors if c == 0)
    q = n - p
    if p > q:
        colors = [c ^ 1 for c in colors]
        p, q = q, p

    comps_sorted = sorted(comps, key=len, reverse=True)
    plans = tuple(
        _bfs_plan(comp, _centroid(comp, adj), adj) for comp in comps_sorted
    )
    colors_t = tuple(colors)
    components = tuple(tuple(c) for c in comps_sorted)
    key = _pattern_key(n, components, colors_t, sorted_edges)
    if name is None:
        name = "E:" + ",".join(f"{u}-{v}" for u, v in sorted_edges)
    return Pattern(
        n=n,
        edges=sorted_edges,
        adj=adj,
        degrees=degrees,
        components=components,
        colors=colors_t,
        p=p,
        q=q,
        max_degree=max(degrees),
        plans=plans,
        name=name,
        key=key,
    )


def path(k: int) -> Pattern:
    if k < 2:
        raise ValueError(f"path needs at least 2 vertices, got {k}")
    return from_edges([(i, i + 1) for i in range(k - 1)], name=f"P{k}")


def star(k: int) -> Pattern:
    """K_{1,k}: one center with k leaves."""
    if k < 1:
        raise ValueError(f"star needs at least 1 leaf, got {k}")
    return from_edges([(0, i) for i in range(1, k + 1)], name=f"K1,{k}")


def spider(*legs: int) -> Pattern:
    """Legs of the given lengths glued at a common center (>= 3 legs)."""
    if len(legs) < 3:
        raise ValueError(f"spider needs at least 3 legs, got {len(legs)}")
    if any(l < 1 for l in legs):
        raise ValueError(f"spider legs must have length >= 1, got {legs}")
    edges = []
    nxt = 1
    for leg in legs:
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    name = "S" + ",".join(str(l) for l in sorted(legs, reverse=True))
    return from_edges(edges, name=name)


def double_star(s: int, t: int) -> Pattern:
    """Two adjacent centers carrying s and t pendant leaves."""
    if s < 1 or t < 1:
        raise ValueError(f"double star needs s, t >= 1, got ({s}, {t})")
    edges = [(0, 1)]
    nxt = 2
    for _ in range(s):
        edges.append((0, nxt))
        nxt += 1
    for _ in range(t):
        edges.append((1, nxt))
        nxt += 1
    return from_edges(edges, name=f"D{max(s, t)},{min(s, t)}")


def caterpillar(r: int, s: int, t: int) -> Pattern:
    """Three-vertex spine u-v-w with r, s, t pendant leaves respectively."""
    if r < 0 or s < 0 or t < 0:
        raise ValueError(f"caterpillar needs r, s, t >= 0, got ({r}, {s}, {t})")
    edges = [(0, 1), (1, 2)]
    nxt = 3
    for center, count in ((0, r), (1, s), (2, t)):
        for _ in range(count):
            edges.append((center, nxt))
            nxt += 1
    rr, tt = max(r, t), min(r, t)
    return from_edges(edges, name=f"Prst:{rr},{s},{tt}")


def union_patterns(*parts: Pattern) -> Pattern:
    """Vertex-disjoint union; exists for the small forest exclusions."""
    if not parts:
        raise ValueError("union needs at least one pattern")
    edges = []
    offset = 0
    for part in parts:
        edges.extend((u + offset, v + offset) for u, v in part.edges)
        offset += part.n
    name = "U(" + ",".join(sorted(p.name for p in parts)) + ")"
    return from_edges(edges, name=name)


def fits_host(pattern: Pattern, a: int, b: int) -> bool:
    """Part-size test with both sides normalized: p <= min, q <= max.

    Exact fit criterion for trees; a bookkeeping convention for forests
    (whose components may flip independently).
    """
    lo, hi = min(a, b), max(a, b)
    return pattern.p <= lo and pattern.q <= hi


# ---------------------------------------------------------------------------
# Small forests excluded from the connected-spanning problem: a spanning
# connected subgraph of K_{n,n} avoiding F exists for every n iff F is none
# of K_2, 2K_2, P_3, P_3+K_2, P_4.
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1)
def _excluded_keys() -> frozenset[bytes]:
    k2 = path(2)
    p3 = path(3)
    excluded = [
        k2,
        union_patterns(k2, k2),
        p3,
        union_patterns(p3, k2),
        path(4),
    ]
    return frozenset(p.key for p in excluded)


def exbc_defined(pattern: Pattern) -> bool:
    return pattern.key not in _excluded_keys()


# ---------------------------------------------------------------------------
# Free-tree enumeration.  Rooted trees come from the classic level-sequence
# successor walk (lexicographically descending canonical sequences); free
# trees are the rooted ones deduplicated by pattern key.  The family
# enumerator filters by 2-coloring class sizes.
# ---------------------------------------------------------------------------


def _rooted_level_sequences(n: int):
    if n == 1:
        yield [1]
        return
    levels = list(range(1, n + 1))
    while True:
        yield levels[:]
        p = None
        for i in range(n - 1, -1, -1):
            if levels[i] > 2:
                p = i
                break
        if p is None:
            return
        q = p - 1
        while levels[q] != levels[p] - 1:
            q -= 1
        for i in range(p, n):
            levels[i] = levels[i - (p - q)]


def _edges_from_levels(levels: list[int]) -> list[tuple[int, int]]:
    last_at_level = {levels[0]: 0}
    edges = []
    for i in range(1, len(levels)):
        edges.append((last_at_level[levels[i] - 1], i))
        last_at_level[levels[i]] = i
    return edges


@lru_cache(maxsize=None)
def free_trees(n: int) -> tuple[Pattern, ...]:
    """All free trees on n >= 2 vertices, one pattern per isomorphism class."""
    if n < 2:
        raise ValueError(f"free trees need n >= 2, got {n}")
    out: dict[bytes, Pattern] = {}
    for levels in _rooted_level_sequences(n):
        pat = from_edges(_edges_from_levels(levels))
        if pat.key not in out:
            out[pat.key] = replace(pat, name=shape_name(pat))
    return tuple(sorted(out.values(), key=lambda p: p.key))


def enumerate_trees_by_parts(
    k: int, l: int, cap: int = DEFAULT_FAMILY_CAP
) -> tuple[Pattern, ...]:
    """All trees with 2-coloring class sizes {k, l}, up to isomorphism."""
    if not (1 <= k <= l):
        raise ValueError(f"need 1 <= k <= l, got ({k}, {l})")
    if k + l > cap:
        raise CapExceeded(f"k + l = {k + l} exceeds the cap {cap}")
    return tuple(t for t in free_trees(k + l) if (t.p, t.q) == (k, l))


# ---------------------------------------------------------------------------
# Shape classification, used by the formula registry and literal emission.
# ---------------------------------------------------------------------------


def shape_path(p: Pattern) -> int | None:
    """P_k vertex count, or None."""
    if p.is_tree and p.max_degree <= 2:
        return p.n
    return None


def shape_star(p: Pattern) -> int | None:
    """Leaf count k of K_{1,k} with k >= 2, or None."""
    if p.is_tree and p.n >= 3 and p.max_degree == p.n - 1:
        return p.n - 1
    return None


def shape_spider(p: Pattern) -> tuple[int, ...] | None:
    """Leg lengths, descending, when exactly one vertex has degree >= 3."""
    if not p.is_tree:
        return None
    centers = [v for v in range(p.n) if p.degrees[v] >= 3]
    if len(centers) != 1:
        return None
    center = centers[0]
    legs = []
    for w in p.adj[center]:
        length, prev, cur = 1, center, w
        while p.degrees[cur] == 2:
            nxt = p.adj[cur][0] if p.adj[cur][0] != prev else p.adj[cur][1]
            prev, cur = cur, nxt
            length += 1
        legs.append(length)
    return tuple(sorted(legs, reverse=True))


def shape_double_star(p: Pattern) -> tuple[int, int] | None:
    """(s, t) with s >= t >= 1 for two adjacent centers, or None."""
    if not p.is_tree:
        return None
    internal = [v for v in range(p.n) if p.degrees[v] >= 2]
    if len(internal) != 2:
        return None
    u, v = internal
    if (min(u, v), max(u, v)) not in p.edges:
        return None
    s, t = p.degrees[u] - 1, p.degrees[v] - 1
    return (max(s, t), min(s, t))


def shape_caterpillar(p: Pattern) -> tuple[int, int, int] | None:
    """(r, s, t) with r >= t for a 3-vertex spine u-v-w, or None."""
    if not p.is_tree or p.n < 3:
        return None
    for v in range(p.n):
        for u in p.adj[v]:
            for w in p.adj[v]:
                if u >= w:
                    continue
                spine = {u, v, w}
                ok = all(
                    x in spine
                    or (p.degrees[x] == 1 and p.adj[x][0] in spine)
                    for x in range(p.n)
                )
                if ok:
                    r = sum(1 for x in p.adj[u] if p.degrees[x] == 1 and x not in spine)
                    s = sum(1 for x in p.adj[v] if p.degrees[x] == 1 and x not in spine)
                    t = sum(1 for x in p.adj[w] if p.degrees[x] == 1 and x not in spine)
                    if r + s + t + 3 == p.n:
                        rr, tt = max(r, t), min(r, t)
                        return (rr, s, tt)
    return None


def shape_name(p: Pattern) -> str:
    """Preferred display literal for a pattern: named shape when one fits."""
    if (k := shape_star(p)) is not None:
        return f"K1,{k}"
    if (k := shape_path(p)) is not None:
        return f"P{k}"
    if (legs := shape_spider(p)) is not None:
        return "S" + ",".join(str(l) for l in legs)
    if (st := shape_double_star(p)) is not None:
        return f"D{st[0]},{st[1]}"
    if (rst := shape_caterpillar(p)) is not None:
        return f"Prst:{rst[0]},{rst[1]},{rst[2]}"
    return "E:" + ",".join(f"{u}-{v}" for u, v in p.edges)


# ---------------------------------------------------------------------------
# Pattern literals.
# ---------------------------------------------------------------------------

_SPIDER_ITEM = re.compile(r"^(\d+)(?:\*(\d+))?$")


def _split_top_level(s: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_target(text: str) -> Target:
    """Parse a pattern or family literal.

    Grammar: "P5" path, "K2" single edge, "K1,4" star, "S3,1,1" spider
    ("S2,3*1" expands 3*1 to three legs of length 1), "D2,2" double star,
    "Prst:1,1,2" caterpillar, "T3,3" family, "U(P3,K2)" disjoint union,
    "E:0-1,1-2" explicit forest edges.
    """
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty pattern literal")
    if s.startswith("U(") and s.endswith(")"):
        inner = _split_top_level(s[2:-1])
        members = [parse_target(m) for m in inner]
        if any(isinstance(m, TreeFamily) for m in members):
            raise ValueError("families cannot appear inside a union literal")
        return union_patterns(*members)
    if s.startswith("E:"):
        body = s[2:]
        edges = []
        for item in body.split(","):
            m = re.match(r"^(\d+)-(\d+)$", item)
            if not m:
                raise ValueError(f"bad edge item {item!r} in {text!r}")
            edges.append((int(m.group(1)), int(m.group(2))))
        return from_edges(edges)
    if s.startswith("Prst:"):
        nums = s[5:].split(",")
        if len(nums) != 3 or not all(x.isdigit() for x in nums):
            raise ValueError(f"bad caterpillar literal {text!r}")
        r, mid, t = (int(x) for x in nums)
        return caterpillar(r, mid, t)
    head, body = s[0], s[1:]
    if head == "P" and body.isdigit():
        return path(int(body))
    if head == "T":
        nums = body.split(",")
        if len(nums) == 2 and all(x.isdigit() for x in nums):
            k, l = int(nums[0]), int(nums[1])
            return TreeFamily(min(k, l), max(k, l))
        raise ValueError(f"bad family literal {text!r}")
    if head == "K":
        if body.isdigit():
            if int(body) == 2:
                return path(2)
            raise ValueError(f"complete-graph literal {text!r} is not a tree")
        nums = body.split(",")
        if len(nums) == 2 and all(x.isdigit() for x in nums):
            x, y = int(nums[0]), int(nums[1])
            if min(x, y) != 1:
                raise ValueError(f"{text!r} is not a tree (needs K1,k)")
            return star(max(x, y)) if max(x, y) >= 2 else path(2)
        raise ValueError(f"bad biclique literal {text!r}")
    if head == "D":
        nums = body.split(",")
        if len(nums) == 2 and all(x.isdigit() for x in nums):
            return double_star(int(nums[0]), int(nums[1]))
        raise ValueError(f"bad double-star literal {text!r}")
    if head == "S":
        legs = []
        for item in body.split(","):
            m = _SPIDER_ITEM.match(item)
            if not m:
                raise ValueError(f"bad spider item {item!r} in {text!r}")
            if m.group(2) is None:
                legs.append(int(m.group(1)))
            else:
                legs.extend([int(m.group(2))] * int(m.group(1)))
        return spider(*legs)
    raise ValueError(f"unrecognized pattern literal {text!r}")


def target_name(target: Target) -> str:
    return target.name
