"""Named lower-bound constructions, built as explicit graphs.

Every kind has a fixed vertex labeling (documented on its builder), a
closed-form edge count that the built graph must match exactly, and a
declared forbidden target that the embedder can verify it avoids.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graphs import BipartiteGraph, new_graph
from .patterns import Pattern, double_star, path, spider, star


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    params: tuple[int, ...]

    @property
    def name(self) -> str:
        return f"{self.kind}({','.join(map(str, self.params))})"


def spec(kind: str, *params: int) -> ConstructionSpec:
    if kind not in _KINDS:
        raise ValueError(f"unknown construction kind {kind!r}")
    arity = _KINDS[kind]
    if len(params) != arity:
        raise ValueError(f"{kind} takes {arity} parameters, got {len(params)}")
    return ConstructionSpec(kind, tuple(params))


_KINDS = {
    "disjoint_double_biclique": 3,
    "blocks_union": 2,
    "halved_blocks": 2,
    "circulant": 2,
    "matching": 1,
    "two_stars": 1,
    "spanning_double_star": 1,
    "theta": 1,
    "two_bicliques_2": 1,
    "connected_D22": 1,
    "spider_blocks": 2,
    "bridged_double_biclique": 3,
    "star_plus": 3,
}

_LITERAL = re.compile(r"^([a-zA-Z_][a-zA-Z0-9_]*)\(([^)]*)\)$")


def parse_spec(text: str) -> ConstructionSpec:
    """Parse "kind(p1,p2,...)"; keyword form "kind(n=5)" also accepted."""
    m = _LITERAL.match(text.strip().replace(" ", ""))
    if not m:
        raise ValueError(f"bad construction literal {text!r}")
    kind, body = m.group(1), m.group(2)
    params = []
    for item in body.split(",") if body else []:
        item = item.split("=")[-1]
        if not re.match(r"^\d+$", item):
            raise ValueError(f"bad parameter {item!r} in {text!r}")
        params.append(int(item))
    return spec(kind, *params)


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def _disjoint_double_biclique(s: int, a: int, b: int) -> BipartiteGraph:
    """K_{s,a-s} + K_{s,b-s} inside K_{a,b}.

    Component 1: lefts 0..a-s-1 x rights 0..s-1.
    Component 2: lefts a-s..a-1 x rights s..b-1.
    """
    _check(0 <= s <= min(a, b), f"need 0 <= s <= min(a,b), got s={s}, a={a}, b={b}")
    edges = [(i, j) for i in range(a - s) for j in range(s)]
    edges += [(i, j) for i in range(a - s, a) for j in range(s, b)]
    return new_graph(a, b, edges)


def _blocks_union(n: int, L: int) -> BipartiteGraph:
    """x copies of K_{L-1,L-1} plus one K_{y,y}, n = x(L-1) + y, 0 <= y < L-1.

    Block t occupies lefts/rights [t(L-1), (t+1)(L-1)); the remainder block
    sits at the tail.  For y in {0, 1} the tail is empty or a single edge;
    part sizes stay (n, n) either way.
    """
    _check(L >= 2, f"need L >= 2, got {L}")
    _check(n >= 1, f"need n >= 1, got {n}")
    x, y = divmod(n, L - 1)
    edges = []
    for t in range(x):
        base = t * (L - 1)
        edges += [(base + i, base + j) for i in range(L - 1) for j in range(L - 1)]
    base = x * (L - 1)
    edges += [(base + i, base + j) for i in range(y) for j in range(y)]
    return new_graph(n, n, edges)


def _halved_blocks(n: int, v: int) -> BipartiteGraph:
    """floor(2n/(v-1)) blocks K_{f,c} with f = floor((v-1)/2), c = v-1-f.

    Blocks alternate orientation (f lefts then c lefts) so both parts stay
    within n; leftover vertices are isolated.
    """
    _check(v >= 3, f"need v >= 3, got {v}")
    _check(n >= 1, f"need n >= 1, got {n}")
    f, c = (v - 1) // 2, (v - 1) - (v - 1) // 2
    k = (2 * n) // (v - 1)
    edges = []
    left_base = right_base = 0
    for t in range(k):
        nl, nr = (f, c) if t % 2 == 0 else (c, f)
        assert left_base + nl <= n and right_base + nr <= n
        edges += [
            (left_base + i, right_base + j) for i in range(nl) for j in range(nr)
        ]
        left_base += nl
        right_base += nr
    return new_graph(n, n, edges)


def _circulant(n: int, k: int) -> BipartiteGraph:
    """u_i adjacent to v_i, ..., v_{i+k-1}, subscripts mod n; k-regular."""
    _check(2 <= k <= n, f"need 2 <= k <= n, got k={k}, n={n}")
    edges = [(i, (i + t) % n) for i in range(n) for t in range(k)]
    return new_graph(n, n, edges)


def _matching(n: int) -> BipartiteGraph:
    """Perfect matching u_i ~ v_i."""
    _check(n >= 1, f"need n >= 1, got {n}")
    return new_graph(n, n, [(i, i) for i in range(n)])


def _two_stars(n: int) -> BipartiteGraph:
    """Two disjoint stars: u_0 ~ v_0..v_{n-2} and v_{n-1} ~ u_1..u_{n-1}."""
    _check(n >= 1, f"need n >= 1, got {n}")
    edges = [(0, j) for j in range(n - 1)]
    edges += [(i, n - 1) for i in range(1, n)]
    return new_graph(n, n, edges)


def _spanning_double_star(n: int) -> BipartiteGraph:
    """Adjacent centers u_0, v_0, each joined to the whole opposite part."""
    _check(n >= 1, f"need n >= 1, got {n}")
    edges = [(0, j) for j in range(n)] + [(i, 0) for i in range(1, n)]
    return new_graph(n, n, edges)


def _theta(n: int) -> BipartiteGraph:
    """Nonadjacent u = left 0 and v = right 0 of degree n-1, with a perfect
    matching x_i ~ y_i between their neighborhoods (x_i = left i, y_i =
    right i for 1 <= i <= n-1)."""
    _check(n >= 3, f"need n >= 3, got {n}")
    edges = [(0, i) for i in range(1, n)]
    edges += [(i, 0) for i in range(1, n)]
    edges += [(i, i) for i in range(1, n)]
    return new_graph(n, n, edges)


def _two_bicliques_2(n: int) -> BipartiteGraph:
    """2 K_{2,n-2}: lefts {0,1} x rights 0..n-3, rights {n-2,n-1} x lefts
    2..n-1."""
    _check(n >= 3, f"need n >= 3, got {n}")
    edges = [(i, j) for i in range(2) for j in range(n - 2)]
    edges += [(i, j) for i in range(2, n) for j in range(n - 2, n)]
    return new_graph(n, n, edges)


def _connected_d22(n: int) -> BipartiteGraph:
    """Connected graph with 4n-9 edges avoiding the (2,2) double star.

    0-based edges: (0,0), (0,1), (1,0), and for 3 <= j <= n-1 the quadruple
    (1,j), (2,j), (j,1), (j,2)."""
    _check(n >= 4, f"need n >= 4, got {n}")
    edges = [(0, 0), (0, 1), (1, 0)]
    for j in range(3, n):
        edges += [(1, j), (2, j), (j, 1), (j, 2)]
    return new_graph(n, n, edges)


def _spider_blocks(n: int, d: int) -> BipartiteGraph:
    """floor(n/(d+1)) copies of K_{d+1,d+1} plus a K_{r,r} remainder."""
    _check(d >= 1, f"need d >= 1, got {d}")
    _check(n >= 1, f"need n >= 1, got {n}")
    return _blocks_union(n, d + 2)


def _bridged_double_biclique(s: int, a: int, b: int) -> BipartiteGraph:
    """disjoint_double_biclique(s,a,b) minus one edge per component plus a
    bridge between the two degree-reduced vertices.

    Removed: (0, 0) from component 1 and (a-s, s) from component 2 (both
    lexicographically first); added: (0, s).  s >= 2 keeps the bridged
    endpoints attached to their components; each biclique needs two
    vertices on its large side or the removal strands one."""
    _check(2 <= s, f"need s >= 2, got {s}")
    _check(a >= s + 2 and b >= s + 2, f"need a,b >= s+2, got s={s}, a={a}, b={b}")
    g = _disjoint_double_biclique(s, a, b)
    edges = set(g.edges())
    edges.discard((0, 0))
    edges.discard((a - s, s))
    edges.add((0, s))
    return new_graph(a, b, sorted(edges))


def _star_plus(a: int, b: int, d: int) -> BipartiteGraph:
    """A d-regular circulant on (a-1, a-1) plus a disjoint star K_{1,b-a+1}
    centered at left a-1 with leaves right a-1..b-1."""
    _check(d >= 2, f"need d >= 2, got {d}")
    _check(a >= d + 1, f"need a >= d+1, got a={a}, d={d}")
    _check(b >= a, f"need b >= a, got a={a}, b={b}")
    m = a - 1
    edges = [(i, (i + t) % m) for i in range(m) for t in range(d)]
    edges += [(a - 1, j) for j in range(a - 1, b)]
    return new_graph(a, b, edges)


_BUILDERS = {
    "disjoint_double_biclique": _disjoint_double_biclique,
    "blocks_union": _blocks_union,
    "halved_blocks": _halved_blocks,
    "circulant": _circulant,
    "matching": _matching,
    "two_stars": _two_stars,
    "spanning_double_star": _spanning_double_star,
    "theta": _theta,
    "two_bicliques_2": _two_bicliques_2,
    "connected_D22": _connected_d22,
    "spider_blocks": _spider_blocks,
    "bridged_double_biclique": _bridged_double_biclique,
    "star_plus": _star_plus,
}


def build_construction(cs: ConstructionSpec) -> BipartiteGraph:
    return _BUILDERS[cs.kind](*cs.params)


def claimed_edge_count(cs: ConstructionSpec) -> int:
    kind, p = cs.kind, cs.params
    if kind == "disjoint_double_biclique":
        s, a, b = p
        _check(0 <= s <= min(a, b), f"need 0 <= s <= min(a,b), got {p}")
        return s * (a + b - 2 * s)
    if kind == "blocks_union":
        n, L = p
        _check(L >= 2 and n >= 1, f"bad parameters {p}")
        x, y = divmod(n, L - 1)
        return x * (L - 1) ** 2 + y * y
    if kind == "halved_blocks":
        n, v = p
        _check(v >= 3 and n >= 1, f"bad parameters {p}")
        f, c = (v - 1) // 2, (v - 1) - (v - 1) // 2
        return ((2 * n) // (v - 1)) * f * c
    if kind == "circulant":
        n, k = p
        _check(2 <= k <= n, f"bad parameters {p}")
        return k * n
    if kind == "matching":
        return p[0]
    if kind == "two_stars":
        return 2 * p[0] - 2
    if kind == "spanning_double_star":
        return 2 * p[0] - 1
    if kind == "theta":
        _check(p[0] >= 3, f"bad parameters {p}")
        return 3 * p[0] - 3
    if kind == "two_bicliques_2":
        _check(p[0] >= 3, f"bad parameters {p}")
        return 4 * p[0] - 8
    if kind == "connected_D22":
        _check(p[0] >= 4, f"bad parameters {p}")
        return 4 * p[0] - 9
    if kind == "spider_blocks":
        n, d = p
        _check(d >= 1 and n >= 1, f"bad parameters {p}")
        r = n % (d + 1)
        return (d + 1) * n - r * (d + 1 - r)
    if kind == "bridged_double_biclique":
        s, a, b = p
        _check(2 <= s and a >= s + 2 and b >= s + 2, f"bad parameters {p}")
        return s * (a + b - 2 * s) - 1
    if kind == "star_plus":
        a, b, d = p
        _check(d >= 2 and a >= d + 1 and b >= a, f"bad parameters {p}")
        return d * (a - 1) + (b - a + 1)
    raise ValueError(f"unknown kind {kind!r}")


def declared_target(cs: ConstructionSpec) -> Pattern | None:
    """Default forbidden pattern that the built graph is known to avoid."""
    kind, p = cs.kind, cs.params
    if kind in ("disjoint_double_biclique", "bridged_double_biclique"):
        s = p[0]
        return double_star(s, s) if s >= 1 else None
    if kind == "blocks_union":
        return path(2 * p[1])
    if kind == "halved_blocks":
        return path(p[1])
    if kind == "circulant":
        return star(p[1] + 1)
    if kind == "matching":
        return path(3)
    if kind == "two_stars":
        return path(4)
    if kind == "spanning_double_star":
        return path(5)
    if kind in ("theta", "two_bicliques_2", "connected_D22"):
        return double_star(2, 2)
    if kind == "spider_blocks":
        d = p[1]
        return spider(3, *([1] * d)) if d >= 2 else path(5)
    if kind == "star_plus":
        return spider(2, *([1] * p[2]))
    return None


def expected_connected(cs: ConstructionSpec) -> bool | None:
    """True/False when the kind pins connectivity down; None if it varies."""
    kind, p = cs.kind, cs.params
    if kind in ("theta", "spanning_double_star", "connected_D22",
                "bridged_double_biclique"):
        return True
    if kind == "circulant":
        return True  # k >= 2 enforced by the builder
    if kind == "matching":
        return p[0] == 1
    return None
